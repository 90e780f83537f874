use super::{
    build_cayley, build_kac, build_quaternions, build_tkk, cayley_characters, left_mult_matrices, odd_extension, sl2_matrices,
    BuiltAlgebra, ConstructionError,
};
use crate::abgroup::GradingGroup;
use crate::exactla::{unit_vec, zero_vec, Mat};
use crate::gradinglab::Grading;
use crate::scalars::Scalar;
use crate::superalg::{LinMap, ModuleAction};

/// The three models of `F(4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum F4Model {
    /// `sl2 + so(C0) + V (x) C`, with `so(C0)` acting on `C` through the spin representation.
    Cayley,
    /// `tkk(K10)`.
    Tkk,
    /// `a1 + b3 + Q (x) Q`, with designated grading by `Z_2^3 x Z_4`.
    Quaternion,
}

/// Pairs `(a, b)` with `1 <= a < b <= 7`, in the order of the `R_ab` basis of `so(C0)`.
pub fn rotation_pairs() -> Vec<(usize, usize)> {
    (1..8).flat_map(|a| (a + 1..8).map(move |b| (a, b))).collect()
}

/// Action of `R_ab = E_ab - E_ba` on `C` by `-1/4 [l_a, l_b]`.
pub fn spin_matrices() -> Result<Vec<Mat>, ConstructionError> {
    let c = build_cayley()?;
    let l = left_mult_matrices(&c.algebra);
    rotation_pairs()
        .into_iter()
        .map(|(a, b)| Ok(l[a - 1].commutator(&l[b - 1])?.scale(&Scalar::frac(-1, 4))))
        .collect()
}

/// `a1` by `x (x) y -> -x (x) y q` and `b3` spanned by the commutators
/// `[Phi_wi, Phi_wj]` with `Phi_{a (x) b (x) c}(x (x) y) = a x bbar (x) c y`.
/// Module basis `x (x) y` at index `4x + y` over `1, q1, q2, q3`.
pub fn quaternion_model_action() -> Result<ModuleAction, ConstructionError> {
    quaternion_model().map(|(_, act)| act)
}

pub(crate) const W: [[usize; 3]; 7] = [[1, 0, 0], [3, 0, 0], [2, 0, 1], [2, 0, 3], [2, 1, 2], [2, 3, 2], [2, 2, 2]];
pub(crate) const W_DEG: [[i64; 4]; 7] =
    [[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 0], [0, 1, 1, 1], [1, 1, 0, 1], [1, 0, 0, 1], [0, 0, 0, 1]];
const Q_DEG: [[i64; 2]; 4] = [[0, 0], [1, 0], [0, 1], [1, 1]];
const Q_DEG_PRIME: [[i64; 2]; 4] = [[0, 1], [1, 1], [0, 3], [1, 3]];

fn w_pairs() -> Vec<(usize, usize)> {
    (0..7).flat_map(|i| (i + 1..7).map(move |j| (i, j))).collect()
}

fn quaternion_model() -> Result<(crate::superalg::SuperAlgebra, ModuleAction), ConstructionError> {
    let q = build_quaternions()?;
    let qa = &q.algebra;
    let bar = &q.map("involution").expect("involution").matrix;
    let left = |k: usize| qa.left_mul(&qa.basis(k));
    let right = |k: usize| {
        let cols: Vec<_> = (0..4).map(|j| qa.multiply(&qa.basis(j), &qa.basis(k))).collect();
        Mat::from_cols(&cols, 4).expect("4x4")
    };
    let id4 = Mat::identity(4);
    let mut action: Vec<Mat> = (1..4).map(|k| id4.kron(&right(k)).scale(&Scalar::from_int(-1))).collect();
    let phi: Vec<Mat> = W
        .iter()
        .map(|&[a, b, c]| {
            let bbar = &bar[(b, b)];
            left(a).mul(&right(b)).expect("4x4").scale(bbar).kron(&left(c))
        })
        .collect();
    for (i, j) in w_pairs() {
        action.push(phi[i].commutator(&phi[j])?);
    }
    let mut g0_labels: Vec<String> = ["q1", "q2", "q3"].iter().map(|s| s.to_string()).collect();
    g0_labels.extend(w_pairs().into_iter().map(|(i, j)| format!("[w{},w{}]", i + 1, j + 1)));
    let module_labels = (0..16).map(|k| format!("{}.{}", qa.label(k / 4), qa.label(k % 4))).collect();
    odd_extension(action, g0_labels, module_labels)
}

fn quaternion_grading() -> Result<Grading, ConstructionError> {
    let group = GradingGroup::new(0, vec![2, 2, 2, 4]).expect("valid group");
    let mut coords: Vec<Vec<i64>> = vec![vec![0, 0, 1, 0], vec![0, 0, 0, 2], vec![0, 0, 1, 2]];
    for (i, j) in w_pairs() {
        let s: Vec<i64> = (0..4).map(|k| (W_DEG[i][k] + W_DEG[j][k]) % 2).collect();
        coords.push(vec![s[0], s[1], s[2], 2 * s[3]]);
    }
    for x in 0..4 {
        for y in 0..4 {
            coords.push(vec![Q_DEG[x][0], Q_DEG[x][1], Q_DEG_PRIME[y][0], Q_DEG_PRIME[y][1]]);
        }
    }
    Ok(Grading::from_coords(group, &coords)?)
}

fn cayley_model() -> Result<BuiltAlgebra, ConstructionError> {
    let c = build_cayley()?;
    let spin = spin_matrices()?;
    let id8 = Mat::identity(8);
    let id2 = Mat::identity(2);
    let mut action: Vec<Mat> = sl2_matrices().iter().map(|x| x.kron(&id8)).collect();
    action.extend(spin.iter().map(|r| id2.kron(r)));
    let mut g0_labels: Vec<String> = ["h", "e", "f"].iter().map(|s| s.to_string()).collect();
    g0_labels.extend(rotation_pairs().into_iter().map(|(a, b)| format!("R{a}{b}")));
    let module_labels = ["u", "v"].iter().flat_map(|s| c.algebra.labels().iter().map(move |l| format!("{s}.{l}"))).collect();
    let (alg, _) = odd_extension(action, g0_labels, module_labels)?;
    let n = alg.dim();
    let mut b = BuiltAlgebra::new("F(4) Cayley model", alg);
    b.extras.elements.insert("h".into(), unit_vec(n, 0));
    let pairs = rotation_pairs();
    for (p, q) in [(4, 5), (2, 6), (1, 3)] {
        let k = pairs.iter().position(|&x| x == (p, q)).expect("pair");
        let mut t = zero_vec(n);
        t[3 + k] = &Scalar::from_int(2) * &Scalar::i();
        b.extras.elements.insert(format!("t{p}{q}"), t);
    }
    for (k, chi) in cayley_characters(&c).into_iter().enumerate() {
        let signs: Vec<Scalar> = pairs.iter().map(|&(p, q)| &chi[(p, p)] * &chi[(q, q)]).collect();
        let m = Mat::block_diag(&[&Mat::identity(3), &Mat::diag(&signs), &id2.kron(&chi)]);
        b.extras.maps.insert(format!("chi{}", k + 1), LinMap::even(m));
    }
    Ok(b)
}

/// Builds the requested model of `F(4)`.
pub fn build_f4(model: F4Model) -> Result<BuiltAlgebra, ConstructionError> {
    match model {
        F4Model::Cayley => cayley_model(),
        F4Model::Tkk => {
            let (_, k10) = build_kac()?;
            let mut b = build_tkk(&k10)?.built;
            b.name = "F(4) tkk model".into();
            Ok(b)
        }
        F4Model::Quaternion => {
            let (alg, _) = quaternion_model()?;
            let mut b = BuiltAlgebra::new("F(4) quaternion model", alg);
            b.gradings.push(("Z2^3xZ4".into(), quaternion_grading()?));
            Ok(b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradinglab::{grading_type, GradingType};
    use crate::superalg::{check_homomorphism, check_lie_super, invariant_pairings_into, is_derivation, lie_from_maps};

    #[test]
    fn spin_action_is_a_representation_of_so7() {
        let rots: Vec<LinMap> = rotation_pairs()
            .into_iter()
            .map(|(a, b)| {
                let mut m = Mat::zeros(7, 7);
                m[(a - 1, b - 1)] = Scalar::one();
                m[(b - 1, a - 1)] = Scalar::from_int(-1);
                LinMap::even(m)
            })
            .collect();
        let spin: Vec<LinMap> = spin_matrices().unwrap().into_iter().map(LinMap::even).collect();
        let labels: Vec<String> = (0..21).map(|k| k.to_string()).collect();
        let so7 = lie_from_maps(&rots, labels.clone()).unwrap();
        let image = lie_from_maps(&spin, labels).unwrap();
        for i in 0..21 {
            for j in 0..21 {
                assert_eq!(so7.basis_product(i, j), image.basis_product(i, j));
            }
        }
    }

    #[test]
    fn cayley_model() {
        let f = build_f4(F4Model::Cayley).unwrap();
        let a = &f.algebra;
        assert_eq!((a.even_dim(), a.odd_dim()), (24, 16));
        assert!(check_lie_super(a).ok());
        for t in ["h", "t45", "t26", "t13"] {
            assert!(is_derivation(a, &LinMap::even(a.left_mul(f.element(t).unwrap()))));
        }
        for k in 1..=3 {
            assert!(check_homomorphism(a, a, f.map(&format!("chi{k}")).unwrap()));
        }
    }

    #[test]
    fn quaternion_model_and_grading() {
        let f = build_f4(F4Model::Quaternion).unwrap();
        let a = &f.algebra;
        assert_eq!((a.even_dim(), a.odd_dim()), (24, 16));
        assert!(check_lie_super(a).ok());
        assert!(f.failing_gradings().unwrap().is_empty());
        assert_eq!(grading_type(f.grading("Z2^3xZ4").unwrap()), GradingType(vec![24, 6, 0, 1]));
    }

    #[test]
    fn pairing_into_a1_is_unique() {
        let act = quaternion_model_action().unwrap();
        assert_eq!(invariant_pairings_into(&act, &[0, 1, 2]).len(), 1);
    }
}
