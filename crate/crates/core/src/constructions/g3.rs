use super::{build_cayley, cayley_characters, conjugation_matrix, odd_extension, sl2_matrices, BuiltAlgebra, ConstructionError};
use crate::exactla::{unit_vec, zero_vec, Mat};
use crate::scalars::Scalar;
use crate::superalg::derivations::flatten;
use crate::superalg::{derivations, LinMap};

/// `G(3) = sl2 + der(C) + V (x) C0` with `der(C)` of type `G2` acting on the
/// trace zero octonions. Basis: `h, e, f`, fourteen derivations, then
/// `u.e_a, v.e_a` at index `17 + 7s + (a - 1)`.
///
/// Extras: elements `h`, `t1`, `t2` (a Cartan subalgebra with integer
/// eigenvalues) and the three character automorphisms `chi1..chi3`.
pub fn build_g3() -> Result<BuiltAlgebra, ConstructionError> {
    let c = build_cayley()?;
    let inner: Vec<usize> = (1..8).collect();
    let der: Vec<Mat> = derivations(&c.algebra)?.maps.iter().map(|m| m.matrix.select(&inner, &inner)).collect();
    let id7 = Mat::identity(7);
    let id2 = Mat::identity(2);
    let mut action: Vec<Mat> = sl2_matrices().iter().map(|x| x.kron(&id7)).collect();
    action.extend(der.iter().map(|d| id2.kron(d)));
    let mut g0_labels: Vec<String> = ["h", "e", "f"].iter().map(|s| s.to_string()).collect();
    g0_labels.extend((0..der.len()).map(|k| format!("D{k}")));
    let module_labels = ["u", "v"].iter().flat_map(|s| (1..8).map(move |a| format!("{s}.e{a}"))).collect();
    let (alg, _) = odd_extension(action, g0_labels, module_labels)?;
    let n = alg.dim();
    let mut b = BuiltAlgebra::new("G(3)", alg);
    b.extras.elements.insert("h".into(), unit_vec(n, 0));

    // der(C) meets span{R45, R26, R13} in a Cartan subalgebra of G2
    let rot = |p: usize, q: usize| {
        let mut m = Mat::zeros(7, 7);
        m[(p - 1, q - 1)] = Scalar::one();
        m[(q - 1, p - 1)] = Scalar::from_int(-1);
        m
    };
    let rots = [rot(4, 5), rot(2, 6), rot(1, 3)];
    let mut cols: Vec<Vec<Scalar>> = der.iter().map(flatten).collect();
    cols.extend(rots.iter().map(|r| flatten(&r.scale(&Scalar::from_int(-1)))));
    let sys = Mat::from_cols(&cols, 49)?;
    for (t, k) in sys.kernel().into_iter().enumerate() {
        let mut x = zero_vec(n);
        for (j, v) in k.iter().take(der.len()).enumerate() {
            x[3 + j] = &Scalar::i() * v;
        }
        b.extras.elements.insert(format!("t{}", t + 1), x);
    }

    for (k, chi) in cayley_characters(&c).into_iter().enumerate() {
        let chi7 = chi.select(&inner, &inner);
        let m = Mat::block_diag(&[&Mat::identity(3), &conjugation_matrix(&der, &chi7)?, &id2.kron(&chi7)]);
        b.extras.maps.insert(format!("chi{}", k + 1), LinMap::even(m));
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{check_homomorphism, check_lie_super, is_derivation};

    #[test]
    fn g3_dimensions_and_axioms() {
        let g = build_g3().unwrap();
        let a = &g.algebra;
        assert_eq!((a.even_dim(), a.odd_dim()), (17, 14));
        assert!(check_lie_super(a).ok());
    }

    #[test]
    fn g3_extras() {
        let g = build_g3().unwrap();
        let a = &g.algebra;
        for t in ["h", "t1", "t2"] {
            let x = g.element(t).unwrap();
            assert!(is_derivation(a, &LinMap::even(a.left_mul(x))), "{t}");
        }
        for k in 1..=3 {
            assert!(check_homomorphism(a, a, g.map(&format!("chi{k}")).unwrap()));
        }
    }
}
