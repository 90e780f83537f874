use super::{AlgebraError, Flags, LinMap, Parity, SuperAlgebra};
use crate::exactla::{zero_vec, Mat, SparseSystem, SpanCoords, Vector};
use crate::scalars::Scalar;
use std::collections::BTreeMap;

/// The superderivations of an algebra together with their bracket.
#[derive(Debug, Clone)]
pub struct Derivations {
    /// Basis of derivations as linear maps, even ones first.
    pub maps: Vec<LinMap>,
    /// Lie superalgebra structure under the supercommutator, in the same basis.
    pub algebra: SuperAlgebra,
}

fn solve_parity(a: &SuperAlgebra, dp: Parity) -> Vec<Mat> {
    let n = a.dim();
    // unknown d[k][l]: coefficient of e_k in d(e_l)
    let mut var = vec![None; n * n];
    let mut nvars = 0;
    for k in 0..n {
        for l in 0..n {
            if a.parity(k) == a.parity(l).plus(dp) {
                var[k * n + l] = Some(nvars);
                nvars += 1;
            }
        }
    }
    let mut sys = SparseSystem::new(nvars);
    for i in 0..n {
        let s = Scalar::from_int(dp.sign(a.parity(i)));
        for j in 0..n {
            let mut eqs: BTreeMap<usize, Vec<(usize, Scalar)>> = BTreeMap::new();
            for (l, c) in a.basis_product(i, j) {
                for k in 0..n {
                    if let Some(v) = var[k * n + l] {
                        eqs.entry(k).or_default().push((v, c.clone()));
                    }
                }
            }
            for l in 0..n {
                if let Some(v) = var[l * n + i] {
                    for (k, c) in a.basis_product(l, j) {
                        eqs.entry(*k).or_default().push((v, -c));
                    }
                }
                if let Some(v) = var[l * n + j] {
                    for (k, c) in a.basis_product(i, l) {
                        eqs.entry(*k).or_default().push((v, -(&s * c)));
                    }
                }
            }
            for (_, terms) in eqs {
                sys.add_equation(terms);
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|x| {
            let mut m = Mat::zeros(n, n);
            for k in 0..n {
                for l in 0..n {
                    if let Some(v) = var[k * n + l] {
                        m[(k, l)] = x[v].clone();
                    }
                }
            }
            m
        })
        .collect()
}

pub(crate) fn flatten(m: &Mat) -> Vector {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// Supercommutator `d1 d2 - (-1)^{|d1||d2|} d2 d1`.
pub fn supercommutator(d1: &LinMap, d2: &LinMap) -> Mat {
    let a = d1.matrix.mul(&d2.matrix).expect("square");
    let b = d2.matrix.mul(&d1.matrix).expect("square");
    let s = Scalar::from_int(d1.parity.sign(d2.parity));
    a.sub(&b.scale(&s)).expect("square")
}

/// Lie superalgebra spanned by homogeneous linear maps closed under the supercommutator.
pub fn lie_from_maps(maps: &[LinMap], labels: Vec<String>) -> Result<SuperAlgebra, AlgebraError> {
    let n = maps.len();
    if n == 0 {
        return SuperAlgebra::from_entries(labels, Vec::new(), Flags::LIE, []);
    }
    let coords = SpanCoords::new(maps.iter().map(|m| flatten(&m.matrix)).collect())?;
    let mut err = None;
    let parity = maps.iter().map(|m| m.parity).collect();
    let alg = SuperAlgebra::from_fn(labels.clone(), parity, Flags::LIE, |i, j| {
        match coords.coords(&flatten(&supercommutator(&maps[i], &maps[j]))) {
            Some(c) => c,
            None => {
                err.get_or_insert_with(|| format!("[{}, {}]", labels[i], labels[j]));
                zero_vec(n)
            }
        }
    })?;
    match err {
        Some(e) => Err(AlgebraError::NotClosed(e)),
        None => Ok(alg),
    }
}

/// All even and odd superderivations, solved as two separate linear systems.
pub fn derivations(a: &SuperAlgebra) -> Result<Derivations, AlgebraError> {
    let mut maps: Vec<LinMap> = solve_parity(a, Parity::Even).into_iter().map(LinMap::even).collect();
    maps.extend(solve_parity(a, Parity::Odd).into_iter().map(LinMap::odd));
    let labels = maps
        .iter()
        .enumerate()
        .map(|(i, m)| format!("d{}{}", i, if m.parity == Parity::Odd { "'" } else { "" }))
        .collect();
    let algebra = lie_from_maps(&maps, labels)?;
    Ok(Derivations { maps, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{check_lie_super, is_derivation};

    #[test]
    fn unit_algebra_has_no_derivations() {
        let a = SuperAlgebra::from_entries(vec!["1".into()], vec![Parity::Even], Flags::ASSOCIATIVE, [(0, 0, 0, Scalar::one())])
            .unwrap();
        assert_eq!(derivations(&a).unwrap().maps.len(), 0);
    }

    #[test]
    fn dual_numbers() {
        // F[t]/(t^2): derivations d(t) = c t, one-dimensional
        let a = SuperAlgebra::from_entries(
            vec!["1".into(), "t".into()],
            vec![Parity::Even; 2],
            Flags::ASSOCIATIVE,
            [(0, 0, 0, Scalar::one()), (0, 1, 1, Scalar::one()), (1, 0, 1, Scalar::one())],
        )
        .unwrap();
        let d = derivations(&a).unwrap();
        assert_eq!(d.maps.len(), 1);
        assert!(is_derivation(&a, &d.maps[0]));
        assert!(check_lie_super(&d.algebra).ok());
    }

    #[test]
    fn grassmann_odd_derivations() {
        // exterior algebra on one odd generator: 1, x with x^2 = 0
        let a = SuperAlgebra::from_entries(
            vec!["1".into(), "x".into()],
            vec![Parity::Even, Parity::Odd],
            Flags::ASSOCIATIVE,
            [(0, 0, 0, Scalar::one()), (0, 1, 1, Scalar::one()), (1, 0, 1, Scalar::one())],
        )
        .unwrap();
        let d = derivations(&a).unwrap();
        // even: x -> x ; odd: x -> 1
        assert_eq!(d.algebra.even_dim(), 1);
        assert_eq!(d.algebra.odd_dim(), 1);
        for m in &d.maps {
            assert!(is_derivation(&a, m));
        }
        assert!(check_lie_super(&d.algebra).ok());
    }
}
