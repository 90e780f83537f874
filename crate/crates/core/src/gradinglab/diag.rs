use super::{Grading, GradingError};
use crate::abgroup::GradingGroup;
use crate::exactla::{joint_eigenspaces, Mat, Vector};
use crate::scalars::{root_of_unity, CycNumber, Scalar};
use crate::superalg::{check_homomorphism, is_derivation, LinMap, Parity, SuperAlgebra};

/// Largest absolute torus weight looked for.
const MAX_WEIGHT: i64 = 12;

/// Commuting diagonalizable operators whose joint eigenspaces form a grading:
/// semisimple derivations with integer eigenvalues (a torus) and finite order automorphisms.
#[derive(Debug, Clone, Default)]
pub struct DiagGenerators {
    pub torus: Vec<Mat>,
    /// Automorphisms with their orders.
    pub finite: Vec<(Mat, u32)>,
}

impl DiagGenerators {
    pub fn new(torus: Vec<Mat>, finite: Vec<(Mat, u32)>) -> Self {
        DiagGenerators { torus, finite }
    }

    /// Checks the derivation, automorphism and order conditions.
    pub fn validate(&self, alg: &SuperAlgebra) -> Result<(), GradingError> {
        for (i, d) in self.torus.iter().enumerate() {
            if !is_derivation(alg, &LinMap::even(d.clone())) {
                return Err(GradingError::NotDerivation(i));
            }
        }
        let n = alg.dim();
        for (i, (m, order)) in self.finite.iter().enumerate() {
            if *order == 0 || m.pow(*order)? != Mat::identity(n) {
                return Err(GradingError::BadOrder { index: i, order: *order });
            }
            if !check_homomorphism(alg, alg, &LinMap::even(m.clone())) {
                return Err(GradingError::NotAutomorphism(i));
            }
        }
        Ok(())
    }
}

fn parity_operator(alg: &SuperAlgebra) -> Mat {
    let d: Vec<Scalar> = alg
        .parities()
        .iter()
        .map(|p| Scalar::from_int(if *p == Parity::Even { 1 } else { -1 }))
        .collect();
    Mat::diag(&d)
}

/// Grading by the joint eigenspaces of the generators, over
/// `Z^(#torus) x Z_(order_1) x ...` (automorphisms of order 1 contribute no factor).
/// The result carries the homogeneous basis it was computed on.
pub fn grading_from_diag(alg: &SuperAlgebra, gens: &DiagGenerators) -> Result<Grading, GradingError> {
    gens.validate(alg)?;
    let n = alg.dim();
    let mut mats = vec![parity_operator(alg)];
    mats.extend(gens.torus.iter().cloned());
    mats.extend(gens.finite.iter().map(|(m, _)| m.clone()));
    let mut candidates: Vec<CycNumber> = (-MAX_WEIGHT..=MAX_WEIGHT).map(CycNumber::from_int).collect();
    let mut roots: Vec<(u32, Vec<CycNumber>)> = Vec::new();
    for (_, order) in &gens.finite {
        let z = root_of_unity(*order)?;
        let powers: Vec<CycNumber> = (0..*order).map(|k| z.pow(k)).collect();
        for p in &powers {
            if !candidates.contains(p) {
                candidates.push(p.clone());
            }
        }
        roots.push((*order, powers));
    }
    let blocks = joint_eigenspaces(&mats, &candidates)?;
    let torsion: Vec<u64> = gens.finite.iter().map(|(_, o)| *o as u64).filter(|&o| o > 1).collect();
    let group = GradingGroup::new(gens.torus.len(), torsion)?;
    let mut basis: Vec<Vector> = Vec::with_capacity(n);
    let mut degrees = Vec::with_capacity(n);
    for b in blocks {
        let t = gens.torus.len();
        let mut free = Vec::with_capacity(t);
        for l in &b.eigenvalues[1..=t] {
            let w = l.as_rat().and_then(|r| r.to_i64()).ok_or(GradingError::NonIntegerWeight)?;
            free.push(w);
        }
        let mut tors = Vec::new();
        for (l, (order, powers)) in b.eigenvalues[t + 1..].iter().zip(&roots) {
            let k = powers.iter().position(|p| p == l).ok_or(GradingError::NonIntegerWeight)?;
            if *order > 1 {
                tors.push(k as i64);
            }
        }
        let deg = group.element(&free, &tors)?;
        for v in b.basis {
            basis.push(v);
            degrees.push(deg.clone());
        }
    }
    let p = Mat::from_cols(&basis, n)?;
    Ok(Grading::new(group, degrees).with_basis(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradinglab::{grading_type, verify_grading, GradingType};
    use crate::superalg::Flags;

    fn sl2() -> SuperAlgebra {
        SuperAlgebra::from_entries(
            vec!["h".into(), "e".into(), "f".into()],
            vec![Parity::Even; 3],
            Flags::LIE,
            [
                (0, 1, 1, Scalar::from_int(2)),
                (1, 0, 1, Scalar::from_int(-2)),
                (0, 2, 2, Scalar::from_int(-2)),
                (2, 0, 2, Scalar::from_int(2)),
                (1, 2, 0, Scalar::one()),
                (2, 1, 0, Scalar::from_int(-1)),
            ],
        )
        .unwrap()
    }

    #[test]
    fn identity_gives_trivial_grading() {
        let a = sl2();
        let g = grading_from_diag(&a, &DiagGenerators::new(vec![], vec![(Mat::identity(3), 1)])).unwrap();
        assert_eq!(grading_type(&g), GradingType(vec![0, 0, 1]));
    }

    #[test]
    fn ad_h_gives_root_grading() {
        let a = sl2();
        let adh = a.left_mul(&a.basis(0));
        let g = grading_from_diag(&a, &DiagGenerators::new(vec![adh], vec![])).unwrap();
        assert!(verify_grading(&a, &g).unwrap().ok);
        assert_eq!(grading_type(&g), GradingType(vec![3]));
    }

    #[test]
    fn non_automorphism_rejected() {
        let a = sl2();
        let m = Mat::diag(&[Scalar::one(), Scalar::from_int(-1), Scalar::one()]);
        let r = grading_from_diag(&a, &DiagGenerators::new(vec![], vec![(m, 2)]));
        assert!(matches!(r, Err(GradingError::NotAutomorphism(0))));
    }
}
