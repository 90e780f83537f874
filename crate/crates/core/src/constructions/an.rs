use super::{BuiltAlgebra, ConstructionError};
use crate::abgroup::GradingGroup;
use crate::exactla::zero_vec;
use crate::gradinglab::Grading;
use crate::scalars::{root_of_unity, Scalar};
use crate::superalg::{Flags, Parity, SuperAlgebra};

/// The algebra generated by `x, y` with `x^n = y^n = 1`, `xy = eps_n yx`,
/// basis `x^a y^b` at index `a * n + b`, graded by `Z_n^2` with `deg x^a y^b = (a, b)`.
pub fn build_an(n: u32) -> Result<BuiltAlgebra, ConstructionError> {
    if n != 2 && n != 4 {
        return Err(ConstructionError::UnsupportedN(n));
    }
    let eps = Scalar::from_cyc(root_of_unity(n)?);
    let nn = n as usize;
    let labels = (0..nn * nn).map(|k| format!("x^{}y^{}", k / nn, k % nn)).collect();
    let alg = SuperAlgebra::from_fn(labels, vec![Parity::Even; nn * nn], Flags::ASSOCIATIVE, |i, j| {
        let (a, b, c, d) = (i / nn, i % nn, j / nn, j % nn);
        // y^b x^c = eps^(-bc) x^c y^b
        let e = (nn * nn - (b * c) % nn) % nn;
        let mut v = zero_vec(nn * nn);
        v[((a + c) % nn) * nn + (b + d) % nn] = eps.pow(e as u32);
        v
    })?;
    let group = GradingGroup::new(0, vec![n as u64, n as u64]).expect("valid group");
    let coords: Vec<Vec<i64>> = (0..nn * nn).map(|k| vec![(k / nn) as i64, (k % nn) as i64]).collect();
    let mut b = BuiltAlgebra::new(&format!("A{n}"), alg);
    b.gradings.push((format!("Z{n}^2"), Grading::from_coords(group, &coords)?));
    Ok(b)
}

/// Whether every nonzero homogeneous element of the named grading is invertible.
/// Components of dimension 1 reduce to invertibility of left multiplication by the basis vector.
pub fn is_graded_division(b: &BuiltAlgebra, grading: &str) -> bool {
    let Some(g) = b.grading(grading) else { return false };
    if g.basis.is_some() || g.components().values().any(|c| c.len() != 1) {
        return false;
    }
    (0..b.algebra.dim()).all(|i| b.algebra.left_mul(&b.algebra.basis(i)).inverse().is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::build_quaternions;
    use crate::exactla::Mat;
    use crate::superalg::{check_homomorphism, is_associative, LinMap};

    #[test]
    fn a2_is_the_quaternions() {
        let a2 = build_an(2).unwrap();
        let q = build_quaternions().unwrap();
        // 1, y, x, xy -> 1, q2, q1, q3
        let mut f = Mat::zeros(4, 4);
        for (src, dst) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
            f[(dst, src)] = Scalar::one();
        }
        assert!(check_homomorphism(&a2.algebra, &q.algebra, &LinMap::even(f)));
        assert_eq!(a2.grading("Z2^2").unwrap().components().len(), 4);
    }

    #[test]
    fn a4_commutation_scalar() {
        let a4 = build_an(4).unwrap();
        let a = &a4.algebra;
        let (x, y) = (a.basis(4), a.basis(1));
        let xy = a.multiply(&x, &y);
        let yx = a.multiply(&y, &x);
        // yx = c * xy with xy = eps yx, so xy (yx)^-1 = eps = i
        let k = 5;
        assert_eq!(xy[k], &Scalar::i() * &yx[k]);
        assert!(is_associative(a).is_none());
        assert!(is_graded_division(&a4, "Z4^2"));
    }

    #[test]
    fn rejects_other_n() {
        assert!(matches!(build_an(3), Err(ConstructionError::UnsupportedN(3))));
    }
}
