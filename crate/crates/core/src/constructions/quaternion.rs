use super::{labels, BuiltAlgebra, ConstructionError};
use crate::abgroup::GradingGroup;
use crate::exactla::{Mat, Vector};
use crate::gradinglab::Grading;
use crate::scalars::Scalar;
use crate::superalg::{Flags, LinMap, Parity, SuperAlgebra};

/// The 2x2 matrix of the basis element `1, q1, q2, q3` with index `k`.
pub fn quaternion_matrix(k: usize) -> Mat {
    match k {
        0 => Mat::from_ints(&[&[1, 0], &[0, 1]]),
        1 => Mat::from_ints(&[&[1, 0], &[0, -1]]),
        2 => Mat::from_ints(&[&[0, 1], &[1, 0]]),
        3 => Mat::from_ints(&[&[0, 1], &[-1, 0]]),
        _ => panic!("quaternion basis index {k} out of range"),
    }
}

/// Coordinates of a 2x2 matrix in the basis `1, q1, q2, q3`.
pub fn quaternion_coords(m: &Mat) -> Vector {
    let half = Scalar::frac(1, 2);
    let (a, b, c, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    vec![&half * &(a + d), &half * &(a - d), &half * &(b + c), &half * &(b - c)]
}

fn det(m: &Mat) -> Scalar {
    &(&m[(0, 0)] * &m[(1, 1)]) - &(&m[(0, 1)] * &m[(1, 0)])
}

/// Split quaternions `Mat_2(F)` with basis `1, q1, q2, q3`, the
/// `Z_2^2`-grading `deg q1 = (1,0)`, `deg q2 = (0,1)`, the standard involution
/// and the polar form of the norm `N = det`.
pub fn build_quaternions() -> Result<BuiltAlgebra, ConstructionError> {
    let mats: Vec<Mat> = (0..4).map(quaternion_matrix).collect();
    let alg = SuperAlgebra::from_fn(labels(&["1", "q1", "q2", "q3"]), vec![Parity::Even; 4], Flags::ASSOCIATIVE, |i, j| {
        quaternion_coords(&mats[i].mul(&mats[j]).expect("2x2"))
    })?;
    let mut b = BuiltAlgebra::new("quaternions", alg);
    let group = GradingGroup::new(0, vec![2, 2]).expect("valid group");
    let grading = Grading::from_coords(group, &[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]])?;
    b.gradings.push(("Z2^2".into(), grading));
    let one = Scalar::one;
    let inv = Mat::diag(&[one(), -one(), -one(), -one()]);
    b.extras.maps.insert("involution".into(), LinMap::even(inv));
    let polar = Mat::from_fn(4, 4, |i, j| {
        let s = mats[i].add(&mats[j]).expect("2x2");
        &(&det(&s) - &det(&mats[i])) - &det(&mats[j])
    });
    b.extras.forms.insert("norm".into(), polar);
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::unit_vec;
    use crate::gradinglab::{grading_type, GradingType};
    use crate::superalg::is_associative;

    #[test]
    fn defining_relations() {
        let q = build_quaternions().unwrap();
        let a = &q.algebra;
        let e = |k| unit_vec(4, k);
        assert_eq!(a.multiply(&e(1), &e(1)), e(0));
        assert_eq!(a.multiply(&e(2), &e(2)), e(0));
        assert_eq!(a.multiply(&e(1), &e(2)), e(3));
        assert!(is_associative(a).is_none());
        let bar = &q.map("involution").unwrap().matrix;
        assert_eq!(bar.mul_vec(&e(3)).unwrap(), crate::exactla::scale_vec(&Scalar::from_int(-1), &e(3)));
        assert!(q.failing_gradings().unwrap().is_empty());
        assert_eq!(grading_type(q.grading("Z2^2").unwrap()), GradingType(vec![4]));
    }

    #[test]
    fn norm_is_determinant() {
        let q = build_quaternions().unwrap();
        // N(q1) = det diag(1,-1) = -1, so the polar value N(q1,q1) is -2
        assert_eq!(q.pair("norm", &unit_vec(4, 1), &unit_vec(4, 1)), Some(Scalar::from_int(-2)));
        assert_eq!(q.pair("norm", &unit_vec(4, 3), &unit_vec(4, 3)), Some(Scalar::from_int(2)));
        assert_eq!(q.pair("norm", &unit_vec(4, 1), &unit_vec(4, 2)), Some(Scalar::zero()));
    }
}
