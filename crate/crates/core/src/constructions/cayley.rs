use super::{BuiltAlgebra, ConstructionError};
use crate::abgroup::GradingGroup;
use crate::exactla::{unit_vec, zero_vec, Mat};
use crate::gradinglab::Grading;
use crate::scalars::Scalar;
use crate::superalg::{Flags, LinMap, Parity, SuperAlgebra};

/// Product of basis elements `e_a e_b` for `1 <= a, b <= 7`, as `(sign, index)`.
fn imaginary_product(a: usize, b: usize) -> (i64, usize) {
    if a == b {
        return (-1, 0);
    }
    // e_i e_{i+1} = e_{i+3} and cyclic permutations of each such triple
    for i in 0..7 {
        let t = [i, (i + 1) % 7, (i + 3) % 7].map(|x| x + 1);
        for r in 0..3 {
            let (x, y, z) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
            if (a, b) == (x, y) {
                return (1, z);
            }
            if (a, b) == (y, x) {
                return (-1, z);
            }
        }
    }
    unreachable!("every pair of distinct imaginary units lies in a triple")
}

/// The Cayley algebra with basis `1, e1, ..., e7`, its `Z_2^3`-grading with
/// `e1, e2, e3` of degree the standard generators, the conjugation, and the
/// polar form of the norm (for which the basis is orthonormal).
pub fn build_cayley() -> Result<BuiltAlgebra, ConstructionError> {
    let mut labels = vec!["1".to_string()];
    labels.extend((1..=7).map(|i| format!("e{i}")));
    let alg = SuperAlgebra::from_fn(labels, vec![Parity::Even; 8], Flags::NONE, |i, j| match (i, j) {
        (0, k) | (k, 0) => unit_vec(8, k),
        _ => {
            let (s, k) = imaginary_product(i, j);
            let mut v = zero_vec(8);
            v[k] = Scalar::from_int(s);
            v
        }
    })?;
    let mut b = BuiltAlgebra::new("cayley", alg);
    let group = GradingGroup::new(0, vec![2, 2, 2]).expect("valid group");
    let degs = [[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1], [1, 0, 1]];
    let grading = Grading::from_coords(group, &degs.map(|d| d.to_vec()))?;
    b.gradings.push(("Z2^3".into(), grading));
    let mut conj = vec![Scalar::from_int(-1); 8];
    conj[0] = Scalar::one();
    b.extras.maps.insert("conjugation".into(), LinMap::even(Mat::diag(&conj)));
    b.extras.forms.insert("norm".into(), Mat::scalar(8, &Scalar::from_int(2)));
    Ok(b)
}

/// Left multiplication matrices `l_{e_1}, ..., l_{e_7}` on the Cayley algebra.
pub fn left_mult_matrices(c: &SuperAlgebra) -> Vec<Mat> {
    (1..8).map(|a| c.left_mul(&c.basis(a))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{add_scaled, scale_vec};

    fn quad(b: &BuiltAlgebra, x: &[Scalar]) -> Scalar {
        &b.pair("norm", x, x).unwrap() * &Scalar::frac(1, 2)
    }

    #[test]
    fn products_and_norm() {
        let c = build_cayley().unwrap();
        let a = &c.algebra;
        assert_eq!(a.multiply(&a.basis(2), &a.basis(3)), a.basis(5));
        assert_eq!(quad(&c, &a.basis(5)), Scalar::one());
        assert!(c.failing_gradings().unwrap().is_empty());
    }

    #[test]
    fn quadratic_equation_for_e7() {
        // x^2 - N(x,1) x + N(x) 1 = 0
        let c = build_cayley().unwrap();
        let a = &c.algebra;
        let x = a.basis(7);
        let mut v = a.multiply(&x, &x);
        let t = c.pair("norm", &x, &a.basis(0)).unwrap();
        add_scaled(&mut v, &-t, &x);
        add_scaled(&mut v, &quad(&c, &x), &a.basis(0));
        assert!(crate::exactla::is_zero_vec(&v));
    }

    #[test]
    fn composition_on_sums() {
        let c = build_cayley().unwrap();
        let a = &c.algebra;
        for (p, q) in [(1usize, 4usize), (2, 7), (3, 6)] {
            let mut x = a.basis(0);
            add_scaled(&mut x, &Scalar::from_int(2), &a.basis(p));
            add_scaled(&mut x, &Scalar::from_int(-1), &a.basis(q));
            let mut y = scale_vec(&Scalar::from_int(3), &a.basis(q));
            add_scaled(&mut y, &Scalar::one(), &a.basis(5));
            let xy = a.multiply(&x, &y);
            assert_eq!(quad(&c, &xy), &quad(&c, &x) * &quad(&c, &y));
        }
    }

    #[test]
    fn left_multiplications_square_to_minus_norm() {
        let c = build_cayley().unwrap();
        for l in left_mult_matrices(&c.algebra) {
            assert_eq!(l.mul(&l).unwrap(), Mat::scalar(8, &Scalar::from_int(-1)));
        }
    }
}
