use super::{add_sparse, LinMap, Parity, SuperAlgebra};
use crate::exactla::{is_zero_vec, zero_vec, Vector};
use crate::scalars::Scalar;
use rayon::prelude::*;

/// Outcome of the Lie superalgebra axiom check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieCheck {
    pub anticommutativity_ok: bool,
    pub jacobi_ok: bool,
    /// First failing basis pair (for anticommutativity) or triple (for Jacobi).
    pub first_failure: Option<Vec<usize>>,
}

impl LieCheck {
    pub fn ok(&self) -> bool {
        self.anticommutativity_ok && self.jacobi_ok
    }
}

fn signed(s: i64, v: &[(usize, Scalar)]) -> Vec<(usize, Scalar)> {
    if s == 1 {
        v.to_vec()
    } else {
        v.iter().map(|(k, c)| (*k, -c)).collect()
    }
}

/// `[e_i, v]` for a sparse `v`, accumulated into `acc` with factor `f`.
fn bracket_into(a: &SuperAlgebra, acc: &mut [Scalar], f: &Scalar, i: usize, v: &[(usize, Scalar)]) {
    for (l, c) in v {
        add_sparse(acc, &(f * c), a.basis_product(i, *l));
    }
}

fn jacobi(a: &SuperAlgebra, x: usize, y: usize, z: usize) -> Vector {
    let p = |i: usize| a.parity(i);
    let mut acc = zero_vec(a.dim());
    let terms = [(x, y, z, p(x).sign(p(z))), (y, z, x, p(y).sign(p(x))), (z, x, y, p(z).sign(p(y)))];
    for (u, v, w, s) in terms {
        bracket_into(a, &mut acc, &Scalar::from_int(s), u, a.basis_product(v, w));
    }
    acc
}

/// Checks `[x,y] = -(-1)^{|x||y|}[y,x]` and
/// `(-1)^{|x||z|}[x,[y,z]] + (-1)^{|y||x|}[y,[z,x]] + (-1)^{|z||y|}[z,[x,y]] = 0` on basis elements.
pub fn check_lie_super(a: &SuperAlgebra) -> LieCheck {
    let n = a.dim();
    let anti = (0..n).into_par_iter().find_map_first(|i| {
        (i..n).find_map(|j| {
            let s = -a.parity(i).sign(a.parity(j));
            let lhs = a.basis_product(i, j);
            let rhs = signed(s, a.basis_product(j, i));
            (lhs != rhs.as_slice()).then(|| vec![i, j])
        })
    });
    // With anticommutativity the Jacobi expression is symmetric up to sign,
    // so sorted triples suffice.
    let full = anti.is_some();
    let jac = (0..n).into_par_iter().find_map_first(|i| {
        let j0 = if full { 0 } else { i };
        for j in j0..n {
            let k0 = if full { 0 } else { j };
            for k in k0..n {
                if !is_zero_vec(&jacobi(a, i, j, k)) {
                    return Some(vec![i, j, k]);
                }
            }
        }
        None
    });
    LieCheck { anticommutativity_ok: anti.is_none(), jacobi_ok: jac.is_none(), first_failure: anti.or(jac) }
}

/// Whether `f(e_i e_j) = f(e_i) f(e_j)` for all basis pairs.
pub fn check_homomorphism(src: &SuperAlgebra, tgt: &SuperAlgebra, f: &LinMap) -> bool {
    let m = &f.matrix;
    if f.parity != Parity::Even || m.rows() != tgt.dim() || m.cols() != src.dim() {
        return false;
    }
    let images: Vec<Vector> = m.col_vectors();
    (0..src.dim()).into_par_iter().all(|i| {
        (0..src.dim()).all(|j| {
            let mut lhs = zero_vec(tgt.dim());
            for (k, c) in src.basis_product(i, j) {
                crate::exactla::add_scaled(&mut lhs, c, &images[*k]);
            }
            lhs == tgt.multiply(&images[i], &images[j])
        })
    })
}

/// First basis triple violating `(xy)z = x(yz)`, if any.
pub fn is_associative(a: &SuperAlgebra) -> Option<(usize, usize, usize)> {
    let n = a.dim();
    (0..n).into_par_iter().find_map_first(|i| {
        for j in 0..n {
            for k in 0..n {
                let mut lhs = zero_vec(n);
                for (l, c) in a.basis_product(i, j) {
                    add_sparse(&mut lhs, c, a.basis_product(*l, k));
                }
                let mut rhs = zero_vec(n);
                for (l, c) in a.basis_product(j, k) {
                    add_sparse(&mut rhs, c, a.basis_product(i, *l));
                }
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
        None
    })
}

/// Whether `d(xy) = d(x)y + (-1)^{|d||x|} x d(y)` on basis pairs.
pub fn is_derivation(a: &SuperAlgebra, d: &LinMap) -> bool {
    let n = a.dim();
    if d.matrix.rows() != n || d.matrix.cols() != n {
        return false;
    }
    let cols = d.matrix.col_vectors();
    (0..n).into_par_iter().all(|i| {
        let s = Scalar::from_int(d.parity.sign(a.parity(i)));
        (0..n).all(|j| {
            let mut lhs = zero_vec(n);
            for (k, c) in a.basis_product(i, j) {
                crate::exactla::add_scaled(&mut lhs, c, &cols[*k]);
            }
            let mut rhs = a.multiply(&cols[i], &a.basis(j));
            let t = a.multiply(&a.basis(i), &cols[j]);
            crate::exactla::add_scaled(&mut rhs, &s, &t);
            lhs == rhs
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Mat;
    use crate::superalg::Flags;

    fn sl2() -> SuperAlgebra {
        // h, e, f with [h,e]=2e, [h,f]=-2f, [e,f]=h
        let one = Scalar::one;
        let two = || Scalar::from_int(2);
        let m2 = || Scalar::from_int(-2);
        SuperAlgebra::from_entries(
            vec!["h".into(), "e".into(), "f".into()],
            vec![Parity::Even; 3],
            Flags::LIE,
            [
                (0, 1, 1, two()),
                (1, 0, 1, m2()),
                (0, 2, 2, m2()),
                (2, 0, 2, two()),
                (1, 2, 0, one()),
                (2, 1, 0, -one()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn sl2_is_lie() {
        assert!(check_lie_super(&sl2()).ok());
        let id = LinMap::even(Mat::identity(3));
        assert!(check_homomorphism(&sl2(), &sl2(), &id));
        // ad h is a derivation
        let a = sl2();
        assert!(is_derivation(&a, &LinMap::even(a.left_mul(&a.basis(0)))));
        assert!(!is_derivation(&a, &LinMap::even(Mat::identity(3))));
    }

    #[test]
    fn broken_jacobi_detected() {
        // [h,e] = 2e but [h,f] = -3f
        let bad = SuperAlgebra::from_entries(
            vec!["h".into(), "e".into(), "f".into()],
            vec![Parity::Even; 3],
            Flags::LIE,
            [
                (0, 1, 1, Scalar::from_int(2)),
                (1, 0, 1, Scalar::from_int(-2)),
                (0, 2, 2, Scalar::from_int(-3)),
                (2, 0, 2, Scalar::from_int(3)),
                (1, 2, 0, Scalar::one()),
                (2, 1, 0, Scalar::from_int(-1)),
            ],
        )
        .unwrap();
        let r = check_lie_super(&bad);
        assert!(r.anticommutativity_ok);
        assert!(!r.jacobi_ok);
        assert_eq!(r.first_failure, Some(vec![0, 1, 2]));
    }

    #[test]
    fn abelian_passes() {
        let a = SuperAlgebra::from_entries(
            vec!["x".into(), "y".into()],
            vec![Parity::Even, Parity::Odd],
            Flags::LIE,
            [],
        )
        .unwrap();
        assert!(check_lie_super(&a).ok());
    }
}
