use super::{build_quaternions, quaternion_matrix, BuiltAlgebra, ConstructionError};
use crate::exactla::{add_scaled, zero_vec, Mat, SpanCoords, Vector};
use crate::scalars::Scalar;
use crate::superalg::derivations::flatten;
use crate::superalg::{derivations, supercommutator, Derivations, Flags, LinMap, SuperAlgebra};

/// `tkk(J) = (Q0 (x) J) + der(J)` for a unital Jordan superalgebra `J`, where
/// `Q0` is the space of trace zero quaternions. Basis: `q_a (x) x_i` at index
/// `a * dim J + i` for `a = 0, 1, 2` (`q1, q2, q3`), then the derivations.
#[derive(Debug, Clone)]
pub struct Tkk {
    pub built: BuiltAlgebra,
    pub jordan: SuperAlgebra,
    pub der: Derivations,
    der_coords: SpanCoords,
}

impl Tkk {
    pub fn jordan_dim(&self) -> usize {
        self.jordan.dim()
    }

    /// Index of `q_a (x) x_i`, with `a` in `0..3`.
    pub fn index(&self, a: usize, i: usize) -> usize {
        a * self.jordan.dim() + i
    }

    /// Index of the `d`-th derivation.
    pub fn der_index(&self, d: usize) -> usize {
        3 * self.jordan.dim() + d
    }

    fn der_coords_of(&self, m: &Mat) -> Result<Vector, ConstructionError> {
        self.der_coords
            .coords(&flatten(m))
            .ok_or_else(|| ConstructionError::Algebra(crate::superalg::AlgebraError::NotClosed("der(J)".into())))
    }

    /// Extends an even derivation `t` of `J` by `q (x) x -> q (x) t(x)`, `d -> [t, d]`.
    pub fn lift_derivation(&self, t: &Mat) -> Result<Mat, ConstructionError> {
        self.lift_with(|_, x| t.mul_vec(x).expect("square"), |d| t.commutator(d).expect("square"), |a| a)
    }

    /// Extends an automorphism `s` of `J` by `q (x) x -> q (x) s(x)`, `d -> s d s^-1`.
    pub fn lift_automorphism(&self, s: &Mat) -> Result<Mat, ConstructionError> {
        let inv = s.inverse().ok_or(crate::exactla::LinAlgError::Singular)?;
        self.lift_with(
            |_, x| s.mul_vec(x).expect("square"),
            |d| s.mul(d).and_then(|m| m.mul(&inv)).expect("square"),
            |a| a,
        )
    }

    /// Extends a linear map `f` of `Q0` (3x3 on `q1, q2, q3`) by `q (x) x -> f(q) (x) x`, `d -> d`.
    pub fn lift_quaternion_map(&self, f: &Mat) -> Result<Mat, ConstructionError> {
        let n = self.built.algebra.dim();
        let jn = self.jordan.dim();
        let mut out = Mat::identity(n);
        for a in 0..3 {
            for i in 0..jn {
                let col = self.index(a, i);
                for b in 0..3 {
                    out[(self.index(b, i), col)] = f[(b, a)].clone();
                }
            }
        }
        Ok(out)
    }

    fn lift_with<F, G, H>(&self, on_j: F, on_der: G, on_q: H) -> Result<Mat, ConstructionError>
    where
        F: Fn(usize, &[Scalar]) -> Vector,
        G: Fn(&Mat) -> Mat,
        H: Fn(usize) -> usize,
    {
        let n = self.built.algebra.dim();
        let jn = self.jordan.dim();
        let mut out = Mat::zeros(n, n);
        for a in 0..3 {
            for i in 0..jn {
                let img = on_j(i, &self.jordan.basis(i));
                for (k, c) in img.into_iter().enumerate() {
                    out[(self.index(on_q(a), k), self.index(a, i))] = c;
                }
            }
        }
        for (d, m) in self.der.maps.iter().enumerate() {
            let c = self.der_coords_of(&on_der(&m.matrix))?;
            for (k, v) in c.into_iter().enumerate() {
                out[(self.der_index(k), self.der_index(d))] = v;
            }
        }
        Ok(out)
    }
}

/// Conjugation `x -> q_k x q_k^-1` on `Q0` for `k` in `1..=3`, as a 3x3 matrix.
pub fn quaternion_conjugation(k: usize) -> Mat {
    let q = quaternion_matrix(k);
    let inv = q.inverse().expect("invertible");
    Mat::from_fn(3, 3, |b, a| {
        let m = q.mul(&quaternion_matrix(a + 1)).and_then(|m| m.mul(&inv)).expect("2x2");
        super::quaternion_coords(&m)[b + 1].clone()
    })
}

/// Builds `tkk(J)` with bracket
/// `[a (x) x, b (x) y] = [a,b] (x) xy - 2 N(a,b) [L_x, L_y]`,
/// `[d, a (x) x] = a (x) d(x)` and the supercommutator on derivations.
pub fn build_tkk(j: &BuiltAlgebra) -> Result<Tkk, ConstructionError> {
    let jordan = j.algebra.clone();
    let jn = jordan.dim();
    for x in 0..jn {
        for y in 0..jn {
            let s = Scalar::from_int(jordan.parity(x).sign(jordan.parity(y)));
            let xy = jordan.multiply(&jordan.basis(x), &jordan.basis(y));
            let yx = jordan.multiply(&jordan.basis(y), &jordan.basis(x));
            if xy != crate::exactla::scale_vec(&s, &yx) {
                return Err(ConstructionError::NotSupercommutative(x, y));
            }
        }
    }
    let der = derivations(&jordan)?;
    let der_coords = SpanCoords::new(der.maps.iter().map(|m| flatten(&m.matrix)).collect())?;
    let q = build_quaternions()?;
    let qa = &q.algebra;
    let norm = q.form("norm").expect("norm form").clone();
    let lmul: Vec<LinMap> = (0..jn)
        .map(|x| LinMap { matrix: jordan.left_mul(&jordan.basis(x)), parity: jordan.parity(x) })
        .collect();
    let mut inner = vec![None; jn * jn];
    for x in 0..jn {
        for y in 0..jn {
            let c = der_coords
                .coords(&flatten(&supercommutator(&lmul[x], &lmul[y])))
                .ok_or(ConstructionError::InnerDerivation(x, y))?;
            inner[x * jn + y] = Some(c);
        }
    }
    let qbracket = |a: usize, b: usize| -> Vector {
        let mut v = qa.multiply(&qa.basis(a + 1), &qa.basis(b + 1));
        add_scaled(&mut v, &-Scalar::one(), &qa.multiply(&qa.basis(b + 1), &qa.basis(a + 1)));
        v[1..].to_vec()
    };

    let nd = der.maps.len();
    let n = 3 * jn + nd;
    let mut labels = Vec::with_capacity(n);
    let mut parity = Vec::with_capacity(n);
    for a in 0..3 {
        for x in 0..jn {
            labels.push(format!("{}.{}", qa.label(a + 1), jordan.label(x)));
            parity.push(jordan.parity(x));
        }
    }
    for (d, m) in der.maps.iter().enumerate() {
        labels.push(format!("D{d}"));
        parity.push(m.parity);
    }
    let alg = SuperAlgebra::from_fn(labels, parity, Flags::LIE, |i, k| {
        let mut out = zero_vec(n);
        match (i < 3 * jn, k < 3 * jn) {
            (true, true) => {
                let (a, x, b, y) = (i / jn, i % jn, k / jn, k % jn);
                let xy = jordan.multiply(&jordan.basis(x), &jordan.basis(y));
                for (c, coef) in qbracket(a, b).iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    for (z, v) in xy.iter().enumerate() {
                        out[c * jn + z] = coef * v;
                    }
                }
                let nab = &norm[(a + 1, b + 1)];
                if !nab.is_zero() {
                    let s = &Scalar::from_int(-2) * nab;
                    for (d, v) in inner[x * jn + y].as_ref().expect("filled").iter().enumerate() {
                        out[3 * jn + d] = &s * v;
                    }
                }
            }
            (false, true) => {
                let (d, a, x) = (i - 3 * jn, k / jn, k % jn);
                for (z, v) in der.maps[d].matrix.col(x).into_iter().enumerate() {
                    out[a * jn + z] = v;
                }
            }
            (true, false) => {
                let (a, x, d) = (i / jn, i % jn, k - 3 * jn);
                let s = Scalar::from_int(-jordan.parity(x).sign(der.maps[d].parity));
                for (z, v) in der.maps[d].matrix.col(x).iter().enumerate() {
                    out[a * jn + z] = &s * v;
                }
            }
            (false, false) => {
                for (e, c) in der.algebra.basis_product(i - 3 * jn, k - 3 * jn) {
                    out[3 * jn + e] = c.clone();
                }
            }
        }
        out
    })?;
    let built = BuiltAlgebra::new(&format!("tkk({})", j.name), alg);
    Ok(Tkk { built, jordan, der, der_coords })
}
