use super::{BuiltAlgebra, ConstructionError};
use crate::exactla::{zero_vec, Mat};
use crate::scalars::{CycNumber, Scalar};
use crate::superalg::{Flags, Parity, SuperAlgebra};

/// How the parameter of `D(2,1;alpha)` is represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum D21Alpha {
    /// `alpha` as an indeterminate; structure constants live in `Q(zeta12)(alpha)`.
    Symbolic,
    /// A specific value, which must differ from `0` and `-1`.
    Value(CycNumber),
}

impl D21Alpha {
    fn scalar(&self) -> Result<Scalar, ConstructionError> {
        match self {
            D21Alpha::Symbolic => Ok(Scalar::alpha()),
            D21Alpha::Value(a) => {
                if a.is_zero() || (a + &CycNumber::one()).is_zero() {
                    return Err(ConstructionError::InvalidAlpha(a.to_expr()));
                }
                Ok(Scalar::from_cyc(a.clone()))
            }
        }
    }
}

/// Basis layout of `D(2,1;alpha) = sp(V1) + sp(V2) + sp(V3) + V1 (x) V2 (x) V3`.
pub struct D21Layout;

impl D21Layout {
    pub const DIM: usize = 17;
    pub const ODD_START: usize = 9;

    /// Index of `h_l, e_l, f_l` (`k = 0, 1, 2`) for `l` in `0..3`.
    pub fn sp(l: usize, k: usize) -> usize {
        3 * l + k
    }

    /// Index of `w1 (x) w2 (x) w3`, where `s_l = 0` is `u` and `s_l = 1` is `v`.
    pub fn odd(s: [usize; 3]) -> usize {
        Self::ODD_START + 4 * s[0] + 2 * s[1] + s[2]
    }
}

fn sl2_mats() -> [Mat; 3] {
    [Mat::from_ints(&[&[1, 0], &[0, -1]]), Mat::from_ints(&[&[0, 1], &[0, 0]]), Mat::from_ints(&[&[0, 0], &[1, 0]])]
}

fn sl2_coords(m: &Mat) -> [Scalar; 3] {
    [m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone()]
}

/// `x -> g x g^-1` on `sl2` in the basis `h, e, f`.
pub fn conj_sl2(g: &Mat) -> Mat {
    let inv = g.inverse().expect("invertible 2x2");
    let mats = sl2_mats();
    let mut out = Mat::zeros(3, 3);
    for (k, x) in mats.iter().enumerate() {
        let y = g.mul(x).and_then(|m| m.mul(&inv)).expect("2x2");
        for (r, c) in sl2_coords(&y).into_iter().enumerate() {
            out[(r, k)] = c;
        }
    }
    out
}

/// Matrix of `w1 (x) w2 (x) w3 -> w_{p0} (x) w_{p1} (x) w_{p2}` on the odd part.
fn slot_permutation(p: [usize; 3]) -> Mat {
    let mut m = Mat::zeros(8, 8);
    for i in 0..8 {
        let s = [i >> 2 & 1, i >> 1 & 1, i & 1];
        let t = [s[p[0]], s[p[1]], s[p[2]]];
        m[(4 * t[0] + 2 * t[1] + t[2], i)] = Scalar::one();
    }
    m
}

/// `iota(f1, f2, f3)`: conjugation by `f_l` on `sp(V_l)` and `f1 (x) f2 (x) f3` on the odd part.
pub fn iota(f1: &Mat, f2: &Mat, f3: &Mat) -> Mat {
    let odd = f1.kron(&f2.kron(f3));
    Mat::block_diag(&[&conj_sl2(f1), &conj_sl2(f2), &conj_sl2(f3), &odd])
}

/// `(x1, x2, x3) -> (x3, x1, x2)` and `u1 (x) u2 (x) u3 -> omega u3 (x) u1 (x) u2`.
pub fn varpi() -> Mat {
    let mut m = Mat::zeros(17, 17);
    for l in 0..3 {
        for k in 0..3 {
            m[(D21Layout::sp((l + 1) % 3, k), D21Layout::sp(l, k))] = Scalar::one();
        }
    }
    let p = slot_permutation([2, 0, 1]).scale(&Scalar::omega());
    place_odd(&mut m, &p);
    m
}

/// `(x1, x2, x3) -> (f x1 f^-1, h x3 h^-1, g x2 g^-1)` and
/// `u1 (x) u2 (x) u3 -> f(u1) (x) h(u3) (x) g(u2)`.
pub fn phi_hat(f: &Mat, g: &Mat, h: &Mat) -> Mat {
    let mut m = Mat::zeros(17, 17);
    for (src, dst, c) in [(0, 0, conj_sl2(f)), (1, 2, conj_sl2(g)), (2, 1, conj_sl2(h))] {
        for r in 0..3 {
            for k in 0..3 {
                m[(D21Layout::sp(dst, r), D21Layout::sp(src, k))] = c[(r, k)].clone();
            }
        }
    }
    let odd = f.kron(&h.kron(g)).mul(&slot_permutation([0, 2, 1])).expect("8x8");
    place_odd(&mut m, &odd);
    m
}

fn place_odd(m: &mut Mat, odd: &Mat) {
    let s = D21Layout::ODD_START;
    for r in 0..8 {
        for c in 0..8 {
            m[(s + r, s + c)] = odd[(r, c)].clone();
        }
    }
}

/// `D(2,1;alpha)` with odd bracket
/// `[u1 (x) u2 (x) u3, w1 (x) w2 (x) w3] = b2 b3 g1 + alpha b1 b3 g2 + (-1-alpha) b1 b2 g3`,
/// where `b_l = b(u_l, w_l)` with `b(u, v) = 1` and `g_l = gamma(u_l, w_l)` with
/// `gamma(u,v) = gamma(v,u) = -h`, `gamma(u,u) = 2e`, `gamma(v,v) = -2f`.
pub fn build_d21(mode: D21Alpha) -> Result<BuiltAlgebra, ConstructionError> {
    let alpha = mode.scalar()?;
    let sigma = [Scalar::one(), alpha.clone(), &(-Scalar::one()) - &alpha];
    let mats = sl2_mats();
    let mut labels = Vec::new();
    for l in 1..=3 {
        for k in ["h", "e", "f"] {
            labels.push(format!("{k}{l}"));
        }
    }
    for i in 0..8 {
        let w: String = [i >> 2 & 1, i >> 1 & 1, i & 1].iter().map(|&s| if s == 0 { 'u' } else { 'v' }).collect();
        labels.push(w);
    }
    let mut parity = vec![Parity::Even; 9];
    parity.extend([Parity::Odd; 8]);
    let n = D21Layout::DIM;
    let bform = |a: usize, c: usize| -> i64 {
        match (a, c) {
            (0, 1) => 1,
            (1, 0) => -1,
            _ => 0,
        }
    };
    let gamma = |a: usize, c: usize| -> [i64; 3] {
        match (a, c) {
            (0, 0) => [0, 2, 0],
            (1, 1) => [0, 0, -2],
            _ => [-1, 0, 0],
        }
    };
    let split = |i: usize| {
        let o = i - D21Layout::ODD_START;
        [o >> 2 & 1, o >> 1 & 1, o & 1]
    };
    let alg = SuperAlgebra::from_fn(labels, parity, Flags::LIE, |i, j| {
        let mut out = zero_vec(n);
        match (i < 9, j < 9) {
            (true, true) => {
                if i / 3 == j / 3 {
                    let l = i / 3;
                    let c = mats[i % 3].commutator(&mats[j % 3]).expect("2x2");
                    for (k, v) in sl2_coords(&c).into_iter().enumerate() {
                        out[D21Layout::sp(l, k)] = v;
                    }
                }
            }
            (true, false) | (false, true) => {
                let (x, w, sign) = if i < 9 { (i, j, 1) } else { (j, i, -1) };
                let (l, s) = (x / 3, split(w));
                let col = mats[x % 3].col(s[l]);
                for (r, c) in col.into_iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    let mut t = s;
                    t[l] = r;
                    out[D21Layout::odd(t)] = &Scalar::from_int(sign) * &c;
                }
            }
            (false, false) => {
                let (s, t) = (split(i), split(j));
                let b: Vec<i64> = (0..3).map(|l| bform(s[l], t[l])).collect();
                for l in 0..3 {
                    let coef = b[(l + 1) % 3] * b[(l + 2) % 3];
                    if coef == 0 {
                        continue;
                    }
                    let c = &sigma[l] * &Scalar::from_int(coef);
                    for (k, g) in gamma(s[l], t[l]).into_iter().enumerate() {
                        if g != 0 {
                            out[D21Layout::sp(l, k)] = &c * &Scalar::from_int(g);
                        }
                    }
                }
            }
        }
        out
    })?;
    let name = match &mode {
        D21Alpha::Symbolic => "D(2,1;alpha)".to_string(),
        D21Alpha::Value(a) => format!("D(2,1;{})", a.to_expr()),
    };
    Ok(BuiltAlgebra::new(&name, alg))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::superalg::{check_homomorphism, check_lie_super, LinMap};

    fn a() -> Mat {
        Mat::diag(&[Scalar::i(), -Scalar::i()])
    }

    fn b() -> Mat {
        Mat::from_ints(&[&[0, -1], &[1, 0]])
    }

    #[test]
    fn symbolic_is_lie_superalgebra() {
        let d = build_d21(D21Alpha::Symbolic).unwrap();
        assert!(check_lie_super(&d.algebra).ok());
        assert_eq!((d.algebra.even_dim(), d.algebra.odd_dim()), (9, 8));
    }

    #[test]
    fn excluded_values_rejected() {
        assert!(matches!(build_d21(D21Alpha::Value(CycNumber::zero())), Err(ConstructionError::InvalidAlpha(_))));
        assert!(build_d21(D21Alpha::Value(CycNumber::from_int(-1))).is_err());
    }

    #[test]
    fn iota_is_automorphism() {
        let d = build_d21(D21Alpha::Symbolic).unwrap();
        let one = Mat::identity(2);
        for m in [iota(&a(), &a(), &a()), iota(&b(), &b(), &a()), iota(&a(), &b(), &b()), iota(&one, &b(), &a())] {
            assert!(check_homomorphism(&d.algebra, &d.algebra, &LinMap::even(m)));
        }
    }

    #[test]
    fn varpi_at_omega() {
        let d = build_d21(D21Alpha::Value(CycNumber::omega())).unwrap();
        let p = varpi();
        assert!(check_homomorphism(&d.algebra, &d.algebra, &LinMap::even(p.clone())));
        assert_eq!(p.pow(3).unwrap(), Mat::identity(17));
    }

    #[test]
    fn phi_hat_at_minus_half() {
        let d = build_d21(D21Alpha::Value(CycNumber::frac(-1, 2))).unwrap();
        let m = phi_hat(&b(), &Mat::identity(2), &b());
        assert!(check_homomorphism(&d.algebra, &d.algebra, &LinMap::even(m.clone())));
        assert_eq!(m.pow(4).unwrap(), Mat::identity(17));
    }
}
