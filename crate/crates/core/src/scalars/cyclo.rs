use super::rational::Rat;
use super::ScalarError;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the twelfth cyclotomic field, stored as `c0 + c1 z + c2 z^2 + c3 z^3`
/// reduced modulo `z^4 - z^2 + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycNumber {
    c: [Rat; 4],
}

impl CycNumber {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        CycNumber { c: [c0, c1, c2, c3] }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        CycNumber { c: [r, Rat::zero(), Rat::zero(), Rat::zero()] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(Rat::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_rat(Rat::new(n, d))
    }

    /// The primitive twelfth root of unity `z`.
    pub fn zeta() -> Self {
        CycNumber { c: [Rat::zero(), Rat::one(), Rat::zero(), Rat::zero()] }
    }

    /// `i = z^3`.
    pub fn i() -> Self {
        Self::zeta().pow(3)
    }

    /// `omega = z^4`, a primitive cube root of unity.
    pub fn omega() -> Self {
        Self::zeta().pow(4)
    }

    pub fn coeffs(&self) -> &[Rat; 4] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Rat::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(Rat::is_zero)
    }

    pub fn as_rat(&self) -> Option<&Rat> {
        self.c[1..].iter().all(Rat::is_zero).then_some(&self.c[0])
    }

    pub fn scale(&self, r: &Rat) -> Self {
        CycNumber { c: std::array::from_fn(|k| &self.c[k] * r) }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn powi(&self, n: i64) -> Result<Self, ScalarError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow((-n) as u32))
        }
    }

    fn mul_matrix(&self) -> [[Rat; 4]; 4] {
        // Column k holds the coordinates of self * z^k.
        let mut cols: [[Rat; 4]; 4] = Default::default();
        let mut cur = self.clone();
        let z = Self::zeta();
        for col in cols.iter_mut() {
            *col = cur.c.clone();
            cur = &cur * &z;
        }
        std::array::from_fn(|r| std::array::from_fn(|k| cols[k][r].clone()))
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        if let Some(r) = self.as_rat() {
            return Ok(Self::from_rat(r.recip()));
        }
        let mut m = self.mul_matrix();
        let mut rhs = [Rat::one(), Rat::zero(), Rat::zero(), Rat::zero()];
        for col in 0..4 {
            let piv = (col..4).find(|&r| !m[r][col].is_zero()).ok_or(ScalarError::ZeroInverse)?;
            m.swap(col, piv);
            rhs.swap(col, piv);
            let p = m[col][col].recip();
            for k in 0..4 {
                m[col][k] = &m[col][k] * &p;
            }
            rhs[col] = &rhs[col] * &p;
            for r in 0..4 {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for k in 0..4 {
                        let t = &m[col][k] * &f;
                        m[r][k] = &m[r][k] - &t;
                    }
                    let t = &rhs[col] * &f;
                    rhs[r] = &rhs[r] - &t;
                }
            }
        }
        Ok(CycNumber { c: rhs })
    }

    /// Multiplicative order, if it divides 12.
    pub fn root_order(&self) -> Option<u32> {
        (1..=12).find(|&n| self.pow(n).is_one()).filter(|n| 12 % n == 0)
    }

    /// Exact square root for values of the form `r^2` or `-r^2` with `r` rational.
    pub fn sqrt(&self) -> Option<Self> {
        let r = self.as_rat()?;
        if let Some(s) = r.sqrt() {
            return Some(Self::from_rat(s));
        }
        (-r).sqrt().map(|s| Self::i().scale(&s))
    }

    pub fn to_expr(&self) -> String {
        let mut out = String::new();
        for (k, coef) in self.c.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let neg = coef.is_negative();
            let mag = coef.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match k {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{k}"),
            };
            if k == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}*{mono}"));
            } else {
                out.push_str(&format!("({mag})*{mono}"));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<'a> Add<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn add(self, rhs: &CycNumber) -> CycNumber {
        CycNumber { c: std::array::from_fn(|k| &self.c[k] + &rhs.c[k]) }
    }
}

impl<'a> Sub<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn sub(self, rhs: &CycNumber) -> CycNumber {
        CycNumber { c: std::array::from_fn(|k| &self.c[k] - &rhs.c[k]) }
    }
}

impl<'a> Mul<&'a CycNumber> for &'a CycNumber {
    type Output = CycNumber;
    fn mul(self, rhs: &CycNumber) -> CycNumber {
        if let Some(r) = self.as_rat() {
            return rhs.scale(r);
        }
        if let Some(r) = rhs.as_rat() {
            return self.scale(r);
        }
        let mut p: [Rat; 7] = Default::default();
        for i in 0..4 {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..4 {
                if rhs.c[j].is_zero() {
                    continue;
                }
                let t = &self.c[i] * &rhs.c[j];
                p[i + j] = &p[i + j] + &t;
            }
        }
        // z^6 = -1, z^5 = z^3 - z, z^4 = z^2 - 1
        let c6 = std::mem::take(&mut p[6]);
        p[0] = &p[0] - &c6;
        let c5 = std::mem::take(&mut p[5]);
        p[3] = &p[3] + &c5;
        p[1] = &p[1] - &c5;
        let c4 = std::mem::take(&mut p[4]);
        p[2] = &p[2] + &c4;
        p[0] = &p[0] - &c4;
        let [a, b, c, d, ..] = p;
        CycNumber { c: [a, b, c, d] }
    }
}

impl Neg for &CycNumber {
    type Output = CycNumber;
    fn neg(self) -> CycNumber {
        CycNumber { c: std::array::from_fn(|k| -&self.c[k]) }
    }
}

impl fmt::Display for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for CycNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

/// A primitive `n`-th root of unity for `n` dividing 12, namely `z^(12/n)`.
pub fn root_of_unity(n: u32) -> Result<CycNumber, ScalarError> {
    match n {
        1 | 2 | 3 | 4 | 6 | 12 => Ok(CycNumber::zeta().pow(12 / n)),
        _ => Err(ScalarError::UnsupportedOrder(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_is_primitive_twelfth_root() {
        let z = CycNumber::zeta();
        assert!(z.pow(12).is_one());
        for k in 1..12 {
            assert!(!z.pow(k).is_one(), "z^{k} = 1");
        }
    }

    #[test]
    fn named_roots() {
        let i = root_of_unity(4).unwrap();
        assert_eq!(i, CycNumber::zeta().pow(3));
        assert_eq!(&i * &i, CycNumber::from_int(-1));
        let w = root_of_unity(3).unwrap();
        assert!(w.pow(3).is_one() && !w.is_one());
        assert_eq!(root_of_unity(2).unwrap(), CycNumber::from_int(-1));
        assert!(matches!(root_of_unity(5), Err(ScalarError::UnsupportedOrder(5))));
        for n in [1, 2, 3, 4, 6, 12] {
            assert_eq!(root_of_unity(n).unwrap().root_order(), Some(n));
        }
    }

    #[test]
    fn omega_sum_is_minus_one() {
        let z = CycNumber::zeta();
        assert_eq!(&z.pow(4) + &z.pow(8), CycNumber::from_int(-1));
    }

    #[test]
    fn inverse_round_trip() {
        let x = CycNumber::new(Rat::new(1, 2), Rat::from_int(3), Rat::zero(), Rat::from_int(-2));
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(matches!(CycNumber::zero().inv(), Err(ScalarError::ZeroInverse)));
    }

    #[test]
    fn square_roots() {
        let m1 = CycNumber::from_int(-4);
        let s = m1.sqrt().unwrap();
        assert_eq!(&s * &s, m1);
        assert!(CycNumber::from_int(2).sqrt().is_none());
    }
}
