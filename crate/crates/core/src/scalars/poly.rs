use super::cyclo::CycNumber;
use std::ops::{Add, Mul, Neg, Sub};

/// Univariate polynomial in `a` over the cyclotomic field. Coefficients are
/// stored lowest degree first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    coeffs: Vec<CycNumber>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: CycNumber) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(CycNumber::one())
    }

    /// The indeterminate `a`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![CycNumber::zero(), CycNumber::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<CycNumber>) -> Self {
        while coeffs.last().is_some_and(CycNumber::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[CycNumber] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn as_constant(&self) -> Option<CycNumber> {
        match self.coeffs.len() {
            0 => Some(CycNumber::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&CycNumber> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &CycNumber) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the leading coefficient; returns the polynomial and that coefficient.
    pub fn monic(&self) -> (Poly, CycNumber) {
        match self.leading() {
            None => (Poly::zero(), CycNumber::one()),
            Some(l) if l.is_one() => (self.clone(), CycNumber::one()),
            Some(l) => {
                let inv = l.inv().expect("nonzero leading coefficient");
                (self.scale(&inv), l.clone())
            }
        }
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv().expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CycNumber::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let f = rem.last().unwrap() * &lead_inv;
            if !f.is_zero() {
                for (j, c) in d.coeffs.iter().enumerate() {
                    let t = c * &f;
                    rem[k + j] = &rem[k + j] - &t;
                }
            }
            quot[k] = f;
            rem.pop();
            while rem.last().is_some_and(CycNumber::is_zero) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = x.div_rem(&y);
            x = y;
            y = r;
        }
        x.monic().0
    }

    pub fn eval(&self, x: &CycNumber) -> CycNumber {
        self.coeffs
            .iter()
            .rev()
            .fold(CycNumber::zero(), |acc, c| &(&acc * x) + c)
    }

    pub fn to_expr(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "a".into(),
                _ => format!("a^{k}"),
            };
            let cs = c.to_expr();
            let term = if k == 0 {
                cs
            } else if c.is_one() {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if c.as_rat().is_some() && !cs.contains('/') {
                format!("{cs}*{mono}")
            } else {
                format!("({cs})*{mono}")
            };
            terms.push(term);
        }
        let mut out = String::new();
        for t in terms {
            if out.is_empty() {
                out = t;
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = CycNumber::zero();
        Poly::from_coeffs(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).unwrap_or(&zero);
                    let b = rhs.coeffs.get(k).unwrap_or(&zero);
                    a + b
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![CycNumber::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = a * b;
                out[i + j] = &out[i + j] + &t;
            }
        }
        Poly::from_coeffs(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| CycNumber::from_int(c)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (a+1)(a-2) and (a+1)(a+3)
        let f = &p(&[1, 1]) * &p(&[-2, 1]);
        let g = &p(&[1, 1]) * &p(&[3, 1]);
        assert_eq!(Poly::gcd(&f, &g), p(&[1, 1]));
        assert_eq!(Poly::gcd(&p(&[2]), &p(&[0, 1])), Poly::one());
    }

    #[test]
    fn division_identity() {
        let f = p(&[5, -3, 0, 2]);
        let d = p(&[1, 2]);
        let (q, r) = f.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, f);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn evaluation() {
        assert_eq!(p(&[1, 2, 3]).eval(&CycNumber::from_int(2)), CycNumber::from_int(17));
        assert_eq!(p(&[-1, -1]).to_expr(), "-a - 1");
    }
}
