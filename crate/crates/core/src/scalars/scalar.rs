use super::cyclo::CycNumber;
use super::poly::Poly;
use super::rational::Rat;
use super::ScalarError;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the rational function field `Q(z)(a)`, kept as a reduced
/// fraction with monic denominator so that equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

// Invariant: `Ratio` always depends on `a`.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Const(CycNumber),
    Ratio(Poly, Poly),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Const(CycNumber::zero()))
    }

    pub fn one() -> Self {
        Self::from_cyc(CycNumber::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_cyc(CycNumber::from_int(n))
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Self::from_cyc(CycNumber::frac(n, d))
    }

    pub fn from_rat(r: Rat) -> Self {
        Self::from_cyc(CycNumber::from_rat(r))
    }

    pub fn from_cyc(c: CycNumber) -> Self {
        Scalar(Repr::Const(c))
    }

    /// The transcendental parameter `a`.
    pub fn alpha() -> Self {
        Scalar(Repr::Ratio(Poly::var(), Poly::one()))
    }

    pub fn i() -> Self {
        Self::from_cyc(CycNumber::i())
    }

    pub fn omega() -> Self {
        Self::from_cyc(CycNumber::omega())
    }

    pub fn from_polys(num: Poly, den: Poly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroInverse);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if let (Some(n), Some(d)) = (num.as_constant(), den.as_constant()) {
            let inv = d.inv().expect("nonzero denominator");
            return Self::from_cyc(&n * &inv);
        }
        let g = Poly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let (den, lead) = den.monic();
        let num = if lead.is_one() { num } else { num.scale(&lead.inv().expect("nonzero")) };
        match (num.as_constant(), den.degree()) {
            (Some(c), Some(0)) => Self::from_cyc(c),
            _ => Scalar(Repr::Ratio(num, den)),
        }
    }

    fn parts(&self) -> (Poly, Poly) {
        match &self.0 {
            Repr::Const(c) => (Poly::constant(c.clone()), Poly::one()),
            Repr::Ratio(n, d) => (n.clone(), d.clone()),
        }
    }

    pub fn numerator(&self) -> Poly {
        self.parts().0
    }

    pub fn denominator(&self) -> Poly {
        self.parts().1
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.0, Repr::Const(c) if c.is_one())
    }

    /// The value as a cyclotomic number if it does not depend on `a`.
    pub fn as_cyc(&self) -> Option<&CycNumber> {
        match &self.0 {
            Repr::Const(c) => Some(c),
            Repr::Ratio(..) => None,
        }
    }

    pub fn as_rat(&self) -> Option<Rat> {
        self.as_cyc().and_then(|c| c.as_rat().cloned())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        match &self.0 {
            Repr::Const(c) => Ok(Self::from_cyc(c.inv()?)),
            Repr::Ratio(n, d) => Ok(Self::reduce(d.clone(), n.clone())),
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn powi(&self, n: i64) -> Result<Self, ScalarError> {
        if n >= 0 {
            Ok(self.pow(n as u32))
        } else {
            Ok(self.inv()?.pow((-n) as u32))
        }
    }

    /// Evaluates at `a = a0`.
    pub fn specialize(&self, a0: &CycNumber) -> Result<CycNumber, ScalarError> {
        match &self.0 {
            Repr::Const(c) => Ok(c.clone()),
            Repr::Ratio(n, d) => {
                let dv = d.eval(a0);
                if dv.is_zero() {
                    return Err(ScalarError::Pole(a0.to_expr()));
                }
                Ok(&n.eval(a0) * &dv.inv()?)
            }
        }
    }

    /// Exact square root for constants of the form `r^2` or `-r^2`.
    pub fn sqrt(&self) -> Option<Self> {
        self.as_cyc()?.sqrt().map(Self::from_cyc)
    }

    pub fn to_expr(&self) -> String {
        match &self.0 {
            Repr::Const(c) => c.to_expr(),
            Repr::Ratio(n, d) if d.degree() == Some(0) => n.to_expr(),
            Repr::Ratio(n, d) => format!("({})/({})", n.to_expr(), d.to_expr()),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<CycNumber> for Scalar {
    fn from(c: CycNumber) -> Self {
        Self::from_cyc(c)
    }
}

fn add_ref(a: &Scalar, b: &Scalar) -> Scalar {
    match (&a.0, &b.0) {
        (Repr::Const(x), Repr::Const(y)) => Scalar::from_cyc(x + y),
        (Repr::Ratio(n1, d1), Repr::Ratio(n2, d2)) if d1 == d2 => Scalar::reduce(n1 + n2, d1.clone()),
        _ => {
            let ((n1, d1), (n2, d2)) = (a.parts(), b.parts());
            Scalar::reduce(&(&n1 * &d2) + &(&n2 * &d1), &d1 * &d2)
        }
    }
}

fn mul_ref(a: &Scalar, b: &Scalar) -> Scalar {
    match (&a.0, &b.0) {
        (Repr::Const(x), Repr::Const(y)) => Scalar::from_cyc(x * y),
        _ if a.is_zero() || b.is_zero() => Scalar::zero(),
        _ => {
            let ((n1, d1), (n2, d2)) = (a.parts(), b.parts());
            Scalar::reduce(&n1 * &n2, &d1 * &d2)
        }
    }
}

fn neg_ref(a: &Scalar) -> Scalar {
    match &a.0 {
        Repr::Const(c) => Scalar::from_cyc(-c),
        Repr::Ratio(n, d) => Scalar(Repr::Ratio(-n, d.clone())),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $f:expr) => {
        impl<'a> $tr<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $f(self, rhs)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $f(&self, &rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                $f(&self, rhs)
            }
        }
        impl<'a> $tr<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                $f(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Mul, mul, mul_ref);
forward_binop!(Sub, sub, |a: &Scalar, b: &Scalar| add_ref(a, &neg_ref(b)));

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        neg_ref(&self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_one_plus_alpha() {
        let x = Scalar::one() + Scalar::alpha();
        assert!((&x * &x.inv().unwrap()).is_one());
        assert!(matches!(Scalar::zero().inv(), Err(ScalarError::ZeroInverse)));
    }

    #[test]
    fn canonical_form_is_structural() {
        let a = Scalar::alpha();
        let one = Scalar::one();
        // (a^2 - 1)/(a - 1) == a + 1
        let lhs = (&a * &a - &one).div(&(&a - &one)).unwrap();
        assert_eq!(lhs, &a + &one);
        // (2a)/(2a+2) has monic denominator a+1
        let r = (Scalar::from_int(2) * &a).div(&(Scalar::from_int(2) * &a + Scalar::from_int(2))).unwrap();
        assert_eq!(r.denominator().leading(), Some(&CycNumber::one()));
        assert_eq!(r.denominator().degree(), Some(1));
    }

    #[test]
    fn specialize_examples() {
        let s = -Scalar::one() - Scalar::alpha();
        assert_eq!(s.specialize(&CycNumber::frac(-1, 2)).unwrap(), CycNumber::frac(-1, 2));
        let w = CycNumber::omega();
        assert_eq!(s.specialize(&w).unwrap(), w.pow(2));
        let r = Scalar::alpha().inv().unwrap();
        assert!(matches!(r.specialize(&CycNumber::zero()), Err(ScalarError::Pole(_))));
        let prod = &Scalar::alpha() * &r;
        assert_eq!(prod.specialize(&CycNumber::from_int(-2)).unwrap(), CycNumber::one());
    }
}
