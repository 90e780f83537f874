use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational number. Values whose reduced numerator and denominator fit
/// in an `i64` are kept inline; everything else falls back to `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rat(Repr);

// Invariant: `Big` never holds a value representable as `Small`.
#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64, i64),
    Big(Box<BigRational>),
}

use Repr::{Big, Small};

impl Rat {
    pub fn zero() -> Self {
        Rat(Small(0, 1))
    }

    pub fn one() -> Self {
        Rat(Small(1, 1))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(Small(n, 1))
    }

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let g = num.gcd(&den);
        let (mut n, mut d) = if g == 0 { (0, 1) } else { (num / g, den / g) };
        if d < 0 {
            n = -n;
            d = -d;
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(n), Ok(d)) => Rat(Small(n, d)),
            _ => Rat(Big(Box::new(BigRational::new(BigInt::from(n), BigInt::from(d))))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i64(), r.denom().to_i64()) {
            (Some(n), Some(d)) => Rat(Small(n, d)),
            _ => Rat(Big(Box::new(r))),
        }
    }

    pub fn parse_int(s: &str) -> Option<Self> {
        if let Ok(n) = s.parse::<i64>() {
            return Some(Rat(Small(n, 1)));
        }
        s.parse::<BigInt>()
            .ok()
            .map(|n| Rat::from_big(BigRational::from_integer(n)))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Big(r) => r.as_ref().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, Small(0, _))
    }

    pub fn is_one(&self) -> bool {
        matches!(self.0, Small(1, 1))
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Small(_, d) => *d == 1,
            Big(r) => r.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Small(n, _) => *n < 0,
            Big(r) => r.is_negative(),
        }
    }

    pub fn abs(&self) -> Rat {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn recip(&self) -> Rat {
        match &self.0 {
            Small(n, d) => {
                assert!(*n != 0, "reciprocal of zero");
                Self::from_i128(*d as i128, *n as i128)
            }
            Big(r) => Self::from_big(r.recip()),
        }
    }

    /// Exact square root when the value is the square of a rational.
    pub fn sqrt(&self) -> Option<Rat> {
        if self.is_negative() {
            return None;
        }
        let r = self.to_big();
        let n = r.numer().sqrt();
        let d = r.denom().sqrt();
        if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
            Some(Self::from_big(BigRational::new(n, d)))
        } else {
            None
        }
    }

    pub fn numer_string(&self) -> String {
        match &self.0 {
            Small(n, _) => n.to_string(),
            Big(r) => r.numer().to_string(),
        }
    }

    pub fn denom_string(&self) -> String {
        match &self.0 {
            Small(_, d) => d.to_string(),
            Big(r) => r.denom().to_string(),
        }
    }

    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Small(n, 1) => Some(*n),
            _ => None,
        }
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl<'a> Add<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn add(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Small(a, b), Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(s) = a.checked_add(*c) {
                        return Rat(Small(s, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * d + c * b, b * d)
            }
            _ => Rat::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn sub(self, rhs: &Rat) -> Rat {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Rat> for &'a Rat {
    type Output = Rat;
    fn mul(self, rhs: &Rat) -> Rat {
        match (&self.0, &rhs.0) {
            (Small(a, b), Small(c, d)) => {
                if *b == 1 && *d == 1 {
                    if let Some(p) = a.checked_mul(*c) {
                        return Rat(Small(p, 1));
                    }
                }
                let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                Rat::from_i128(a * c, b * d)
            }
            _ => Rat::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        match &self.0 {
            Small(n, d) => match n.checked_neg() {
                Some(m) => Rat(Small(m, *d)),
                None => Rat::from_big(-self.to_big()),
            },
            Big(r) => Rat::from_big(-r.as_ref()),
        }
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        -&self
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Small(a, b), Small(c, d)) => {
                ((*a as i128) * (*d as i128)).cmp(&((*c as i128) * (*b as i128)))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Small(n, 1) => write!(f, "{n}"),
            Small(n, d) => write!(f, "{n}/{d}"),
            Big(r) if r.denom().is_one() => write!(f, "{}", r.numer()),
            Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_arithmetic_reduces() {
        let a = Rat::new(2, 4);
        assert_eq!(a, Rat(Small(1, 2)));
        assert_eq!(&a + &a, Rat::one());
        assert_eq!(&Rat::new(1, 3) * &Rat::from_int(3), Rat::one());
        assert_eq!(Rat::new(-3, -6), Rat::new(1, 2));
        assert_eq!(Rat::new(1, -2).to_string(), "-1/2");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::from_int(i64::MAX);
        let sq = &big * &big;
        assert!(matches!(sq.0, Big(_)));
        let back = &sq * &big.recip();
        assert_eq!(back, big);
        assert!(matches!(back.0, Small(_, _)));
    }

    #[test]
    fn sqrt_of_squares() {
        assert_eq!(Rat::new(9, 4).sqrt(), Some(Rat::new(3, 2)));
        assert_eq!(Rat::new(2, 1).sqrt(), None);
        assert_eq!(Rat::new(-1, 1).sqrt(), None);
    }
}
