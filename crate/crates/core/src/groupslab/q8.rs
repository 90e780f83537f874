use std::fmt;
use std::ops::{Mul, Neg};

/// Element of the quaternion group `{±1, ±i, ±j, ±k}`. The low two bits pick
/// `1, i, j, k` and bit 2 is the sign, so the low bits are also the class
/// modulo the center as a vector of `F_2^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Q8(u8);

impl Q8 {
    pub const ONE: Q8 = Q8(0);
    pub const I: Q8 = Q8(1);
    pub const J: Q8 = Q8(2);
    pub const K: Q8 = Q8(3);
    pub const MINUS_ONE: Q8 = Q8(4);

    pub fn all() -> impl Iterator<Item = Q8> {
        (0..8).map(Q8)
    }

    pub fn from_index(k: u8) -> Q8 {
        assert!(k < 8, "Q8 index out of range");
        Q8(k)
    }

    pub fn index(self) -> u8 {
        self.0
    }

    pub fn unit(self) -> u8 {
        self.0 & 3
    }

    pub fn is_negative(self) -> bool {
        self.0 & 4 != 0
    }
}

impl Neg for Q8 {
    type Output = Q8;

    fn neg(self) -> Q8 {
        Q8(self.0 ^ 4)
    }
}

impl Mul for Q8 {
    type Output = Q8;

    fn mul(self, other: Q8) -> Q8 {
        let (a, b) = (self.unit(), other.unit());
        let (unit, flip) = match (a, b) {
            (0, _) => (b, false),
            (_, 0) => (a, false),
            _ if a == b => (0, true),
            // ij = k, jk = i, ki = j
            _ => (a ^ b, (b + 3 - a) % 3 != 1),
        };
        let negative = self.is_negative() ^ other.is_negative() ^ flip;
        Q8(unit | if negative { 4 } else { 0 })
    }
}

impl fmt::Display for Q8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.is_negative() { "-" } else { "" };
        write!(f, "{sign}{}", ["1", "i", "j", "k"][self.unit() as usize])
    }
}

/// An automorphism of `Q8` as its table of images.
pub type Q8Automorphism = [Q8; 8];

/// The 24 automorphisms of `Q8`: signed permutations of `i, j, k` that
/// preserve multiplication.
pub fn q8_automorphisms() -> Vec<Q8Automorphism> {
    let order_four: Vec<Q8> = Q8::all().filter(|x| x.unit() != 0).collect();
    let mut out = Vec::new();
    for &a in &order_four {
        for &b in order_four.iter().filter(|b| b.unit() != a.unit()) {
            let mut map = [Q8::ONE; 8];
            for (k, img) in [Q8::ONE, a, b, a * b].into_iter().enumerate() {
                map[k] = img;
                map[k + 4] = -img;
            }
            let hom = Q8::all().all(|x| Q8::all().all(|y| map[(x * y).index() as usize] == map[x.index() as usize] * map[y.index() as usize]));
            if hom {
                out.push(map);
            }
        }
    }
    out
}

/// Class of a triple of `Q8` modulo `K = {(e1, e2, e3) : e_l = ±1, e1 e2 e3 = 1}`,
/// stored with positive signs in the first two coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinGroupElt([Q8; 3]);

impl FinGroupElt {
    pub const ORDER: usize = 128;

    pub fn new(mut t: [Q8; 3]) -> Self {
        for l in 0..2 {
            if t[l].is_negative() {
                t[l] = -t[l];
                t[2] = -t[2];
            }
        }
        FinGroupElt(t)
    }

    pub fn one() -> Self {
        FinGroupElt([Q8::ONE; 3])
    }

    /// The central element `(-1, -1, -1)K`.
    pub fn minus_one() -> Self {
        FinGroupElt::new([Q8::MINUS_ONE; 3])
    }

    pub fn coords(&self) -> [Q8; 3] {
        self.0
    }

    pub fn index(&self) -> usize {
        self.0[0].unit() as usize + 4 * self.0[1].unit() as usize + 16 * self.0[2].index() as usize
    }

    pub fn from_index(k: usize) -> Self {
        assert!(k < Self::ORDER, "element index out of range");
        FinGroupElt([Q8::from_index((k % 4) as u8), Q8::from_index((k / 4 % 4) as u8), Q8::from_index((k / 16) as u8)])
    }

    pub fn all() -> impl Iterator<Item = FinGroupElt> {
        (0..Self::ORDER).map(Self::from_index)
    }

    /// Image in `G / Z(G) = A_1 + A_2 + A_3`, two bits per block.
    pub fn f2_class(&self) -> u8 {
        self.0[0].unit() | self.0[1].unit() << 2 | self.0[2].unit() << 4
    }

    pub fn map_coord(&self, l: usize, phi: &Q8Automorphism) -> Self {
        let mut t = self.0;
        t[l] = phi[t[l].index() as usize];
        FinGroupElt::new(t)
    }

    pub fn swap(&self, a: usize, b: usize) -> Self {
        let mut t = self.0;
        t.swap(a, b);
        FinGroupElt::new(t)
    }
}

impl Mul for FinGroupElt {
    type Output = FinGroupElt;

    fn mul(self, other: FinGroupElt) -> FinGroupElt {
        FinGroupElt::new([self.0[0] * other.0[0], self.0[1] * other.0[1], self.0[2] * other.0[2]])
    }
}

impl fmt::Display for FinGroupElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})K", self.0[0], self.0[1], self.0[2])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_relations() {
        assert_eq!(Q8::I * Q8::J, Q8::K);
        assert_eq!(Q8::J * Q8::I, -Q8::K);
        assert_eq!(Q8::K * Q8::I, Q8::J);
        assert_eq!(Q8::I * Q8::I, Q8::MINUS_ONE);
        assert_eq!(Q8::I * Q8::J * Q8::K, Q8::MINUS_ONE);
    }

    #[test]
    fn twenty_four_automorphisms() {
        assert_eq!(q8_automorphisms().len(), 24);
    }

    #[test]
    fn index_round_trip() {
        for k in 0..FinGroupElt::ORDER {
            assert_eq!(FinGroupElt::from_index(k).index(), k);
        }
        assert_eq!(FinGroupElt::new([Q8::MINUS_ONE, Q8::MINUS_ONE, Q8::ONE]), FinGroupElt::one());
        assert_ne!(FinGroupElt::minus_one(), FinGroupElt::one());
    }
}
