use super::{CliffordError, GradedQuadraticSpace};
use crate::abgroup::{GradingGroup, GroupElement};
use crate::constructions::BuiltAlgebra;
use crate::exactla::{add_scaled, independent_subset, is_zero_vec, zero_vec, Mat, SpanCoords, Vector};
use crate::gradinglab::Grading;
use crate::scalars::Scalar;
use crate::superalg::{Flags, LinMap, Parity, SuperAlgebra};
use std::collections::BTreeMap;

/// Largest base dimension handled.
pub const MAX_CLIFFORD_DIM: usize = 7;

type Terms = Vec<(u32, Scalar)>;

/// Clifford algebra `Cl(U, q)` on generators `x_0, ..., x_{n-1}` with an
/// arbitrary polar form. Basis: ordered monomials `x_{a1} ... x_{ak}`,
/// `a1 < ... < ak`, indexed by the bitmask of their generators.
#[derive(Debug, Clone)]
pub struct Clifford {
    n: usize,
    gram: Mat,
    group: GradingGroup,
    degrees: Vec<GroupElement>,
    labels: Vec<String>,
    table: Vec<Vec<Terms>>,
}

impl Clifford {
    pub fn new(gram: Mat, group: GradingGroup, degrees: Vec<GroupElement>, labels: Vec<String>) -> Result<Self, CliffordError> {
        let n = degrees.len();
        if n > MAX_CLIFFORD_DIM {
            return Err(CliffordError::TooLarge(n));
        }
        let mut c = Clifford { n, gram, group, degrees, labels, table: Vec::new() };
        let size = 1u32 << n;
        let gen_table: Vec<Vec<Terms>> = (0..size).map(|m| (0..n).map(|g| c.monomial_times_generator(m, g)).collect()).collect();
        c.table = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let mut cur: BTreeMap<u32, Scalar> = BTreeMap::from([(a, Scalar::one())]);
                        for g in (0..n).filter(|g| b >> g & 1 == 1) {
                            let mut next: BTreeMap<u32, Scalar> = BTreeMap::new();
                            for (m, coef) in &cur {
                                for (m2, c2) in &gen_table[*m as usize][g] {
                                    let e = next.entry(*m2).or_insert_with(Scalar::zero);
                                    *e = &*e + &(coef * c2);
                                }
                            }
                            next.retain(|_, v| !v.is_zero());
                            cur = next;
                        }
                        cur.into_iter().collect()
                    })
                    .collect()
            })
            .collect();
        Ok(c)
    }

    fn q(&self, g: usize) -> Scalar {
        &self.gram[(g, g)] * &Scalar::frac(1, 2)
    }

    fn monomial_times_generator(&self, mask: u32, g: usize) -> Terms {
        if mask == 0 {
            return vec![(1 << g, Scalar::one())];
        }
        let top = 31 - mask.leading_zeros() as usize;
        if top < g {
            return vec![(mask | 1 << g, Scalar::one())];
        }
        let rest = mask & !(1 << top);
        if top == g {
            let q = self.q(g);
            return if q.is_zero() { vec![] } else { vec![(rest, q)] };
        }
        // x_top x_g = -x_g x_top + q(x_top, x_g)
        let mut out: Terms = self.monomial_times_generator(rest, g).into_iter().map(|(m, c)| (m | 1 << top, -c)).collect();
        let b = &self.gram[(top, g)];
        if !b.is_zero() {
            out.push((rest, b.clone()));
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << self.n
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn polar(&self, a: usize, b: usize) -> &Scalar {
        &self.gram[(a, b)]
    }

    pub fn generator(&self, g: usize) -> Vector {
        self.monomial(1 << g)
    }

    pub fn one(&self) -> Vector {
        self.monomial(0)
    }

    pub fn monomial(&self, mask: u32) -> Vector {
        let mut v = zero_vec(self.dim());
        v[mask as usize] = Scalar::one();
        v
    }

    pub fn mask_degree(&self, mask: u32) -> GroupElement {
        (0..self.n)
            .filter(|g| mask >> g & 1 == 1)
            .fold(self.group.zero(), |acc, g| acc.add(&self.degrees[g]).expect("same group"))
    }

    pub fn mask_label(&self, mask: u32) -> String {
        if mask == 0 {
            return "1".into();
        }
        (0..self.n).filter(|g| mask >> g & 1 == 1).map(|g| self.labels[g].as_str()).collect()
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (a, ca) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, cb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ca * cb;
                for (m, t) in &self.table[a][b] {
                    out[*m as usize] = &out[*m as usize] + &(&c * t);
                }
            }
        }
        out
    }

    pub fn commutator(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = self.mul(x, y);
        add_scaled(&mut out, &Scalar::from_int(-1), &self.mul(y, x));
        out
    }

    /// Product of the listed elements, left to right.
    pub fn product(&self, factors: &[Vector]) -> Vector {
        factors.iter().fold(self.one(), |acc, f| self.mul(&acc, f))
    }

    /// Bar involution: `x_{a1} ... x_{ak} -> (-1)^k x_{ak} ... x_{a1}`.
    pub fn bar(&self, x: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.dim());
        for (mask, c) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let gens: Vec<Vector> = (0..self.n).rev().filter(|g| mask >> g & 1 == 1).map(|g| self.generator(g)).collect();
            let sign = if gens.len().is_multiple_of(2) { c.clone() } else { -c };
            add_scaled(&mut out, &sign, &self.product(&gens));
        }
        out
    }

    /// Masks with an even number of generators, in increasing order.
    pub fn even_masks(&self) -> Vec<u32> {
        (0..1u32 << self.n).filter(|m| m.count_ones() % 2 == 0).collect()
    }
}

/// Checks of the structure attached to `Cl(U, q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliffordChecks {
    /// `bar(xy) = bar(y) bar(x)` on pairs of even basis monomials.
    pub bar_antiautomorphism: bool,
    pub bar_involutive: bool,
    /// `bar` preserves every homogeneous component.
    pub bar_graded: bool,
    /// `dim span{[x_a, x_b]}`.
    pub so_dim: usize,
    pub so_closed: bool,
    /// `[[u, v], w] = 2(q(v, w) u - q(u, w) v)` on generators.
    pub commutator_identity: bool,
    pub z_central: bool,
    pub z_square: Scalar,
    pub z_square_expected: Scalar,
}

impl CliffordChecks {
    pub fn ok(&self) -> bool {
        self.bar_antiautomorphism
            && self.bar_involutive
            && self.bar_graded
            && self.so_closed
            && self.commutator_identity
            && self.z_central
            && self.z_square == self.z_square_expected
    }
}

/// `Cl_0(U, q)` as a graded associative algebra, with the surrounding
/// Clifford algebra and its central element `z`.
#[derive(Debug, Clone)]
pub struct EvenClifford {
    pub space: GradedQuadraticSpace,
    pub clifford: Clifford,
    /// Algebra on the even monomials, grading `"G"`, map `"bar"`.
    pub built: BuiltAlgebra,
    pub even_masks: Vec<u32>,
    /// `z = [u_1, v_1] ... [u_m, v_m] w_1 ... w_{2l+1}` in `Cl(U, q)`.
    pub z: Vector,
    pub checks: CliffordChecks,
}

impl EvenClifford {
    /// Coordinates in `Cl_0` of an even element of `Cl`.
    pub fn to_even(&self, x: &[Scalar]) -> Vector {
        self.even_masks.iter().map(|&m| x[m as usize].clone()).collect()
    }

    pub fn from_even(&self, x: &[Scalar]) -> Vector {
        let mut out = zero_vec(self.clifford.dim());
        for (k, &m) in self.even_masks.iter().enumerate() {
            out[m as usize] = x[k].clone();
        }
        out
    }

    pub fn algebra(&self) -> &SuperAlgebra {
        &self.built.algebra
    }

    pub fn grading(&self) -> &Grading {
        self.built.grading("G").expect("designated grading")
    }
}

fn generator_labels(space: &GradedQuadraticSpace) -> Vec<String> {
    let mut out: Vec<String> = (1..=space.m()).flat_map(|i| [format!("u{i}"), format!("v{i}")]).collect();
    out.extend((1..=space.anisotropic.len()).map(|j| format!("w{j}")));
    out
}

/// `z` for the generator order `u_1, v_1, ..., w_1, ...` of `space`.
pub(crate) fn central_element(cl: &Clifford, space: &GradedQuadraticSpace, skip_pairs: usize) -> Vector {
    let mut factors: Vec<Vector> =
        (skip_pairs..space.m()).map(|i| cl.commutator(&cl.generator(2 * i), &cl.generator(2 * i + 1))).collect();
    factors.extend((0..space.anisotropic.len()).map(|j| cl.generator(2 * space.m() + j)));
    cl.product(&factors)
}

/// Builds `Cl(U, q)` on the normal-form generators of `space`, its even part
/// with the induced grading and the bar involution, and runs the structural checks.
pub fn build_even_clifford(space: &GradedQuadraticSpace) -> Result<EvenClifford, CliffordError> {
    let n = space.dim();
    if n > MAX_CLIFFORD_DIM {
        return Err(CliffordError::TooLarge(n));
    }
    if n.is_multiple_of(2) {
        return Err(CliffordError::EvenDimension(n));
    }
    let cl = Clifford::new(space.generator_gram(), space.group.clone(), space.generator_degrees(), generator_labels(space))?;
    let masks = cl.even_masks();
    let pos: BTreeMap<u32, usize> = masks.iter().enumerate().map(|(k, &m)| (m, k)).collect();
    let labels: Vec<String> = masks.iter().map(|&m| cl.mask_label(m)).collect();
    let alg = SuperAlgebra::from_fn(labels, vec![Parity::Even; masks.len()], Flags::ASSOCIATIVE, |i, j| {
        let p = cl.mul(&cl.monomial(masks[i]), &cl.monomial(masks[j]));
        masks.iter().map(|&m| p[m as usize].clone()).collect()
    })?;
    let degrees: Vec<GroupElement> = masks.iter().map(|&m| cl.mask_degree(m)).collect();
    let grading = Grading::new(space.group.clone(), degrees.clone());
    let bar_cols: Vec<Vector> = masks.iter().map(|&m| cl.bar(&cl.monomial(m))).collect();
    let bar_even = Mat::from_fn(masks.len(), masks.len(), |r, c| bar_cols[c][masks[r] as usize].clone());

    let bar_antiautomorphism = masks.iter().all(|&a| {
        masks.iter().all(|&b| {
            let lhs = cl.bar(&cl.mul(&cl.monomial(a), &cl.monomial(b)));
            lhs == cl.mul(&bar_cols[pos[&b]], &bar_cols[pos[&a]])
        })
    });
    let bar_involutive = bar_even.mul(&bar_even)? == Mat::identity(masks.len());
    let bar_graded = masks.iter().enumerate().all(|(c, &m)| {
        let d = cl.mask_degree(m);
        bar_cols[c].iter().enumerate().all(|(k, x)| x.is_zero() || cl.mask_degree(k as u32) == d)
    });

    let gens: Vec<Vector> = (0..n).map(|g| cl.generator(g)).collect();
    let brackets: Vec<Vector> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).map(|(a, b)| cl.commutator(&gens[a], &gens[b])).collect();
    let so_basis: Vec<Vector> = independent_subset(&brackets).into_iter().map(|k| brackets[k].clone()).collect();
    let so_span = SpanCoords::new(so_basis)?;
    let so_closed = brackets.iter().all(|x| brackets.iter().all(|y| so_span.coords(&cl.commutator(x, y)).is_some()));
    let two = Scalar::from_int(2);
    let commutator_identity = (0..n).all(|a| {
        (0..n).all(|b| {
            let uv = cl.commutator(&gens[a], &gens[b]);
            (0..n).all(|c| {
                let mut rhs = zero_vec(cl.dim());
                add_scaled(&mut rhs, &(&two * cl.polar(b, c)), &gens[a]);
                add_scaled(&mut rhs, &-(&two * cl.polar(a, c)), &gens[b]);
                cl.commutator(&uv, &gens[c]) == rhs
            })
        })
    });

    let z = central_element(&cl, space, 0);
    let z_central = gens.iter().all(|g| is_zero_vec(&cl.commutator(&z, g)));
    let zz = cl.mul(&z, &z);
    let z_square = zz[0].clone();
    let z_square = if is_zero_vec(&zz[1..]) { z_square } else { Scalar::zero() };
    let sign = if space.l().is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
    let z_square_expected = space.anisotropic.iter().fold(sign, |acc, a| &acc * &a.q);
    let checks = CliffordChecks {
        bar_antiautomorphism,
        bar_involutive,
        bar_graded,
        so_dim: so_span.dim(),
        so_closed,
        commutator_identity,
        z_central,
        z_square,
        z_square_expected,
    };

    let mut built = BuiltAlgebra::new(&format!("Cl_0 of a {n}-dimensional quadratic space"), alg);
    built.gradings.push(("G".into(), grading));
    built.extras.maps.insert("bar".into(), LinMap::even(bar_even));
    Ok(EvenClifford { space: space.clone(), clifford: cl, built, even_masks: masks, z, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradinglab::verify_grading;
    use crate::superalg::is_associative;

    fn cayley_space() -> GradedQuadraticSpace {
        let g = GradingGroup::new(0, vec![2, 2, 2]).unwrap();
        let w: Vec<(GroupElement, Scalar)> = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1], [1, 0, 1]]
            .iter()
            .map(|c| (g.element_flat(c).unwrap(), Scalar::one()))
            .collect();
        GradedQuadraticSpace::from_degrees(g, &[], &w).unwrap()
    }

    fn hyperbolic_space() -> GradedQuadraticSpace {
        let g = GradingGroup::new(1, vec![2, 2]).unwrap();
        let w: Vec<(GroupElement, Scalar)> =
            [[0, 1, 0], [0, 0, 1], [0, 1, 1]].iter().map(|c| (g.element_flat(c).unwrap(), Scalar::one())).collect();
        let p = [g.element_flat(&[1, 0, 0]).unwrap(), g.element_flat(&[2, 0, 0]).unwrap()];
        GradedQuadraticSpace::from_degrees(g, &p, &w).unwrap()
    }

    #[test]
    fn dimension_seven_gives_64() {
        let e = build_even_clifford(&cayley_space()).unwrap();
        assert_eq!(e.algebra().dim(), 64);
        assert_eq!(e.checks.so_dim, 21);
        assert!(e.checks.ok(), "{:?}", e.checks);
        assert_eq!(e.checks.z_square, Scalar::from_int(-1));
    }

    #[test]
    fn hyperbolic_generators() {
        let e = build_even_clifford(&hyperbolic_space()).unwrap();
        assert!(e.checks.ok(), "{:?}", e.checks);
        let cl = &e.clifford;
        let c = cl.commutator(&cl.generator(0), &cl.generator(1));
        assert_eq!(cl.mul(&c, &c), cl.one());
        assert_eq!(e.checks.z_square, Scalar::from_int(-1));
        assert!(verify_grading(e.algebra(), e.grading()).unwrap().ok);
    }

    #[test]
    fn even_part_is_associative() {
        let g = GradingGroup::new(0, vec![2, 2]).unwrap();
        let w: Vec<(GroupElement, Scalar)> =
            [[1, 0], [0, 1], [1, 1]].iter().map(|c| (g.element_flat(c).unwrap(), Scalar::one())).collect();
        let e = build_even_clifford(&GradedQuadraticSpace::from_degrees(g, &[], &w).unwrap()).unwrap();
        assert_eq!(e.algebra().dim(), 4);
        assert!(is_associative(e.algebra()).is_none());
        assert!(e.checks.ok());
        assert_eq!(e.checks.z_square, Scalar::from_int(-1));
    }

    #[test]
    fn too_large_rejected() {
        let g = GradingGroup::new(0, vec![2]).unwrap();
        let w: Vec<(GroupElement, Scalar)> = vec![(g.zero(), Scalar::one())];
        let p = vec![g.zero(); 4];
        let big = GradedQuadraticSpace::from_degrees(g, &p, &w).unwrap();
        assert!(matches!(build_even_clifford(&big), Err(CliffordError::TooLarge(9))));
    }
}
