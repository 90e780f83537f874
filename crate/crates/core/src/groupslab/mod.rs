//! Maximal abelian subgroups of `Q8^3 / K` and `(F^x x Q8 x Q8) / K`, and
//! the subspace classifications over `F_2` behind them, all by exhaustive enumeration.

mod f2;
mod q8;
mod subgroups;

pub use f2::{all_subspaces, f2_subspace_cases, family_members, is_admissible, maximal_admissible, F2CaseReport, F2Vec, Subspace};
pub use q8::{q8_automorphisms, FinGroupElt, Q8Automorphism, Q8};
pub use subgroups::{orbits, FiniteGroup, Subset};

use std::collections::BTreeSet;
use subgroups::elements;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupsError {
    #[error("subspace cases cover 2 or 3 blocks, got {0}")]
    UnsupportedBlocks(usize),
    #[error("no case family {0}")]
    UnknownFamily(usize),
}

/// `Q8^3 / K` as a table on the indices of [`FinGroupElt`].
pub fn q83k() -> FiniteGroup {
    FiniteGroup::from_fn(FinGroupElt::ORDER, FinGroupElt::one().index(), |a, b| {
        (FinGroupElt::from_index(a) * FinGroupElt::from_index(b)).index()
    })
}

fn subset_of(elts: impl IntoIterator<Item = FinGroupElt>) -> Subset {
    elts.into_iter().fold(0, |acc, x| acc | 1 << x.index())
}

fn generated(g: &FiniteGroup, gens: &[[Q8; 3]]) -> Subset {
    let idx: Vec<usize> = gens.iter().map(|&t| FinGroupElt::new(t).index()).collect();
    g.generate(&idx)
}

fn coordinate_automorphisms(coords: &[usize]) -> Vec<Vec<usize>> {
    let autos = q8_automorphisms();
    coords
        .iter()
        .flat_map(|&l| {
            autos.iter().map(move |phi| FinGroupElt::all().map(|x| x.map_coord(l, phi).index()).collect())
        })
        .collect()
}

fn f2_image(s: Subset, shift: u32) -> Subspace {
    elements(s).fold(0, |acc, k| acc | 1 << (FinGroupElt::from_index(k).f2_class() >> shift))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representative {
    pub name: String,
    pub order: u32,
    pub maximal_abelian: bool,
    pub orbit: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalAbelianReport {
    pub group_order: usize,
    pub center_order: u32,
    pub subgroup_count: usize,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    /// Distinct invariant factor lists among the maximal abelian subgroups.
    pub types: Vec<Vec<u64>>,
    pub center_contained: bool,
    pub representatives: Vec<Representative>,
    /// Quotients by the center are exactly the maximal admissible subspaces.
    pub matches_subspace_cases: bool,
    pub expected_orbits: usize,
}

impl MaximalAbelianReport {
    /// Each representative is maximal abelian and the representatives hit every orbit once.
    pub fn representatives_ok(&self) -> bool {
        let hit: BTreeSet<usize> = self.representatives.iter().filter_map(|r| r.orbit).collect();
        self.representatives.iter().all(|r| r.maximal_abelian && r.orbit.is_some())
            && hit.len() == self.representatives.len()
            && hit.len() == self.orbit_count
    }

    pub fn ok(&self) -> bool {
        self.orbit_count == self.expected_orbits
            && self.center_contained
            && self.matches_subspace_cases
            && self.representatives_ok()
            && self.orbit_sizes.iter().sum::<usize>() == self.subgroup_count
    }
}

fn report(
    g: &FiniteGroup,
    within: Subset,
    perms: &[Vec<usize>],
    reps: Vec<(&str, Subset)>,
    cases: Vec<Subspace>,
    shift: u32,
    expected_orbits: usize,
) -> MaximalAbelianReport {
    let maximal = g.maximal_abelian(within);
    let center = g.center(within);
    let labels = orbits(&maximal, perms);
    let orbit_count = labels.iter().max().map_or(0, |m| m + 1);
    let mut orbit_sizes = vec![0; orbit_count];
    for &l in &labels {
        orbit_sizes[l] += 1;
    }
    let types: BTreeSet<Vec<u64>> = maximal.iter().map(|&h| g.abelian_invariants(h)).collect();
    let representatives = reps
        .into_iter()
        .map(|(name, h)| {
            let pos = maximal.binary_search(&h).ok();
            Representative {
                name: name.to_string(),
                order: h.count_ones(),
                maximal_abelian: g.is_abelian(h) && g.centralizer(h, within) == h,
                orbit: pos.map(|p| labels[p]),
            }
        })
        .collect();
    let images: BTreeSet<Subspace> = maximal.iter().map(|&h| f2_image(h, shift)).collect();
    let cases: BTreeSet<Subspace> = cases.into_iter().collect();
    MaximalAbelianReport {
        group_order: within.count_ones() as usize,
        center_order: center.count_ones(),
        subgroup_count: maximal.len(),
        orbit_count,
        orbit_sizes,
        types: types.into_iter().collect(),
        center_contained: maximal.iter().all(|&h| h & center == center),
        representatives,
        matches_subspace_cases: images == cases && images.len() == maximal.len(),
        expected_orbits,
    }
}

/// Maximal abelian subgroups of `Q8^3 / K` up to triples of automorphisms of
/// `Q8` and permutations of the factors.
pub fn maximal_abelian_q83k() -> MaximalAbelianReport {
    let g = q83k();
    let mut perms = coordinate_automorphisms(&[0, 1, 2]);
    for (a, b) in [(0, 1), (1, 2)] {
        perms.push(FinGroupElt::all().map(|x| x.swap(a, b).index()).collect());
    }
    let (one, i, j) = (Q8::ONE, Q8::I, Q8::J);
    let cube_i = generated(&g, &[[i, one, one], [one, i, one], [one, one, i]]);
    let diagonal = subset_of(
        Q8::all()
            .flat_map(|x| [Q8::ONE, Q8::I, Q8::MINUS_ONE, -Q8::I].into_iter().map(move |y| FinGroupElt::new([x, x, y]))),
    );
    let mixed = generated(&g, &[[i, i, i], [j, j, i], [i, j, j], [Q8::MINUS_ONE; 3]]);
    let reps = vec![("<i>^3/K", cube_i), ("{(x,x,y) : y in <i>}K/K", diagonal), ("<(i,i,i),(j,j,i),(i,j,j)>K/K", mixed)];
    report(&g, g.everything(), &perms, reps, maximal_admissible(3), 0, 3)
}

/// Maximal abelian subgroups of `(F^x x Q8 x Q8) / K` up to couples of
/// automorphisms of `Q8`. The torus `F^x` is central, so it lies in every
/// maximal abelian subgroup and the enumeration runs in the subgroup of
/// `Q8^3 / K` whose first coordinate is `±1`, standing for `F^x`.
pub fn maximal_abelian_fxq82k() -> MaximalAbelianReport {
    let g = q83k();
    let within = subset_of(FinGroupElt::all().filter(|x| x.coords()[0].unit() == 0));
    let perms: Vec<Vec<usize>> = coordinate_automorphisms(&[1, 2]);
    let signs = [Q8::ONE, Q8::MINUS_ONE];
    let cyclic_i = [Q8::ONE, Q8::I, Q8::MINUS_ONE, -Q8::I];
    let torus_ii = subset_of(
        signs.into_iter().flat_map(|s| cyclic_i.into_iter().flat_map(move |x| cyclic_i.into_iter().map(move |y| FinGroupElt::new([s, x, y])))),
    );
    let torus_diag = subset_of(signs.iter().flat_map(|&s| Q8::all().map(move |x| FinGroupElt::new([s, x, x]))));
    let reps = vec![("(F^x x <i> x <i>)/K", torus_ii), ("(F^x x {(x,x)})K/K", torus_diag)];
    let cases = f2::maximal_admissible(2);
    report(&g, within, &perms, reps, cases, 2, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_of_i_is_abelian_of_order_16() {
        let g = q83k();
        let h = generated(&g, &[[Q8::I, Q8::ONE, Q8::ONE], [Q8::ONE, Q8::I, Q8::ONE], [Q8::ONE, Q8::ONE, Q8::I]]);
        assert!(g.is_abelian(h));
        assert_eq!(h.count_ones(), 16);
        assert_eq!(g.abelian_invariants(h), vec![2, 2, 4]);
    }

    #[test]
    fn center_has_order_two() {
        let g = q83k();
        let z = g.center(g.everything());
        assert_eq!(z.count_ones(), 2);
        assert!(z >> FinGroupElt::minus_one().index() & 1 == 1);
    }

    #[test]
    fn q83k_maximal_abelian() {
        let r = maximal_abelian_q83k();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.types, vec![vec![2, 2, 4]]);
        assert_eq!(r.orbit_count, 3);
        // frozen after agreeing with the three block subspace enumeration
        assert_eq!(r.subgroup_count, 135);
        assert_eq!(r.orbit_sizes, vec![27, 54, 54]);
    }

    #[test]
    fn fxq82k_maximal_abelian() {
        let r = maximal_abelian_fxq82k();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.orbit_count, 2);
        assert_eq!(r.orbit_sizes, vec![9, 6]);
    }

    #[test]
    fn three_block_subspaces() {
        let r = f2_subspace_cases(3).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.family_counts, vec![27, 54, 54]);
        assert_eq!(r.family_zero_dims, vec![3]);
    }

    #[test]
    fn two_block_subspaces() {
        let r = f2_subspace_cases(2).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.classified_count, r.admissible_count);
        assert_eq!(r.family_counts[1], 6);
    }
}
