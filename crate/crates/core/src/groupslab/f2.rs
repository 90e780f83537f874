use super::GroupsError;

/// Vector of `A_1 + ... + A_n` with `A_l = F_2^2`, two bits per block.
pub type F2Vec = u8;
/// Subspace of `A_1 + ... + A_n` as the bitmask of its members.
pub type Subspace = u64;

fn block(v: F2Vec, l: usize) -> u8 {
    v >> (2 * l) & 3
}

fn put(a: u8, l: usize) -> F2Vec {
    a << (2 * l)
}

fn members(s: Subspace) -> impl Iterator<Item = F2Vec> {
    (0..64u8).filter(move |&v| s >> v & 1 == 1)
}

pub fn span(vs: &[F2Vec]) -> Subspace {
    vs.iter().fold(1, |s, &v| members(s).fold(s, |acc, x| acc | 1 << (x ^ v)))
}

pub fn dim(s: Subspace) -> u32 {
    s.count_ones().trailing_zeros()
}

/// Number of blocks onto which `F_2 b1 + F_2 b2` projects surjectively.
fn surjective_blocks(b1: F2Vec, b2: F2Vec, blocks: usize) -> usize {
    (0..blocks)
        .filter(|&l| {
            let (x, y) = (block(b1, l), block(b2, l));
            x != 0 && y != 0 && x != y
        })
        .count()
}

/// Every pair of members projects surjectively onto an even number of blocks.
pub fn is_admissible(s: Subspace, blocks: usize) -> bool {
    members(s).all(|a| members(s).all(|b| surjective_blocks(a, b, blocks).is_multiple_of(2)))
}

fn vector_count(blocks: usize) -> u8 {
    1 << (2 * blocks)
}

pub fn all_subspaces(blocks: usize) -> Vec<Subspace> {
    let mut seen = std::collections::BTreeSet::from([1u64]);
    let mut frontier = vec![1u64];
    while let Some(s) = frontier.pop() {
        for v in 0..vector_count(blocks) {
            if s >> v & 1 == 0 {
                let t = s | members(s).fold(0, |acc, x| acc | 1 << (x ^ v));
                if seen.insert(t) {
                    frontier.push(t);
                }
            }
        }
    }
    seen.into_iter().collect()
}

pub fn is_maximal_admissible(s: Subspace, blocks: usize) -> bool {
    is_admissible(s, blocks)
        && (0..vector_count(blocks))
            .filter(|&v| s >> v & 1 == 0)
            .all(|v| !is_admissible(s | members(s).fold(0, |acc, x| acc | 1 << (x ^ v)), blocks))
}

pub fn maximal_admissible(blocks: usize) -> Vec<Subspace> {
    all_subspaces(blocks).into_iter().filter(|&s| is_maximal_admissible(s, blocks)).collect()
}

/// Linear automorphisms of `F_2^2` as the images of `(1,0)` and `(0,1)`.
const ISOS: [[u8; 2]; 6] = [[1, 2], [2, 1], [1, 3], [3, 1], [2, 3], [3, 2]];

fn apply(f: [u8; 2], a: u8) -> u8 {
    [0, f[0], f[1], f[0] ^ f[1]][a as usize]
}

/// Ordered pairs `(p, q)` of distinct blocks with `r` the remaining one.
fn orderings() -> impl Iterator<Item = (usize, usize, usize)> {
    (0..3).flat_map(|p| (0..3).filter(move |&q| q != p).map(move |q| (p, q, 3 - p - q)))
}

/// Every member of a case family, all block orderings included. For two
/// blocks family 0 lists the maximal spaces `F_2 a_1 + F_2 a_2`.
pub fn family_members(blocks: usize, family: usize) -> Result<Vec<Subspace>, GroupsError> {
    let nonzero = 1..4u8;
    let mut out: Vec<Subspace> = match (blocks, family) {
        (2, 0) => nonzero.clone().flat_map(|a| nonzero.clone().map(move |b| span(&[put(a, 0), put(b, 1)]))).collect(),
        (2, 1) => ISOS.iter().map(|&f| span(&[put(1, 0) | put(f[0], 1), put(2, 0) | put(f[1], 1)])).collect(),
        (3, 0) => nonzero
            .clone()
            .flat_map(|a| nonzero.clone().flat_map(move |b| (1..4u8).map(move |c| span(&[put(a, 0), put(b, 1), put(c, 2)]))))
            .collect(),
        (3, 1) => orderings()
            .flat_map(|(p, q, r)| {
                ISOS.iter().flat_map(move |&f| {
                    (1..4u8).map(move |c| span(&[put(1, p) | put(f[0], q), put(2, p) | put(f[1], q), put(c, r)]))
                })
            })
            .collect(),
        (3, 2) => {
            let mut v = Vec::new();
            for (p, q, r) in orderings() {
                for f2 in ISOS {
                    for f3 in ISOS {
                        for [a, b] in ISOS {
                            v.push(span(&[
                                put(a, p) | put(apply(f2, a), q) | put(apply(f3, a), r),
                                put(b, p) | put(apply(f2, b), q),
                                put(b, p) | put(apply(f3, b), r),
                            ]));
                        }
                    }
                }
            }
            v
        }
        (2 | 3, _) => return Err(GroupsError::UnknownFamily(family)),
        _ => return Err(GroupsError::UnsupportedBlocks(blocks)),
    };
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

pub fn family_count(blocks: usize) -> Result<usize, GroupsError> {
    match blocks {
        2 => Ok(2),
        3 => Ok(3),
        _ => Err(GroupsError::UnsupportedBlocks(blocks)),
    }
}

/// Membership of `s` in a family: for two blocks family 0 means containment
/// in some `F_2 a_1 + F_2 a_2`, otherwise equality with a member.
fn in_family(s: Subspace, blocks: usize, family_list: &[Subspace], family: usize) -> bool {
    if blocks == 2 && family == 0 {
        family_list.iter().any(|&f| s & !f == 0)
    } else {
        family_list.binary_search(&s).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct F2CaseReport {
    pub blocks: usize,
    pub subspace_count: usize,
    pub admissible_count: usize,
    /// Admissible subspaces for two blocks, maximal admissible ones for three.
    pub classified_count: usize,
    pub family_counts: Vec<usize>,
    pub unmatched: Vec<Subspace>,
    pub ambiguous: Vec<Subspace>,
    /// Every listed family member is admissible, and maximal for three blocks.
    pub families_admissible: bool,
    /// Dimensions occurring in family 0.
    pub family_zero_dims: Vec<u32>,
}

impl F2CaseReport {
    pub fn ok(&self) -> bool {
        self.unmatched.is_empty() && self.ambiguous.is_empty() && self.families_admissible && self.family_counts.iter().all(|&c| c > 0)
    }
}

pub fn f2_subspace_cases(blocks: usize) -> Result<F2CaseReport, GroupsError> {
    let families: Vec<Vec<Subspace>> = (0..family_count(blocks)?).map(|f| family_members(blocks, f)).collect::<Result<_, _>>()?;
    let all = all_subspaces(blocks);
    let admissible: Vec<Subspace> = all.iter().copied().filter(|&s| is_admissible(s, blocks)).collect();
    let classified: Vec<Subspace> = if blocks == 3 {
        admissible.iter().copied().filter(|&s| is_maximal_admissible(s, blocks)).collect()
    } else {
        admissible.clone()
    };
    let mut family_counts = vec![0; families.len()];
    let (mut unmatched, mut ambiguous) = (Vec::new(), Vec::new());
    for &s in &classified {
        let hits: Vec<usize> = (0..families.len()).filter(|&f| in_family(s, blocks, &families[f], f)).collect();
        match hits.as_slice() {
            [] => unmatched.push(s),
            [f] => family_counts[*f] += 1,
            _ => ambiguous.push(s),
        }
    }
    let families_admissible = families
        .iter()
        .flatten()
        .all(|&s| if blocks == 3 { is_maximal_admissible(s, blocks) } else { is_admissible(s, blocks) });
    let mut family_zero_dims: Vec<u32> = families[0].iter().map(|&s| dim(s)).collect();
    family_zero_dims.sort_unstable();
    family_zero_dims.dedup();
    Ok(F2CaseReport {
        blocks,
        subspace_count: all.len(),
        admissible_count: admissible.len(),
        classified_count: classified.len(),
        family_counts,
        unmatched,
        ambiguous,
        families_admissible,
        family_zero_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subspace_counts() {
        // sums of Gaussian binomials over F_2
        assert_eq!(all_subspaces(2).len(), 1 + 15 + 35 + 15 + 1);
        assert_eq!(all_subspaces(3).len(), 2825);
    }

    #[test]
    fn graph_of_identity_is_admissible() {
        let g = span(&[put(1, 0) | put(1, 1), put(2, 0) | put(2, 1)]);
        assert_eq!(dim(g), 2);
        assert!(is_admissible(g, 2));
        assert!(!is_admissible(span(&[put(1, 0), put(2, 0)]), 2));
    }

    #[test]
    fn bad_block_count() {
        assert_eq!(f2_subspace_cases(4).unwrap_err(), GroupsError::UnsupportedBlocks(4));
    }
}
