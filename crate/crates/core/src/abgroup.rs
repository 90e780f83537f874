//! Finitely generated abelian groups `Z^r x Z_m1 x ... x Z_mk` and their elements.

use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("elements belong to different groups: {0} vs {1}")]
    Mismatch(String, String),
    #[error("torsion order must be at least 2, got {0}")]
    BadOrder(u64),
    #[error("group parse error: {0}")]
    Parse(String),
    #[error("element has {got} coordinates, group {group} needs {want}")]
    Shape { group: String, got: usize, want: usize },
}

/// `Z^free_rank x Z_torsion[0] x ...`, torsion orders kept exactly as given.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Order {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    group: GradingGroup,
    free: Vec<i64>,
    tors: Vec<u64>,
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&m) = torsion.iter().find(|&&m| m < 2) {
            return Err(GroupError::BadOrder(m));
        }
        Ok(GradingGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        GradingGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { group: self.clone(), free: vec![0; self.free_rank], tors: vec![0; self.torsion.len()] }
    }

    pub fn element(&self, free: &[i64], tors: &[i64]) -> Result<GroupElement, GroupError> {
        if free.len() != self.free_rank || tors.len() != self.torsion.len() {
            return Err(GroupError::Shape {
                group: self.to_string(),
                got: free.len() + tors.len(),
                want: self.rank(),
            });
        }
        let tors = tors
            .iter()
            .zip(&self.torsion)
            .map(|(&t, &m)| t.rem_euclid(m as i64) as u64)
            .collect();
        Ok(GroupElement { group: self.clone(), free: free.to_vec(), tors })
    }

    /// Element from a flat coordinate list: free part first, then torsion residues.
    pub fn element_flat(&self, coords: &[i64]) -> Result<GroupElement, GroupError> {
        if coords.len() != self.rank() {
            return Err(GroupError::Shape { group: self.to_string(), got: coords.len(), want: self.rank() });
        }
        let (f, t) = coords.split_at(self.free_rank);
        self.element(f, t)
    }

    /// The `i`-th standard generator (free coordinates first).
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![0; self.rank()];
        c[i] = 1;
        self.element_flat(&c).expect("index in range")
    }

    /// Isomorphism invariants of the whole group.
    pub fn invariants(&self) -> Invariants {
        let gens: Vec<_> = (0..self.rank()).map(|i| self.generator(i)).collect();
        subgroup_invariants(self, &gens).expect("generators belong to the group")
    }

    pub fn is_isomorphic(&self, other: &GradingGroup) -> bool {
        self.invariants() == other.invariants()
    }

    pub fn parse_element(&self, s: &str) -> Result<GroupElement, GroupError> {
        let bad = || GroupError::Parse(format!("bad element literal {s:?}"));
        let inner = s.trim().strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
        let (f, t) = inner.split_once(';').ok_or_else(bad)?;
        let list = |part: &str| -> Result<Vec<i64>, GroupError> {
            let body = part.trim().strip_prefix('[').and_then(|r| r.strip_suffix(']')).ok_or_else(bad)?;
            body.split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse::<i64>().map_err(|_| bad()))
                .collect()
        };
        self.element(&list(f)?, &list(t)?)
    }
}

impl fmt::Display for GradingGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|m| format!("Z_{m}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

impl FromStr for GradingGroup {
    type Err = GroupError;

    /// Accepts `Z^r x Z_m1 x ...`, with `Z_m^k` as shorthand for `k` copies and `0` for the trivial group.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |p: &str| GroupError::Parse(format!("bad factor {p:?} in {s:?}"));
        let s = s.trim();
        if s == "0" || s == "1" {
            return Ok(Self::trivial());
        }
        let mut free = 0usize;
        let mut torsion = Vec::new();
        for part in s.split(['x', '×']).map(str::trim) {
            if let Some(rest) = part.strip_prefix("Z_") {
                let (m, k) = match rest.split_once('^') {
                    Some((m, k)) => (m, k.parse::<usize>().map_err(|_| bad(part))?),
                    None => (rest, 1),
                };
                let m = m.parse::<u64>().map_err(|_| bad(part))?;
                torsion.extend(std::iter::repeat_n(m, k));
            } else if part == "Z" {
                free += 1;
            } else if let Some(r) = part.strip_prefix("Z^") {
                free += r.parse::<usize>().map_err(|_| bad(part))?;
            } else {
                return Err(bad(part));
            }
        }
        Self::new(free, torsion)
    }
}

impl GroupElement {
    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn free_part(&self) -> &[i64] {
        &self.free
    }

    pub fn torsion_part(&self) -> &[u64] {
        &self.tors
    }

    /// All coordinates, free part first.
    pub fn coords(&self) -> Vec<i64> {
        self.free.iter().copied().chain(self.tors.iter().map(|&t| t as i64)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.tors.iter().all(|&x| x == 0)
    }

    fn check(&self, other: &GroupElement) -> Result<(), GroupError> {
        if self.group != other.group {
            return Err(GroupError::Mismatch(self.group.to_string(), other.group.to_string()));
        }
        Ok(())
    }

    pub fn add(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        self.check(other)?;
        Ok(GroupElement {
            group: self.group.clone(),
            free: self.free.iter().zip(&other.free).map(|(a, b)| a + b).collect(),
            tors: self
                .tors
                .iter()
                .zip(&other.tors)
                .zip(&self.group.torsion)
                .map(|((a, b), m)| (a + b) % m)
                .collect(),
        })
    }

    pub fn neg(&self) -> GroupElement {
        self.times(-1)
    }

    pub fn sub(&self, other: &GroupElement) -> Result<GroupElement, GroupError> {
        self.add(&other.neg())
    }

    /// `n * self`.
    pub fn times(&self, n: i64) -> GroupElement {
        GroupElement {
            group: self.group.clone(),
            free: self.free.iter().map(|a| a * n).collect(),
            tors: self
                .tors
                .iter()
                .zip(&self.group.torsion)
                .map(|(&a, &m)| ((a as i128 * n as i128).rem_euclid(m as i128)) as u64)
                .collect(),
        }
    }

    pub fn order(&self) -> Order {
        if self.free.iter().any(|&a| a != 0) {
            return Order::Infinite;
        }
        let n = self
            .tors
            .iter()
            .zip(&self.group.torsion)
            .map(|(&a, &m)| m / gcd(a, m))
            .fold(1, lcm);
        Order::Finite(n)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let j = |v: Vec<String>| v.join(",");
        write!(
            f,
            "([{}];[{}])",
            j(self.free.iter().map(i64::to_string).collect()),
            j(self.tors.iter().map(u64::to_string).collect())
        )
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Isomorphism type of a finitely generated abelian group: free rank plus
/// invariant factors `d1 | d2 | ...`, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Invariants {
    pub free_rank: usize,
    pub factors: Vec<u64>,
}

impl Invariants {
    pub fn to_group(&self) -> GradingGroup {
        GradingGroup { free_rank: self.free_rank, torsion: self.factors.clone() }
    }

    pub fn order(&self) -> Order {
        if self.free_rank > 0 {
            Order::Infinite
        } else {
            Order::Finite(self.factors.iter().product())
        }
    }
}

impl fmt::Display for Invariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_group().fmt(f)
    }
}

/// Invariants of the subgroup generated by `gens`.
///
/// The group is presented as `Z^n / L` with `L` spanned by `m_i e_i` on the
/// torsion coordinates. The subgroup is `S / L` for the lattice
/// `S = span(gens) + L`; writing `L` in a basis of `S` and taking the Smith
/// form of that coordinate matrix yields the invariant factors.
pub fn subgroup_invariants(group: &GradingGroup, gens: &[GroupElement]) -> Result<Invariants, GroupError> {
    let n = group.rank();
    let mut rel_rows: Vec<Vec<i128>> = Vec::new();
    for (i, &m) in group.torsion.iter().enumerate() {
        let mut row = vec![0i128; n];
        row[group.free_rank + i] = m as i128;
        rel_rows.push(row);
    }
    let mut rows = rel_rows.clone();
    for g in gens {
        if g.group != *group {
            return Err(GroupError::Mismatch(group.to_string(), g.group.to_string()));
        }
        rows.push(g.coords().into_iter().map(i128::from).collect());
    }
    let basis = hermite_rows(rows, n);
    let s = basis.len();
    let coords: Vec<Vec<i128>> = rel_rows.iter().map(|r| express_in_echelon(&basis, r)).collect();
    let diag = smith_diagonal(coords, s);
    let mut factors: Vec<u64> = diag.iter().filter(|&&d| d > 1).map(|&d| d as u64).collect();
    factors.sort_unstable();
    let nonzero = diag.len();
    Ok(Invariants { free_rank: s - nonzero, factors })
}

/// Row echelon basis (integer row operations only) of the lattice spanned by `rows`.
fn hermite_rows(mut rows: Vec<Vec<i128>>, ncols: usize) -> Vec<Vec<i128>> {
    let mut out = Vec::new();
    for col in 0..ncols {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&r| rows[r][col] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&r) = nz.first() {
                    let mut row = rows.swap_remove(r);
                    if row[col] < 0 {
                        row.iter_mut().for_each(|x| *x = -*x);
                    }
                    out.push(row);
                }
                break;
            }
            let p = *nz.iter().min_by_key(|&&r| rows[r][col].abs()).unwrap();
            let pv = rows[p][col];
            for &r in &nz {
                if r != p {
                    let q = rows[r][col].div_euclid(pv);
                    let prow = rows[p].clone();
                    rows[r].iter_mut().zip(&prow).for_each(|(x, y)| *x -= q * y);
                }
            }
        }
        rows.retain(|r| r.iter().any(|&x| x != 0));
    }
    out
}

fn leading_col(row: &[i128]) -> usize {
    row.iter().position(|&x| x != 0).expect("nonzero row")
}

/// Integer coordinates of `v` in an echelon basis whose lattice contains it.
fn express_in_echelon(basis: &[Vec<i128>], v: &[i128]) -> Vec<i128> {
    let mut rem = v.to_vec();
    let mut coords = vec![0i128; basis.len()];
    for (k, b) in basis.iter().enumerate() {
        let c = leading_col(b);
        if rem[c] != 0 {
            assert!(rem[c] % b[c] == 0, "vector not in lattice");
            let q = rem[c] / b[c];
            coords[k] = q;
            rem.iter_mut().zip(b).for_each(|(x, y)| *x -= q * y);
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "vector not in lattice");
    coords
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
pub fn smith_diagonal(mut m: Vec<Vec<i128>>, ncols: usize) -> Vec<i128> {
    let nrows = m.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows.min(ncols) {
        // pick the smallest nonzero entry in the remaining block
        let pos = (t..nrows)
            .flat_map(|r| (t..ncols).map(move |c| (r, c)))
            .filter(|&(r, c)| m[r][c] != 0)
            .min_by_key(|&(r, c)| m[r][c].abs());
        let Some((pr, pc)) = pos else { break };
        m.swap(t, pr);
        for row in m.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for r in t + 1..nrows {
                let q = m[r][t].div_euclid(m[t][t]);
                if q != 0 {
                    let prow = m[t].clone();
                    m[r].iter_mut().zip(&prow).for_each(|(x, y)| *x -= q * y);
                }
                if m[r][t] != 0 {
                    m.swap(t, r);
                    dirty = true;
                }
            }
            for c in t + 1..ncols {
                let q = m[t][c].div_euclid(m[t][t]);
                if q != 0 {
                    for row in m.iter_mut() {
                        let y = row[t];
                        row[c] -= q * y;
                    }
                }
                if m[t][c] != 0 {
                    for row in m.iter_mut() {
                        row.swap(t, c);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // enforce divisibility into the remaining block
            let bad = (t + 1..nrows)
                .flat_map(|r| (t + 1..ncols).map(move |c| (r, c)))
                .find(|&(r, c)| m[r][c] % m[t][t] != 0);
            match bad {
                Some((r, _)) => {
                    let row = m[r].clone();
                    m[t].iter_mut().zip(&row).for_each(|(x, y)| *x += y);
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_order() {
        let g: GradingGroup = "Z_2 x Z_4".parse().unwrap();
        let x = g.element(&[], &[1, 1]).unwrap();
        assert_eq!(x.order(), Order::Finite(4));
        let h: GradingGroup = "Z".parse().unwrap();
        assert_eq!(h.element(&[2], &[]).unwrap().order(), Order::Infinite);
    }

    #[test]
    fn neg_in_z2_is_identity() {
        let g: GradingGroup = "Z_2".parse().unwrap();
        let x = g.element(&[], &[1]).unwrap();
        assert_eq!(x.neg(), x);
    }

    #[test]
    fn mismatched_groups_error() {
        let a = "Z_2".parse::<GradingGroup>().unwrap().generator(0);
        let b = "Z_4".parse::<GradingGroup>().unwrap().generator(0);
        assert!(matches!(a.add(&b), Err(GroupError::Mismatch(..))));
    }

    #[test]
    fn literals_round_trip() {
        for s in ["Z^2 x Z_3", "Z x Z_2 x Z_2", "0", "Z_4 x Z_2"] {
            let g: GradingGroup = s.parse().unwrap();
            assert_eq!(g.to_string(), s);
        }
        assert_eq!("Z_2^3".parse::<GradingGroup>().unwrap().torsion(), &[2, 2, 2]);
        let g: GradingGroup = "Z x Z_4".parse().unwrap();
        let e = g.parse_element("([-3];[7])").unwrap();
        assert_eq!(e.to_string(), "([-3];[3])");
        assert!("Q_2".parse::<GradingGroup>().is_err());
        assert!(GradingGroup::new(0, vec![1]).is_err());
    }

    #[test]
    fn small_subgroups() {
        let z2: GradingGroup = "Z^2".parse().unwrap();
        let inv = subgroup_invariants(&z2, &[z2.element(&[2, 0], &[]).unwrap()]).unwrap();
        assert_eq!(inv, Invariants { free_rank: 1, factors: vec![] });
        let v: GradingGroup = "Z_2 x Z_2".parse().unwrap();
        let inv = subgroup_invariants(&v, &[v.generator(0), v.generator(1)]).unwrap();
        assert_eq!(inv.factors, vec![2, 2]);
        assert_eq!(subgroup_invariants(&v, &[]).unwrap(), Invariants { free_rank: 0, factors: vec![] });
    }

    #[test]
    fn cyclic_products_combine() {
        let g: GradingGroup = "Z_2 x Z_3".parse().unwrap();
        assert_eq!(g.invariants().factors, vec![6]);
        let h: GradingGroup = "Z_4 x Z_6".parse().unwrap();
        assert_eq!(h.invariants().factors, vec![2, 12]);
        // subgroup of Z x Z_4 generated by (1,2) and (0,2)
        let k: GradingGroup = "Z x Z_4".parse().unwrap();
        let inv = subgroup_invariants(&k, &[k.element(&[1], &[2]).unwrap(), k.element(&[0], &[2]).unwrap()]).unwrap();
        assert_eq!(inv, Invariants { free_rank: 1, factors: vec![2] });
    }
}
