use std::collections::{HashMap, HashSet};

/// Subsets of a group of order at most 128, one bit per element index.
pub type Subset = u128;

/// Finite group given by its multiplication table on indices `0..order`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    identity: usize,
    table: Vec<u8>,
}

pub(crate) fn elements(s: Subset) -> impl Iterator<Item = usize> {
    (0..128).filter(move |&k| s >> k & 1 == 1)
}

fn bit(k: usize) -> Subset {
    1 << k
}

impl FiniteGroup {
    pub fn from_fn(order: usize, identity: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        assert!(order <= 128, "subsets are stored in 128 bits");
        let table = (0..order * order).map(|k| mul(k / order, k % order) as u8).collect();
        FiniteGroup { order, identity, table }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn everything(&self) -> Subset {
        if self.order == 128 {
            Subset::MAX
        } else {
            bit(self.order) - 1
        }
    }

    /// The subgroup generated by `gens`.
    pub fn generate(&self, gens: &[usize]) -> Subset {
        let mut set = bit(self.identity);
        let mut queue = vec![self.identity];
        while let Some(x) = queue.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set & bit(y) == 0 {
                    set |= bit(y);
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn is_abelian(&self, s: Subset) -> bool {
        elements(s).all(|a| elements(s).all(|b| self.commute(a, b)))
    }

    pub fn centralizer(&self, s: Subset, within: Subset) -> Subset {
        elements(within).filter(|&g| elements(s).all(|h| self.commute(g, h))).fold(0, |acc, g| acc | bit(g))
    }

    pub fn center(&self, within: Subset) -> Subset {
        self.centralizer(within, within)
    }

    /// `<h, g>` for an abelian subgroup `h` and `g` commuting with it.
    fn extend(&self, h: Subset, g: usize) -> Subset {
        let mut out = h;
        let mut x = g;
        while out & bit(x) == 0 {
            out |= elements(h).fold(0, |acc, a| acc | bit(self.mul(a, x)));
            x = self.mul(x, g);
        }
        out
    }

    /// All maximal abelian subgroups of the subgroup `within`, sorted.
    pub fn maximal_abelian(&self, within: Subset) -> Vec<Subset> {
        let start = bit(self.identity);
        let mut seen: HashSet<Subset> = HashSet::from([start]);
        let mut stack = vec![start];
        let mut out = Vec::new();
        while let Some(h) = stack.pop() {
            let c = self.centralizer(h, within);
            if c == h {
                out.push(h);
                continue;
            }
            for g in elements(c & !h) {
                let next = self.extend(h, g);
                if seen.insert(next) {
                    stack.push(next);
                }
            }
        }
        out.sort_unstable();
        out
    }

    fn power(&self, x: usize, n: usize) -> usize {
        (0..n).fold(self.identity, |acc, _| self.mul(acc, x))
    }

    /// Invariant factors of an abelian 2-subgroup, ascending.
    pub fn abelian_invariants(&self, s: Subset) -> Vec<u64> {
        assert!(s.count_ones().is_power_of_two(), "2-groups only");
        let mut logs = vec![0u32];
        let mut k = 1;
        while *logs.last().expect("nonempty") < s.count_ones().trailing_zeros() {
            let omega = elements(s).filter(|&x| self.power(x, 1 << k) == self.identity).count();
            logs.push(omega.trailing_zeros());
            k += 1;
        }
        // logs[k] - logs[k-1] counts the cyclic factors of order at least 2^k
        let d: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let mut out: Vec<u64> = (1..=d.first().copied().unwrap_or(0)).map(|j| 1u64 << d.iter().filter(|&&dk| dk >= j).count()).collect();
        out.sort_unstable();
        out
    }

    pub fn image(perm: &[usize], s: Subset) -> Subset {
        elements(s).fold(0, |acc, k| acc | bit(perm[k]))
    }
}

/// Orbit label for each subset under the group generated by `perms`.
pub fn orbits(subsets: &[Subset], perms: &[Vec<usize>]) -> Vec<usize> {
    let index: HashMap<Subset, usize> = subsets.iter().enumerate().map(|(k, &s)| (s, k)).collect();
    let mut parent: Vec<usize> = (0..subsets.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (k, &s) in subsets.iter().enumerate() {
        for p in perms {
            let t = index[&FiniteGroup::image(p, s)];
            let (a, b) = (find(&mut parent, k), find(&mut parent, t));
            parent[a.max(b)] = a.min(b);
        }
    }
    let roots: Vec<usize> = (0..subsets.len()).map(|k| find(&mut parent, k)).collect();
    let mut labels: HashMap<usize, usize> = HashMap::new();
    roots
        .into_iter()
        .map(|r| {
            let next = labels.len();
            *labels.entry(r).or_insert(next)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, 0, |a, b| (a + b) % n)
    }

    #[test]
    fn cyclic_group_invariants() {
        let g = cyclic(8);
        assert_eq!(g.abelian_invariants(g.everything()), vec![8]);
        assert_eq!(g.maximal_abelian(g.everything()), vec![g.everything()]);
        assert_eq!(g.generate(&[2]).count_ones(), 4);
    }

    #[test]
    fn product_invariants() {
        // Z_2 x Z_4 encoded as 4a + b
        let g = FiniteGroup::from_fn(8, 0, |x, y| 4 * ((x / 4 + y / 4) % 2) + (x % 4 + y % 4) % 4);
        assert_eq!(g.abelian_invariants(g.everything()), vec![2, 4]);
        assert_eq!(g.abelian_invariants(g.generate(&[4, 2])), vec![2, 2]);
    }

    #[test]
    fn orbits_of_translations() {
        let g = cyclic(4);
        let singles: Vec<Subset> = (0..4).map(bit).collect();
        let shift: Vec<usize> = (0..4).map(|k| g.mul(k, 2)).collect();
        assert_eq!(orbits(&singles, &[shift]), vec![0, 1, 0, 1]);
    }
}
