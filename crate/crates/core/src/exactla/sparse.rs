use super::Vector;
use crate::scalars::Scalar;
use std::collections::BTreeMap;

type Row = BTreeMap<usize, Scalar>;

/// Homogeneous linear system stored row by row in echelon form as equations
/// arrive. Each stored row is normalized so its smallest variable (the pivot)
/// has coefficient 1.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    nvars: usize,
    pivots: BTreeMap<usize, Row>,
}

impl SparseSystem {
    pub fn new(nvars: usize) -> Self {
        SparseSystem { nvars, pivots: BTreeMap::new() }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Adds the equation `sum c_v x_v = 0`; repeated variables are summed.
    /// Returns whether the rank grew.
    pub fn add_equation<I>(&mut self, terms: I) -> bool
    where
        I: IntoIterator<Item = (usize, Scalar)>,
    {
        let mut row = Row::new();
        for (v, c) in terms {
            assert!(v < self.nvars, "variable {v} out of range");
            accumulate(&mut row, v, &c);
        }
        self.insert(row)
    }

    fn insert(&mut self, mut row: Row) -> bool {
        loop {
            let (v, c) = match row.iter().next() {
                Some((&v, c)) => (v, c.clone()),
                None => return false,
            };
            match self.pivots.get(&v) {
                Some(prow) => {
                    let f = -&c;
                    for (&w, d) in prow {
                        accumulate(&mut row, w, &(&f * d));
                    }
                }
                None => {
                    let inv = c.inv().expect("nonzero coefficient");
                    for x in row.values_mut() {
                        *x = &*x * &inv;
                    }
                    self.pivots.insert(v, row);
                    return true;
                }
            }
        }
    }

    /// Basis of the solution space, one vector per free variable, obtained by
    /// back substitution. Each vector is supported on variables linked to its
    /// free variable through the equations.
    pub fn kernel(&self) -> Vec<Vector> {
        let free: Vec<usize> = (0..self.nvars).filter(|v| !self.pivots.contains_key(v)).collect();
        free.iter().map(|&f| self.solution_for(f)).collect()
    }

    pub fn kernel_dim(&self) -> usize {
        self.nvars - self.pivots.len()
    }

    fn solution_for(&self, f: usize) -> Vector {
        let mut x: BTreeMap<usize, Scalar> = BTreeMap::new();
        x.insert(f, Scalar::one());
        for (&p, row) in self.pivots.range(..f).rev() {
            let mut s = Scalar::zero();
            for (&w, c) in row.range(p + 1..) {
                if let Some(xw) = x.get(&w) {
                    s = &s - &(c * xw);
                }
            }
            if !s.is_zero() {
                x.insert(p, s);
            }
        }
        let mut out = super::zero_vec(self.nvars);
        for (v, c) in x {
            out[v] = c;
        }
        out
    }
}

fn accumulate(row: &mut Row, v: usize, c: &Scalar) {
    if c.is_zero() {
        return;
    }
    match row.get_mut(&v) {
        Some(x) => {
            let s = &*x + c;
            if s.is_zero() {
                row.remove(&v);
            } else {
                *x = s;
            }
        }
        None => {
            row.insert(v, c.clone());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::Mat;

    #[test]
    fn matches_dense_kernel() {
        let rows: &[&[i64]] = &[&[1, 2, 0, -1, 0], &[0, 0, 1, 1, 0], &[2, 4, 1, -1, 0]];
        let mut sys = SparseSystem::new(5);
        for r in rows {
            sys.add_equation(r.iter().enumerate().map(|(i, &c)| (i, Scalar::from_int(c))));
        }
        let dense = Mat::from_ints(rows);
        assert_eq!(sys.kernel_dim(), dense.kernel().len());
        for v in sys.kernel() {
            assert!(crate::exactla::is_zero_vec(&dense.mul_vec(&v).unwrap()));
        }
    }

    #[test]
    fn free_variable_alone() {
        let mut sys = SparseSystem::new(3);
        sys.add_equation([(0, Scalar::one()), (1, Scalar::from_int(-1))]);
        assert!(!sys.add_equation([(1, Scalar::from_int(2)), (0, Scalar::from_int(-2))]));
        let k = sys.kernel();
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![Scalar::one(), Scalar::one(), Scalar::zero()]);
        assert_eq!(k[1], vec![Scalar::zero(), Scalar::zero(), Scalar::one()]);
    }
}
