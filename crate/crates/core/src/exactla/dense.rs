use super::{add_scaled, LinAlgError, Vector};
use crate::scalars::Scalar;
use std::fmt;
use std::ops::{Index, IndexMut};

/// Dense row-major matrix over [`Scalar`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of solving `M x = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Solution {
    Solved(Vector),
    Inconsistent,
}

impl Solution {
    pub fn ok(self) -> Option<Vector> {
        match self {
            Solution::Solved(v) => Some(v),
            Solution::Inconsistent => None,
        }
    }
}

/// Reduced row echelon form together with its pivot columns.
struct Rref {
    m: Mat,
    pivots: Vec<usize>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = c.clone();
        }
        m
    }

    pub fn diag(entries: &[Scalar]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::Shape("ragged rows".into()));
        }
        let n = rows.len();
        Ok(Mat { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_cols(cols: &[Vector], nrows: usize) -> Result<Self, LinAlgError> {
        if cols.iter().any(|c| c.len() != nrows) {
            return Err(LinAlgError::Shape("column length mismatch".into()));
        }
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        Ok(m)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect())
            .expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn col_vectors(&self) -> Vec<Vector> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    fn same_shape(&self, o: &Mat) -> Result<(), LinAlgError> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(LinAlgError::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, o: &Mat) -> Result<Mat, LinAlgError> {
        self.same_shape(o)?;
        Ok(Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, o: &Mat) -> Result<Mat, LinAlgError> {
        self.same_shape(o)?;
        Ok(Mat { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() })
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| c * x).collect() }
    }

    pub fn mul(&self, o: &Mat) -> Result<Mat, LinAlgError> {
        if self.cols != o.rows {
            return Err(LinAlgError::Shape(format!("cannot multiply {}x{} by {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                let row = &o.data[k * o.cols..(k + 1) * o.cols];
                add_scaled(&mut out.data[i * o.cols..(i + 1) * o.cols], a, row);
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Result<Vector, LinAlgError> {
        if v.len() != self.cols {
            return Err(LinAlgError::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        let mut out = super::zero_vec(self.rows);
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    out[i] = &out[i] + &(a * x);
                }
            }
        }
        Ok(out)
    }

    /// `self * o - o * self`.
    pub fn commutator(&self, o: &Mat) -> Result<Mat, LinAlgError> {
        self.mul(o)?.sub(&o.mul(self)?)
    }

    pub fn pow(&self, n: u32) -> Result<Mat, LinAlgError> {
        let mut acc = Mat::identity(self.rows);
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    pub fn from_fn<F: FnMut(usize, usize) -> Scalar>(rows: usize, cols: usize, mut f: F) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    /// Kronecker product; index `(i, j)` of the result is `i = i1 * o.rows + i2`.
    pub fn kron(&self, o: &Mat) -> Mat {
        Mat::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            &self[(i / o.rows, j / o.cols)] * &o[(i % o.rows, j % o.cols)]
        })
    }

    /// Block diagonal matrix with the given square blocks.
    pub fn block_diag(blocks: &[&Mat]) -> Mat {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut m = Mat::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        m
    }

    /// Submatrix on the given row and column indices.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = &m[(r, j)] * &inv;
                m[(r, j)] = v;
            }
            let prow: Vector = m.row(r).to_vec();
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = -&m[(i, c)];
                    add_scaled(&mut m.data[i * m.cols..(i + 1) * m.cols], &f, &prow);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the null space, one vector per non-pivot column.
    pub fn kernel(&self) -> Vec<Vector> {
        let Rref { m, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        pivots.iter().for_each(|&p| is_pivot[p] = true);
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = super::zero_vec(self.cols);
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&m[(r, f)];
                }
                v
            })
            .collect()
    }

    pub fn solve(&self, b: &[Scalar]) -> Result<Solution, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::Shape(format!("rhs of length {} for {} rows", b.len(), self.rows)));
        }
        let mut aug = Mat::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let Rref { m, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(Solution::Inconsistent);
        }
        let mut x = super::zero_vec(self.cols);
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = m[(r, self.cols)].clone();
        }
        Ok(Solution::Solved(x))
    }

    /// Solves `self * X = rhs` column by column; `None` if any column is inconsistent.
    pub fn solve_matrix(&self, rhs: &Mat) -> Result<Option<Mat>, LinAlgError> {
        let mut cols = Vec::with_capacity(rhs.cols);
        for j in 0..rhs.cols {
            match self.solve(&rhs.col(j))? {
                Solution::Solved(x) => cols.push(x),
                Solution::Inconsistent => return Ok(None),
            }
        }
        Mat::from_cols(&cols, self.cols).map(Some)
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let inv = self.solve_matrix(&Mat::identity(self.rows)).ok()??;
        (self.rank() == self.rows).then_some(inv)
    }

    /// Indices of a maximal linearly independent subset of the columns.
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }
}

/// Indices of a maximal independent subset of `vs`, greedily from the front.
pub fn independent_subset(vs: &[Vector]) -> Vec<usize> {
    if vs.is_empty() {
        return Vec::new();
    }
    Mat::from_cols(vs, vs[0].len()).expect("equal lengths").independent_columns()
}

impl Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(Scalar::to_string).collect();
            writeln!(f, "  [{}]", r.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_basics() {
        assert_eq!(Mat::zeros(2, 2).kernel().len(), 2);
        assert!(Mat::identity(3).kernel().is_empty());
        let m = Mat::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(super::super::is_zero_vec(&m.mul_vec(v).unwrap()));
        }
    }

    #[test]
    fn solve_flags_inconsistency() {
        let b = vec![Scalar::from_int(3), Scalar::frac(-1, 2)];
        assert_eq!(Mat::identity(2).solve(&b).unwrap(), Solution::Solved(b.clone()));
        assert_eq!(Mat::zeros(2, 2).solve(&b).unwrap(), Solution::Inconsistent);
    }

    #[test]
    fn inverse_with_parameter() {
        let a = Scalar::alpha();
        let m = Mat::from_rows(vec![vec![a.clone(), Scalar::one()], vec![Scalar::one(), Scalar::one()]]).unwrap();
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Mat::identity(2));
        assert!(Mat::from_ints(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
