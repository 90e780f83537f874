//! Superalgebras given by structure constants on a homogeneous basis.

mod check;
pub(crate) mod derivations;
mod io;
mod pairing;

pub use check::{check_homomorphism, check_lie_super, is_associative, is_derivation, LieCheck};
pub use derivations::{derivations, Derivations};
pub use pairing::{complete_superalgebra, invariant_pairings, invariant_pairings_into, odd_bracket_rank, ModuleAction, Pairing};
pub use derivations::{lie_from_maps, supercommutator};

use crate::exactla::{zero_vec, LinAlgError, Mat, SpanCoords, Vector};
use crate::scalars::{Scalar, ScalarError};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("product e{i}*e{j} has a component on e{k} of the wrong parity")]
    Parity { i: usize, j: usize, k: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("vector is not parity homogeneous")]
    NotHomogeneous,
    #[error("product leaves the span: {0}")]
    NotClosed(String),
    #[error("no Lie superalgebra completion")]
    NoCompletion,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b & 1 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn plus(self, o: Parity) -> Parity {
        Parity::from_bit(self.bit() ^ o.bit())
    }

    /// Koszul sign `(-1)^(|self||o|)`.
    pub fn sign(self, o: Parity) -> i64 {
        if self == Parity::Odd && o == Parity::Odd {
            -1
        } else {
            1
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Flags {
    pub associative_expected: bool,
    pub lie_expected: bool,
}

impl Flags {
    pub const LIE: Flags = Flags { associative_expected: false, lie_expected: true };
    pub const ASSOCIATIVE: Flags = Flags { associative_expected: true, lie_expected: false };
    pub const NONE: Flags = Flags { associative_expected: false, lie_expected: false };
}

type SparseVec = Vec<(usize, Scalar)>;

/// Superalgebra with product `e_i e_j = sum_k c_ij^k e_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct SuperAlgebra {
    labels: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<SparseVec>,
    flags: Flags,
}

/// Linear map between superalgebras; column `j` is the image of basis vector `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    pub matrix: Mat,
    pub parity: Parity,
}

impl LinMap {
    pub fn even(matrix: Mat) -> Self {
        LinMap { matrix, parity: Parity::Even }
    }

    pub fn odd(matrix: Mat) -> Self {
        LinMap { matrix, parity: Parity::Odd }
    }
}

fn to_sparse(v: &[Scalar]) -> SparseVec {
    v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k, c.clone())).collect()
}

impl SuperAlgebra {
    /// Builds an algebra from the products of basis pairs; checks parity additivity.
    pub fn from_fn<F>(labels: Vec<String>, parity: Vec<Parity>, flags: Flags, mut product: F) -> Result<Self, AlgebraError>
    where
        F: FnMut(usize, usize) -> Vector,
    {
        let n = labels.len();
        if parity.len() != n {
            return Err(AlgebraError::Shape(format!("{} labels but {} parities", n, parity.len())));
        }
        let mut table = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = product(i, j);
                if v.len() != n {
                    return Err(AlgebraError::Shape(format!("product of length {} in dimension {n}", v.len())));
                }
                table.push(to_sparse(&v));
            }
        }
        let a = SuperAlgebra { labels, parity, table, flags };
        a.check_parity()?;
        Ok(a)
    }

    /// Builds an algebra from explicit structure constants `(i, j, k, c)`; repeated entries are summed.
    pub fn from_entries(
        labels: Vec<String>,
        parity: Vec<Parity>,
        flags: Flags,
        entries: impl IntoIterator<Item = (usize, usize, usize, Scalar)>,
    ) -> Result<Self, AlgebraError> {
        let n = labels.len();
        let mut dense = vec![zero_vec(n); n * n];
        for (i, j, k, c) in entries {
            if i >= n || j >= n || k >= n {
                return Err(AlgebraError::Shape(format!("entry ({i},{j},{k}) outside dimension {n}")));
            }
            let slot = &mut dense[i * n + j][k];
            *slot = &*slot + &c;
        }
        Self::from_fn(labels, parity, flags, |i, j| std::mem::take(&mut dense[i * n + j]))
    }

    /// Algebra structure on a family of independent homogeneous vectors closed under `product`.
    pub fn from_span<F>(
        labels: Vec<String>,
        parity: Vec<Parity>,
        flags: Flags,
        vectors: Vec<Vector>,
        product: F,
    ) -> Result<Self, AlgebraError>
    where
        F: Fn(&Vector, &Vector) -> Vector + Sync,
    {
        let coords = SpanCoords::new(vectors)?;
        let vs = coords.vectors();
        let n = vs.len();
        let mut err = None;
        let alg = Self::from_fn(labels.clone(), parity, flags, |i, j| {
            match coords.coords(&product(&vs[i], &vs[j])) {
                Some(c) => c,
                None => {
                    err.get_or_insert_with(|| format!("{} * {}", labels[i], labels[j]));
                    zero_vec(n)
                }
            }
        })?;
        match err {
            Some(e) => Err(AlgebraError::NotClosed(e)),
            None => Ok(alg),
        }
    }

    fn check_parity(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let p = self.parity[i].plus(self.parity[j]);
                if let Some((k, _)) = self.table[i * n + j].iter().find(|(k, _)| self.parity[*k] != p) {
                    return Err(AlgebraError::Parity { i, j, k: *k });
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn even_dim(&self) -> usize {
        self.parity.iter().filter(|&&p| p == Parity::Even).count()
    }

    pub fn odd_dim(&self) -> usize {
        self.dim() - self.even_dim()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn flags(&self) -> Flags {
        self.flags
    }

    pub fn with_flags(mut self, flags: Flags) -> Self {
        self.flags = flags;
        self
    }

    pub fn relabel(mut self, labels: Vec<String>) -> Result<Self, AlgebraError> {
        if labels.len() != self.dim() {
            return Err(AlgebraError::Shape("label count".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    /// Nonzero structure constants of `e_i e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.table[i * self.dim() + j]
    }

    pub fn basis(&self, i: usize) -> Vector {
        crate::exactla::unit_vec(self.dim(), i)
    }

    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vec(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.table[i * n + j] {
                    out[*k] = &out[*k] + &(&ab * c);
                }
            }
        }
        out
    }

    /// Parity of a nonzero homogeneous vector.
    pub fn vector_parity(&self, x: &[Scalar]) -> Result<Parity, AlgebraError> {
        let mut ps = x.iter().zip(&self.parity).filter(|(c, _)| !c.is_zero()).map(|(_, p)| *p);
        let first = ps.next().unwrap_or(Parity::Even);
        if ps.all(|p| p == first) {
            Ok(first)
        } else {
            Err(AlgebraError::NotHomogeneous)
        }
    }

    /// Matrix of left multiplication by `x`.
    pub fn left_mul(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.multiply(x, &self.basis(j))).collect();
        Mat::from_cols(&cols, n).expect("square")
    }

    /// Re-expresses the algebra in the basis given by the columns of `p`
    /// (new basis vector `j` is column `j`), which must be invertible and parity homogeneous.
    pub fn change_basis(&self, p: &Mat, labels: Vec<String>) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.dim();
        if p.rows() != n || p.cols() != n || labels.len() != n {
            return Err(AlgebraError::Shape("change of basis must be square".into()));
        }
        let cols = p.col_vectors();
        let parity = cols.iter().map(|c| self.vector_parity(c)).collect::<Result<Vec<_>, _>>()?;
        let inv = p.inverse().ok_or_else(|| AlgebraError::Shape("singular change of basis".into()))?;
        Self::from_fn(labels, parity, self.flags, |i, j| {
            inv.mul_vec(&self.multiply(&cols[i], &cols[j])).expect("square")
        })
    }

    /// Applies `f` to all structure constants, e.g. to specialize a parameter.
    pub fn map_scalars<F>(&self, mut f: F) -> Result<SuperAlgebra, AlgebraError>
    where
        F: FnMut(&Scalar) -> Result<Scalar, AlgebraError>,
    {
        let mut table = Vec::with_capacity(self.table.len());
        for row in &self.table {
            let mut out = Vec::with_capacity(row.len());
            for (k, c) in row {
                let v = f(c)?;
                if !v.is_zero() {
                    out.push((*k, v));
                }
            }
            table.push(out);
        }
        Ok(SuperAlgebra { labels: self.labels.clone(), parity: self.parity.clone(), table, flags: self.flags })
    }

    /// Number of nonzero structure constants.
    pub fn nnz(&self) -> usize {
        self.table.iter().map(Vec::len).sum()
    }

    /// Direct sum with `other`, whose basis follows this one.
    pub fn direct_sum(&self, other: &SuperAlgebra) -> Result<SuperAlgebra, AlgebraError> {
        let n = self.dim();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut parity = self.parity.clone();
        parity.extend(other.parity.iter().copied());
        let total = labels.len();
        let flags = if self.flags == other.flags { self.flags } else { Flags::NONE };
        Self::from_fn(labels, parity, flags, |i, j| {
            let mut out = zero_vec(total);
            match (i < n, j < n) {
                (true, true) => add_sparse(&mut out, &Scalar::one(), self.basis_product(i, j)),
                (false, false) => {
                    for (k, c) in other.basis_product(i - n, j - n) {
                        out[n + k] = c.clone();
                    }
                }
                _ => {}
            }
            out
        })
    }
}

/// Adds `c * v` to a dense accumulator given a sparse `v`.
pub(crate) fn add_sparse(acc: &mut [Scalar], c: &Scalar, v: &[(usize, Scalar)]) {
    for (k, x) in v {
        acc[*k] = &acc[*k] + &(c * x);
    }
}

impl fmt::Debug for SuperAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperAlgebra(dim {} = {}+{}, {} nonzero constants)", self.dim(), self.even_dim(), self.odd_dim(), self.nnz())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("e{i}")).collect()
    }

    #[test]
    fn parity_violation_rejected() {
        let r = SuperAlgebra::from_entries(
            labels(2),
            vec![Parity::Even, Parity::Odd],
            Flags::NONE,
            [(0, 0, 1, Scalar::one())],
        );
        assert!(matches!(r, Err(AlgebraError::Parity { i: 0, j: 0, k: 1 })));
    }

    #[test]
    fn zero_product() {
        let a = SuperAlgebra::from_entries(labels(2), vec![Parity::Even; 2], Flags::NONE, []).unwrap();
        let x = vec![Scalar::from_int(3), Scalar::one()];
        assert!(crate::exactla::is_zero_vec(&a.multiply(&x, &zero_vec(2))));
        assert!(crate::exactla::is_zero_vec(&a.multiply(&x, &x)));
    }

    #[test]
    fn change_basis_round_trip() {
        // polynomial algebra F[t]/(t^2) in basis {1, t} and {1, 1+t}
        let a = SuperAlgebra::from_entries(
            labels(2),
            vec![Parity::Even; 2],
            Flags::ASSOCIATIVE,
            [(0, 0, 0, Scalar::one()), (0, 1, 1, Scalar::one()), (1, 0, 1, Scalar::one())],
        )
        .unwrap();
        let p = Mat::from_ints(&[&[1, 1], &[0, 1]]);
        let b = a.change_basis(&p, labels(2)).unwrap();
        // (1+t)^2 = 1 + 2t = 2(1+t) - 1
        assert_eq!(b.multiply(&b.basis(1), &b.basis(1)), vec![Scalar::from_int(-1), Scalar::from_int(2)]);
        let back = b.change_basis(&p.inverse().unwrap(), labels(2)).unwrap();
        assert_eq!(back, a);
    }
}
