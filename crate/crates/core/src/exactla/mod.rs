//! Exact linear algebra over [`Scalar`]: kernels, solving and joint eigenspaces.

mod coords;
mod dense;
mod eigen;
mod sparse;

pub use coords::SpanCoords;
pub use dense::{independent_subset, Mat, Solution};
pub use eigen::{joint_eigenspaces, EigenBlock};
pub use sparse::SparseSystem;

use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("matrices {0} and {1} do not commute")]
    NonCommuting(usize, usize),
    #[error("matrix {matrix} is not diagonalizable over the supplied eigenvalues: eigenspaces span {covered} of {dim} dimensions")]
    InsufficientEigenvalues { matrix: usize, covered: usize, dim: usize },
    #[error("matrix is singular")]
    Singular,
}

pub type Vector = Vec<Scalar>;

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a = &*a + &(c * x);
        }
    }
}

pub fn scale_vec(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}
