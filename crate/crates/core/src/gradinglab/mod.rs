//! Gradings by abelian groups: verification, types, refinement and gradings
//! induced by commuting diagonalizable operators.

mod catalog;
mod diag;
mod grading;
mod tkk_lemma;

pub use catalog::{catalog, CatalogEntry, CatalogTarget};
pub use diag::{grading_from_diag, DiagGenerators};
pub use tkk_lemma::{verify_tkk_iso_lemma, TkkLemmaReport};
pub use grading::{
    component_parities, grading_type, is_refinement, verify_grading, Grading, GradingCheck, GradingType, GradingWitness,
};

use crate::abgroup::GroupError;
use crate::exactla::LinAlgError;
use crate::scalars::ScalarError;
use crate::superalg::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GradingError {
    #[error("{degrees} degrees for an algebra of dimension {dim}")]
    Length { degrees: usize, dim: usize },
    #[error("gradings are recorded on different bases")]
    DifferentBases,
    #[error("torus generator {0} is not a derivation")]
    NotDerivation(usize),
    #[error("finite generator {0} is not an automorphism")]
    NotAutomorphism(usize),
    #[error("finite generator {index} does not have order dividing {order}")]
    BadOrder { index: usize, order: u32 },
    #[error("eigenvalue is not an integer weight or a root of unity of the given order")]
    NonIntegerWeight,
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
