//! Graded quadratic spaces, even Clifford algebras with the bar involution,
//! and the classification of the graded division algebra attached to
//! `Cl_0(U, q)` for seven dimensional `U`.

mod classify;
mod clifford;
mod models;
mod space;
mod uuv;

pub use classify::{
    classify_configuration, dim7_case_classify, division_class, standard_configurations, CaseReport, ConfigurationResult,
    Dim7Case, DivisionClass, DivisionReport,
};
pub use clifford::{build_even_clifford, Clifford, CliffordChecks, EvenClifford, MAX_CLIFFORD_DIM};
pub use models::{verify_cayley_model, verify_quaternion_model, CayleyModelReport, QuaternionModelReport};
pub use space::{Anisotropic, GradedQuadraticSpace, HyperbolicPair, RawQuadraticSpace};
pub use uuv::{check_uuv_factorization, UuvReport, UuvStep};

use crate::abgroup::GroupError;
use crate::constructions::ConstructionError;
use crate::exactla::LinAlgError;
use crate::gradinglab::GradingError;
use crate::scalars::ScalarError;
use crate::superalg::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Shape(String),
    #[error("quadratic spaces of even dimension {0} are not supported")]
    EvenDimension(usize),
    #[error("dimension {0} exceeds the supported maximum of 7")]
    TooLarge(usize),
    #[error("form pairs basis vectors {0} and {1} whose degrees do not sum to zero")]
    Incompatible(usize, usize),
    #[error("quadratic form is degenerate")]
    Degenerate,
    #[error("basis vector {0} has no partner of opposite degree")]
    Unpaired(usize),
    #[error("no square root of {0} in the coefficient field")]
    NoSquareRoot(String),
    #[error("space is not normalized: {0}")]
    NotNormalized(String),
    #[error("case table applies to dimension 7, got {0}")]
    NotDim7(usize),
    #[error("configuration matches no case: {0}")]
    NoCase(String),
    #[error("factorization needs a hyperbolic pair")]
    NoPairs,
    #[error("algebra has no unit")]
    NoUnit,
    #[error("no idempotent splits a degree zero corner of dimension {0}")]
    NoIdempotent(usize),
    #[error("support of size {0} is not that of a graded division algebra of dimension at most 64")]
    BadSupport(usize),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}
