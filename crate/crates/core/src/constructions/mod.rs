//! Builders for the concrete algebras: quaternions, octonions, the algebras
//! `A_n`, the Kaplansky and Kac Jordan superalgebras, the TKK construction,
//! `D(2,1;alpha)`, `G(3)` and three models of `F(4)`.

mod an;
mod cayley;
mod d21;
pub(crate) mod f4;
mod g3;
mod kac;
mod quaternion;
mod tkk;

pub use an::{build_an, is_graded_division};
pub use cayley::{build_cayley, left_mult_matrices};
pub use d21::{build_d21, conj_sl2, phi_hat, varpi, iota, D21Alpha, D21Layout};
pub use f4::{build_f4, quaternion_model_action, rotation_pairs, spin_matrices, F4Model};
pub use g3::build_g3;
pub use kac::{build_k3, build_kac};
pub use quaternion::{build_quaternions, quaternion_coords, quaternion_matrix};
pub use tkk::{build_tkk, quaternion_conjugation, Tkk};

use crate::exactla::{LinAlgError, Mat, SpanCoords, Vector};
use crate::gradinglab::{verify_grading, Grading, GradingError};
use crate::scalars::{Scalar, ScalarError};
use crate::superalg::{
    complete_superalgebra, invariant_pairings, lie_from_maps, AlgebraError, LinMap, ModuleAction, SuperAlgebra,
};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConstructionError {
    #[error("A_n is only available for n = 2 and n = 4, got {0}")]
    UnsupportedN(u32),
    #[error("alpha = {0} is excluded (alpha must differ from 0 and -1)")]
    InvalidAlpha(String),
    #[error("Jordan superalgebra is not supercommutative at basis pair ({0}, {1})")]
    NotSupercommutative(usize, usize),
    #[error("[L_x, L_y] is not a derivation for basis pair ({0}, {1})")]
    InnerDerivation(usize, usize),
    #[error("constructed algebra fails the Lie superalgebra axioms at basis indices {0:?}")]
    Jacobi(Vec<usize>),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Auxiliary structures attached to a built algebra.
#[derive(Debug, Clone, Default)]
pub struct Extras {
    /// Linear maps such as involutions and automorphisms.
    pub maps: BTreeMap<String, LinMap>,
    /// Gram matrices of bilinear forms on the basis.
    pub forms: BTreeMap<String, Mat>,
    /// Distinguished elements such as idempotents.
    pub elements: BTreeMap<String, Vector>,
}

/// An algebra together with its designated gradings and auxiliary structures.
#[derive(Debug, Clone)]
pub struct BuiltAlgebra {
    pub name: String,
    pub algebra: SuperAlgebra,
    pub gradings: Vec<(String, Grading)>,
    pub extras: Extras,
}

impl BuiltAlgebra {
    pub fn new(name: &str, algebra: SuperAlgebra) -> Self {
        BuiltAlgebra { name: name.to_string(), algebra, gradings: Vec::new(), extras: Extras::default() }
    }

    pub fn grading(&self, name: &str) -> Option<&Grading> {
        self.gradings.iter().find(|(n, _)| n == name).map(|(_, g)| g)
    }

    pub fn form(&self, name: &str) -> Option<&Mat> {
        self.extras.forms.get(name)
    }

    pub fn map(&self, name: &str) -> Option<&LinMap> {
        self.extras.maps.get(name)
    }

    pub fn element(&self, name: &str) -> Option<&Vector> {
        self.extras.elements.get(name)
    }

    /// Names of designated gradings that fail [`verify_grading`].
    pub fn failing_gradings(&self) -> Result<Vec<String>, GradingError> {
        let mut bad = Vec::new();
        for (n, g) in &self.gradings {
            if !verify_grading(&self.algebra, g)?.ok {
                bad.push(n.clone());
            }
        }
        Ok(bad)
    }

    /// Value of the named bilinear form on two vectors.
    pub fn pair(&self, form: &str, x: &[Scalar], y: &[Scalar]) -> Option<Scalar> {
        let g = self.form(form)?;
        let gy = g.mul_vec(y).ok()?;
        Some(x.iter().zip(&gy).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b)))
    }
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

/// `g0 + M` from a faithful action of `g0` on `M`, given by the matrices of
/// its basis: `g0` is their span under the commutator and the odd bracket is
/// completed from the invariant pairings `M x M -> g0`.
fn odd_extension(
    action: Vec<Mat>,
    g0_labels: Vec<String>,
    module_labels: Vec<String>,
) -> Result<(SuperAlgebra, ModuleAction), ConstructionError> {
    let m = module_labels.len();
    let maps: Vec<LinMap> = action.iter().cloned().map(LinMap::even).collect();
    let g0 = lie_from_maps(&maps, g0_labels)?;
    let act = ModuleAction::new(g0, m, action)?;
    let pairings = invariant_pairings(&act);
    let (alg, _) = complete_superalgebra(&act, &pairings, &[], module_labels)?;
    Ok((alg, act))
}

/// Conjugation `d -> s d s^-1` on a family of matrices spanning a space stable under it.
fn conjugation_matrix(family: &[Mat], s: &Mat) -> Result<Mat, ConstructionError> {
    use crate::superalg::derivations::flatten;
    let coords = SpanCoords::new(family.iter().map(flatten).collect())?;
    let inv = s.inverse().ok_or(LinAlgError::Singular)?;
    let cols = family
        .iter()
        .map(|d| {
            let c = s.mul(d)?.mul(&inv)?;
            coords.coords(&flatten(&c)).ok_or_else(|| LinAlgError::Shape("family not stable under conjugation".into()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Mat::from_cols(&cols, family.len())?)
}

fn sl2_matrices() -> [Mat; 3] {
    [Mat::from_ints(&[&[1, 0], &[0, -1]]), Mat::from_ints(&[&[0, 1], &[0, 0]]), Mat::from_ints(&[&[0, 0], &[1, 0]])]
}

/// `+-1` diagonal matrices of the three characters of `Z_2^3` dual to the Cayley grading.
fn cayley_characters(c: &BuiltAlgebra) -> Vec<Mat> {
    let g = c.grading("Z2^3").expect("Cayley grading");
    (0..3)
        .map(|k| {
            let d: Vec<Scalar> = g.degrees.iter().map(|x| Scalar::from_int(if x.coords()[k] == 0 { 1 } else { -1 })).collect();
            Mat::diag(&d)
        })
        .collect()
}
