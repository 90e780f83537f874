use super::GradingError;
use crate::abgroup::{subgroup_invariants, GradingGroup, GroupElement, Invariants};
use crate::exactla::Mat;
use crate::superalg::{Parity, SuperAlgebra};
use std::borrow::Cow;
use std::collections::BTreeMap;
use std::fmt;

/// Group grading recorded by the degree of each vector of a homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grading {
    pub group: GradingGroup,
    pub degrees: Vec<GroupElement>,
    /// Homogeneous basis as columns in the algebra's coordinates; `None` means the standard basis.
    pub basis: Option<Mat>,
}

/// Type `(n_1, ..., n_r)`: `n_i` components of dimension `i`, with `n_r != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingType(pub Vec<usize>);

impl GradingType {
    /// `sum i * n_i`.
    pub fn total_dim(&self) -> usize {
        self.0.iter().enumerate().map(|(i, n)| (i + 1) * n).sum()
    }
}

impl fmt::Display for GradingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Why a grading fails to be compatible with the product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GradingWitness {
    /// `e_i e_j` has a nonzero component on `e_k` but `deg k != deg i + deg j`.
    Product { i: usize, j: usize, k: usize },
    /// The basis vector is not parity homogeneous.
    Parity { index: usize },
}

impl fmt::Display for GradingWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GradingWitness::Product { i, j, k } => write!(f, "e{i}*e{j} has a component on e{k} of the wrong degree"),
            GradingWitness::Parity { index } => write!(f, "basis vector {index} is not parity homogeneous"),
        }
    }
}

/// Result of [`verify_grading`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingCheck {
    pub ok: bool,
    pub witness: Option<GradingWitness>,
}

impl Grading {
    pub fn new(group: GradingGroup, degrees: Vec<GroupElement>) -> Self {
        Grading { group, degrees, basis: None }
    }

    pub fn with_basis(mut self, basis: Mat) -> Self {
        self.basis = Some(basis);
        self
    }

    /// Grading on `dim` basis vectors from flat degree coordinates.
    pub fn from_coords(group: GradingGroup, coords: &[Vec<i64>]) -> Result<Self, GradingError> {
        let degrees = coords.iter().map(|c| group.element_flat(c)).collect::<Result<_, _>>()?;
        Ok(Grading::new(group, degrees))
    }

    /// All vectors of degree 0 in the trivial group.
    pub fn trivial(dim: usize) -> Self {
        let g = GradingGroup::trivial();
        Grading::new(g.clone(), vec![g.zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// The algebra expressed in the homogeneous basis of this grading.
    pub fn graded_algebra<'a>(&self, alg: &'a SuperAlgebra) -> Result<Cow<'a, SuperAlgebra>, GradingError> {
        if self.dim() != alg.dim() {
            return Err(GradingError::Length { degrees: self.dim(), dim: alg.dim() });
        }
        match &self.basis {
            None => Ok(Cow::Borrowed(alg)),
            Some(p) => {
                let labels = (0..alg.dim()).map(|i| format!("x{i}")).collect();
                Ok(Cow::Owned(alg.change_basis(p, labels)?))
            }
        }
    }

    /// Homogeneous components as lists of basis indices, keyed by degree.
    pub fn components(&self) -> BTreeMap<Vec<i64>, Vec<usize>> {
        let mut out: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            out.entry(d.coords()).or_default().push(i);
        }
        out
    }

    /// Support of the grading.
    pub fn support(&self) -> Vec<GroupElement> {
        let mut seen = BTreeMap::new();
        for d in &self.degrees {
            seen.entry(d.coords()).or_insert_with(|| d.clone());
        }
        seen.into_values().collect()
    }

    /// Invariants of the subgroup generated by the support.
    pub fn realized_group(&self) -> Result<Invariants, GradingError> {
        Ok(subgroup_invariants(&self.group, &self.support())?)
    }

    /// The coarsening induced by a homomorphism `self.group -> group`, given
    /// on degrees; the homogeneous basis is kept.
    pub fn coarsen<F>(&self, group: GradingGroup, hom: F) -> Result<Grading, GradingError>
    where
        F: Fn(&GroupElement) -> Result<GroupElement, GradingError>,
    {
        let degrees = self.degrees.iter().map(hom).collect::<Result<_, _>>()?;
        Ok(Grading { group, degrees, basis: self.basis.clone() })
    }

    /// Partition of the basis into components, as a sorted list of index sets.
    pub fn partition(&self) -> Vec<Vec<usize>> {
        let mut p: Vec<Vec<usize>> = self.components().into_values().collect();
        p.sort();
        p
    }
}

/// Checks that every structure constant `c_ij^k != 0` has `deg k = deg i + deg j`
/// and that the homogeneous basis is parity homogeneous.
pub fn verify_grading(alg: &SuperAlgebra, g: &Grading) -> Result<GradingCheck, GradingError> {
    let graded = match g.graded_algebra(alg) {
        Ok(a) => a,
        Err(GradingError::Algebra(crate::superalg::AlgebraError::NotHomogeneous)) => {
            let p = g.basis.as_ref().expect("only a basis change can fail");
            let index = (0..p.cols()).find(|&j| alg.vector_parity(&p.col(j)).is_err()).unwrap_or(0);
            return Ok(GradingCheck { ok: false, witness: Some(GradingWitness::Parity { index }) });
        }
        Err(e) => return Err(e),
    };
    let n = graded.dim();
    for i in 0..n {
        for j in 0..n {
            let target = g.degrees[i].add(&g.degrees[j])?;
            for (k, _) in graded.basis_product(i, j) {
                if g.degrees[*k] != target {
                    return Ok(GradingCheck { ok: false, witness: Some(GradingWitness::Product { i, j, k: *k }) });
                }
            }
        }
    }
    Ok(GradingCheck { ok: true, witness: None })
}

/// Counts the homogeneous components of each dimension.
pub fn grading_type(g: &Grading) -> GradingType {
    let dims: Vec<usize> = g.components().values().map(Vec::len).collect();
    let max = dims.iter().copied().max().unwrap_or(0);
    let mut t = vec![0; max];
    for d in dims {
        t[d - 1] += 1;
    }
    GradingType(t)
}

/// Whether every component of `fine` lies inside a component of `coarse`.
/// Both gradings must be recorded on the same basis.
pub fn is_refinement(fine: &Grading, coarse: &Grading) -> Result<bool, GradingError> {
    if fine.basis != coarse.basis || fine.dim() != coarse.dim() {
        return Err(GradingError::DifferentBases);
    }
    Ok(fine.components().values().all(|comp| {
        let d = &coarse.degrees[comp[0]];
        comp.iter().all(|&i| &coarse.degrees[i] == d)
    }))
}

/// Even and odd dimension of each component.
pub fn component_parities(alg: &SuperAlgebra, g: &Grading) -> Result<Vec<(usize, usize)>, GradingError> {
    let graded = g.graded_algebra(alg)?;
    Ok(g.components()
        .values()
        .map(|c| {
            let even = c.iter().filter(|&&i| graded.parity(i) == Parity::Even).count();
            (even, c.len() - even)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Scalar;
    use crate::superalg::Flags;

    fn sl2() -> SuperAlgebra {
        SuperAlgebra::from_entries(
            vec!["h".into(), "e".into(), "f".into()],
            vec![Parity::Even; 3],
            Flags::LIE,
            [
                (0, 1, 1, Scalar::from_int(2)),
                (1, 0, 1, Scalar::from_int(-2)),
                (0, 2, 2, Scalar::from_int(-2)),
                (2, 0, 2, Scalar::from_int(2)),
                (1, 2, 0, Scalar::one()),
                (2, 1, 0, Scalar::from_int(-1)),
            ],
        )
        .unwrap()
    }

    fn z_grading() -> Grading {
        Grading::from_coords(GradingGroup::new(1, vec![]).unwrap(), &[vec![0], vec![2], vec![-2]]).unwrap()
    }

    #[test]
    fn root_grading_of_sl2() {
        let g = z_grading();
        assert!(verify_grading(&sl2(), &g).unwrap().ok);
        assert_eq!(grading_type(&g), GradingType(vec![3]));
        assert!(is_refinement(&g, &Grading::trivial(3)).unwrap());
        assert!(!is_refinement(&Grading::trivial(3), &g).unwrap());
    }

    #[test]
    fn corrupted_degree_has_witness() {
        let g = Grading::from_coords(GradingGroup::new(1, vec![]).unwrap(), &[vec![0], vec![2], vec![-1]]).unwrap();
        let r = verify_grading(&sl2(), &g).unwrap();
        assert!(!r.ok);
        assert_eq!(r.witness, Some(GradingWitness::Product { i: 1, j: 2, k: 0 }));
    }

    #[test]
    fn coarsening_is_refined_by_the_original() {
        let g = z_grading();
        let z2 = GradingGroup::new(0, vec![2]).unwrap();
        let c = g.coarsen(z2.clone(), |d| Ok(z2.element(&[], &[d.free_part()[0] / 2])?)).unwrap();
        assert_eq!(c.partition(), vec![vec![0], vec![1, 2]]);
        assert!(is_refinement(&g, &c).unwrap());
        assert!(!is_refinement(&c, &g).unwrap());
    }

    #[test]
    fn trivial_grading_type() {
        let t = grading_type(&Grading::trivial(5));
        assert_eq!(t, GradingType(vec![0, 0, 0, 0, 1]));
        assert_eq!(t.total_dim(), 5);
    }
}
