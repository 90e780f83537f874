use super::clifford::central_element;
use super::{Clifford, CliffordError, GradedQuadraticSpace};
use crate::exactla::{add_scaled, independent_subset, is_zero_vec, Mat, Vector};
use crate::scalars::Scalar;

/// One application of the factorization `Cl_0(U) = S (x) Cl_0(U')` with
/// `S = <z u_1, z v_1>` and `U'` the orthogonal complement of `u_1, v_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UuvStep {
    /// `dim U` at this step.
    pub dim_u: usize,
    pub s_dim: usize,
    /// `(z u)^2 = (z v)^2 = 0` and `zu zv + zv zu = (-1)^l`.
    pub matrix_relations: bool,
    /// `S` commutes with `zbar x` for the remaining generators `x`.
    pub commutes: bool,
    /// Dimension of the subalgebra generated by the `zbar x`.
    pub complement_dim: usize,
    /// `2^(dim U' - 1)`.
    pub expected_complement_dim: usize,
    /// `e = u_1 v_1` is an idempotent of degree zero.
    pub idempotent_ok: bool,
}

impl UuvStep {
    pub fn ok(&self) -> bool {
        self.s_dim == 4
            && self.matrix_relations
            && self.commutes
            && self.complement_dim == self.expected_complement_dim
            && self.s_dim * self.complement_dim == 1 << (self.dim_u - 1)
            && self.idempotent_ok
    }
}

/// Successive factorizations along every hyperbolic pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UuvReport {
    pub steps: Vec<UuvStep>,
    /// `dim Cl_0` of the space left after removing all pairs.
    pub residual_dim: usize,
}

impl UuvReport {
    pub fn ok(&self) -> bool {
        !self.steps.is_empty() && self.steps.iter().all(UuvStep::ok)
    }
}

/// Dimension of the unital subalgebra generated by `gens`.
fn generated_dim(cl: &Clifford, gens: &[Vector]) -> usize {
    let mut basis: Vec<Vector> = vec![cl.one()];
    let mut frontier = basis.clone();
    while !frontier.is_empty() {
        let mut fresh = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = cl.mul(x, g);
                let mut trial = basis.clone();
                trial.push(y.clone());
                if independent_subset(&trial).len() == trial.len() {
                    basis.push(y.clone());
                    fresh.push(y);
                }
            }
        }
        frontier = fresh;
    }
    basis.len()
}

fn step(space: &GradedQuadraticSpace) -> Result<UuvStep, CliffordError> {
    let labels: Vec<String> = (0..space.dim()).map(|k| format!("x{k}")).collect();
    let cl = Clifford::new(space.generator_gram(), space.group.clone(), space.generator_degrees(), labels)?;
    let n = space.dim();
    let z = central_element(&cl, space, 0);
    let zbar = central_element(&cl, space, 1);
    let (u, v) = (cl.generator(0), cl.generator(1));
    let (zu, zv) = (cl.mul(&z, &u), cl.mul(&z, &v));
    let sign = if space.l().is_multiple_of(2) { Scalar::one() } else { Scalar::from_int(-1) };
    let mut anti = cl.mul(&zu, &zv);
    add_scaled(&mut anti, &Scalar::one(), &cl.mul(&zv, &zu));
    let matrix_relations =
        is_zero_vec(&cl.mul(&zu, &zu)) && is_zero_vec(&cl.mul(&zv, &zv)) && anti == crate::exactla::scale_vec(&sign, &cl.one());
    let s_dim = generated_dim(&cl, &[zu.clone(), zv.clone()]);
    // zbar x for every generator but u_1, v_1 and the last w
    let complement: Vec<Vector> = (2..n - 1).map(|g| cl.mul(&zbar, &cl.generator(g))).collect();
    let commutes = complement.iter().all(|c| {
        [&zu, &zv].iter().all(|s| is_zero_vec(&cl.commutator(s, c)))
    });
    let complement_dim = generated_dim(&cl, &complement);
    let e = cl.mul(&u, &v);
    let degree_zero = cl.mask_degree(0b11).is_zero();
    let idempotent_ok = cl.mul(&e, &e) == e && degree_zero;
    Ok(UuvStep {
        dim_u: n,
        s_dim,
        matrix_relations,
        commutes,
        complement_dim,
        expected_complement_dim: 1 << (n - 3),
        idempotent_ok,
    })
}

/// Verifies the factorization along `u_1, v_1`, then along `u_2, v_2` in the
/// complement, and so on until no pair is left.
pub fn check_uuv_factorization(space: &GradedQuadraticSpace) -> Result<UuvReport, CliffordError> {
    if space.m() == 0 {
        return Err(CliffordError::NoPairs);
    }
    let steps = (0..space.m()).map(|k| step(&space.drop_pairs(k))).collect::<Result<Vec<_>, _>>()?;
    let rest = space.drop_pairs(space.m());
    let residual_dim = if rest.dim() == 1 {
        1
    } else {
        let labels: Vec<String> = (0..rest.dim()).map(|k| format!("x{k}")).collect();
        let cl = Clifford::new(rest.generator_gram(), rest.group.clone(), rest.generator_degrees(), labels)?;
        let evens: Vec<Vector> = cl.even_masks().into_iter().map(|m| cl.monomial(m)).collect();
        Mat::from_cols(&evens, cl.dim())?.rank()
    };
    Ok(UuvReport { steps, residual_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{GradingGroup, GroupElement};
    use crate::cliffordlab::standard_configurations;

    #[test]
    fn three_pairs_factor_completely() {
        let (_, raw, _) = standard_configurations().into_iter().find(|c| c.0 == "m=3").unwrap();
        let r = check_uuv_factorization(&raw.normalize().unwrap()).unwrap();
        assert_eq!(r.steps.len(), 3);
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.residual_dim, 1);
    }

    #[test]
    fn quaternion_model_after_one_merge() {
        // the quaternion model degrees with w_3 moved onto the degree of w_4
        let g = GradingGroup::new(0, vec![2; 4]).unwrap();
        let degs: Vec<GroupElement> = [[1, 0, 0, 0], [1, 1, 0, 0], [0, 1, 1, 1], [0, 1, 1, 1], [1, 1, 0, 1], [1, 0, 0, 1], [0, 0, 0, 1]]
            .iter()
            .map(|c| g.element_flat(c).unwrap())
            .collect();
        let u = super::super::RawQuadraticSpace::with_standard_form(g, degs).unwrap().normalize().unwrap();
        assert_eq!(u.merges, 1);
        let r = check_uuv_factorization(&u).unwrap();
        assert!(r.ok(), "{r:?}");
        assert_eq!(r.residual_dim, 16);
    }

    #[test]
    fn no_pairs_is_an_error() {
        let (_, raw, _) = standard_configurations().into_iter().find(|c| c.0 == "m=0 r=3 Cayley").unwrap();
        assert_eq!(check_uuv_factorization(&raw.normalize().unwrap()), Err(CliffordError::NoPairs));
    }
}
