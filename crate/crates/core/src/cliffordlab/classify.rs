use super::{build_even_clifford, CliffordError, GradedQuadraticSpace, RawQuadraticSpace};
use crate::abgroup::{GradingGroup, GroupElement};
use crate::exactla::{add_scaled, independent_subset, is_zero_vec, Mat, Vector};
use crate::gradinglab::Grading;
use crate::scalars::{root_of_unity, Scalar};
use crate::superalg::SuperAlgebra;
use std::collections::BTreeMap;
use std::fmt;

/// Isomorphism class of the graded division algebra attached to a graded simple algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DivisionClass {
    /// The ground field.
    F,
    /// Graded quaternions `Q`.
    Q,
    /// `Q (x) Q`.
    QQ,
    /// `Q (x) Q (x) Q`.
    QQQ,
}

impl DivisionClass {
    /// Class of a graded division algebra with the given support size.
    pub fn from_support(size: usize) -> Option<Self> {
        match size {
            1 => Some(DivisionClass::F),
            4 => Some(DivisionClass::Q),
            16 => Some(DivisionClass::QQ),
            64 => Some(DivisionClass::QQQ),
            _ => None,
        }
    }
}

impl fmt::Display for DivisionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DivisionClass::F => "F",
            DivisionClass::Q => "Q",
            DivisionClass::QQ => "QQ",
            DivisionClass::QQQ => "QQQ",
        };
        f.write_str(s)
    }
}

/// Outcome of [`division_class`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisionReport {
    pub class: DivisionClass,
    /// Primitive idempotent of the degree zero component.
    pub idempotent: Vector,
    pub degree_zero_dim: usize,
    /// `dim Re`.
    pub ideal_dim: usize,
    /// `dim eRe`.
    pub division_dim: usize,
    pub support: Vec<GroupElement>,
    /// Every nonzero homogeneous element of `eRe` is invertible there.
    pub graded_division: bool,
}

fn right_mul(alg: &SuperAlgebra, x: &[Scalar]) -> Mat {
    let cols: Vec<Vector> = (0..alg.dim()).map(|j| alg.multiply(&alg.basis(j), x)).collect();
    Mat::from_cols(&cols, alg.dim()).expect("square")
}

fn unit(alg: &SuperAlgebra) -> Result<Vector, CliffordError> {
    let n = alg.dim();
    let id = Mat::identity(n);
    if let Some(k) = (0..n).find(|&k| alg.left_mul(&alg.basis(k)) == id && right_mul(alg, &alg.basis(k)) == id) {
        return Ok(alg.basis(k));
    }
    // x e_j = e_j for all j
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for j in 0..n {
        let cols: Vec<Vector> = (0..n).map(|k| alg.multiply(&alg.basis(k), &alg.basis(j))).collect();
        let m = Mat::from_cols(&cols, n)?;
        for r in 0..n {
            rows.push(m.row(r).to_vec());
            rhs.push(if r == j { Scalar::one() } else { Scalar::zero() });
        }
    }
    Mat::from_rows(rows)?.solve(&rhs)?.ok().ok_or(CliffordError::NoUnit)
}

fn eigenvalue_candidates() -> Vec<Scalar> {
    let z = root_of_unity(12).expect("order 12");
    let mut out = vec![Scalar::zero()];
    for r in [(1, 1), (1, 2), (2, 1), (1, 4), (4, 1)] {
        for k in 0..12 {
            out.push(&Scalar::frac(r.0, r.1) * &Scalar::from_cyc(z.pow(k)));
        }
    }
    out
}

/// Span of `{x b : b in basis}` inside `alg`.
fn left_ideal_span(alg: &SuperAlgebra, basis: &[Vector], x: &[Scalar]) -> Vec<Vector> {
    let prods: Vec<Vector> = basis.iter().map(|b| alg.multiply(b, x)).collect();
    independent_subset(&prods).into_iter().map(|k| prods[k].clone()).collect()
}

/// Idempotent `y` of the left ideal `L` of `A` with `x y = x` for every `x` in `L`.
fn right_unit_of(alg: &SuperAlgebra, ideal: &[Vector]) -> Option<Vector> {
    let n = alg.dim();
    let mut rows: Vec<Vector> = Vec::new();
    let mut rhs: Vector = Vec::new();
    for x in ideal {
        let cols: Vec<Vector> = ideal.iter().map(|b| alg.multiply(x, b)).collect();
        let m = Mat::from_cols(&cols, n).ok()?;
        for r in 0..n {
            rows.push(m.row(r).to_vec());
            rhs.push(x[r].clone());
        }
    }
    let c = Mat::from_rows(rows).ok()?.solve(&rhs).ok()?.ok()?;
    let mut y = vec![Scalar::zero(); n];
    for (ci, b) in c.iter().zip(ideal) {
        add_scaled(&mut y, ci, b);
    }
    Some(y)
}

/// Splits `e` in `e A0 e` when possible: finds a zero divisor `t - mu e`
/// among basis elements and their products, and returns a right unit of the
/// proper left ideal it generates.
fn split_idempotent(alg: &SuperAlgebra, corner: &[Vector], e: &[Scalar], candidates: &[Scalar]) -> Option<Vector> {
    let dim = corner.len();
    let mut tests: Vec<Vector> = corner.to_vec();
    for a in corner {
        for b in corner {
            tests.push(alg.multiply(a, b));
        }
    }
    for t in &tests {
        for mu in candidates {
            let mut n = t.clone();
            add_scaled(&mut n, &-mu, e);
            if is_zero_vec(&n) {
                continue;
            }
            let ideal = left_ideal_span(alg, corner, &n);
            if ideal.len() < dim {
                if let Some(y) = right_unit_of(alg, &ideal) {
                    if !is_zero_vec(&y) && alg.multiply(&y, &y) == y {
                        return Some(y);
                    }
                }
            }
        }
    }
    None
}

/// Class of the graded division algebra `D = eRe` of a graded simple
/// associative algebra `R`, with `e` a primitive idempotent of `R_0`.
pub fn division_class(alg: &SuperAlgebra, grading: &Grading) -> Result<DivisionReport, CliffordError> {
    let alg = grading.graded_algebra(alg)?;
    let alg = alg.as_ref();
    let n = alg.dim();
    let zero_idx: Vec<usize> = (0..n).filter(|&k| grading.degrees[k].is_zero()).collect();
    let r0: Vec<Vector> = zero_idx.iter().map(|&k| alg.basis(k)).collect();
    let candidates = eigenvalue_candidates();
    let mut e = unit(alg)?;
    loop {
        let prods: Vec<Vector> = r0.iter().map(|b| alg.multiply(&alg.multiply(&e, b), &e)).collect();
        let corner: Vec<Vector> = independent_subset(&prods).into_iter().map(|k| prods[k].clone()).collect();
        if corner.len() <= 1 {
            break;
        }
        e = split_idempotent(alg, &corner, &e, &candidates).ok_or(CliffordError::NoIdempotent(corner.len()))?;
    }

    let basis: Vec<Vector> = (0..n).map(|k| alg.basis(k)).collect();
    let ideal = left_ideal_span(alg, &basis, &e);
    let mut components: BTreeMap<GroupElement, Vec<Vector>> = BTreeMap::new();
    for (k, b) in basis.iter().enumerate() {
        let x = alg.multiply(&alg.multiply(&e, b), &e);
        if !is_zero_vec(&x) {
            components.entry(grading.degrees[k].clone()).or_default().push(x);
        }
    }
    let all: Vec<Vector> = components.values().flatten().cloned().collect();
    let d_basis: Vec<Vector> = independent_subset(&all).into_iter().map(|k| all[k].clone()).collect();
    let division_dim = d_basis.len();
    let support: Vec<GroupElement> = components.keys().cloned().collect();
    let mut graded_division = true;
    for xs in components.values() {
        let rep = &xs[0];
        if Mat::from_cols(xs, n)?.rank() != 1 {
            graded_division = false;
            continue;
        }
        // left multiplication by rep is injective on eRe
        let imgs: Vec<Vector> = d_basis.iter().map(|v| alg.multiply(rep, v)).collect();
        if Mat::from_cols(&imgs, n)?.rank() != division_dim {
            graded_division = false;
        }
    }
    let class = DivisionClass::from_support(support.len()).ok_or(CliffordError::BadSupport(support.len()))?;
    Ok(DivisionReport {
        class,
        idempotent: e,
        degree_zero_dim: zero_idx.len(),
        ideal_dim: ideal.len(),
        division_dim,
        support,
        graded_division,
    })
}

/// The cases of the dimension seven classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dim7Case {
    M3,
    M2,
    M1Rank3,
    M1Rank4,
    M0Rank6,
    /// `h_6 = h_1 + ... + h_5`, `h_7 = 0`.
    M0Rank5Zero,
    /// `h_6 = h_1 + h_2`, `h_7 = h_3 + h_4 + h_5`.
    M0Rank5Split,
    /// `h_5 = h_1 + h_2`, `h_6 = h_3 + h_4`, `h_7 = 0`.
    M0Rank4Zero,
    /// `h_5 = h_1 + h_2`, `h_6 = h_1 + h_3`, `h_7 = h_1 + h_4`.
    M0Rank4Chain,
    M0Rank3,
}

struct Pattern {
    case: Dim7Case,
    m: usize,
    rank: usize,
    /// Each `h_k` as a bitmask over the first `rank` of them.
    values: &'static [u8],
    class: DivisionClass,
}

const PATTERNS: &[Pattern] = &[
    Pattern { case: Dim7Case::M3, m: 3, rank: 0, values: &[0], class: DivisionClass::F },
    Pattern { case: Dim7Case::M2, m: 2, rank: 2, values: &[1, 2, 3], class: DivisionClass::Q },
    Pattern { case: Dim7Case::M1Rank3, m: 1, rank: 3, values: &[1, 2, 4, 7, 0], class: DivisionClass::Q },
    Pattern { case: Dim7Case::M1Rank4, m: 1, rank: 4, values: &[1, 2, 4, 8, 15], class: DivisionClass::QQ },
    Pattern { case: Dim7Case::M0Rank6, m: 0, rank: 6, values: &[1, 2, 4, 8, 16, 32, 63], class: DivisionClass::QQQ },
    Pattern { case: Dim7Case::M0Rank5Zero, m: 0, rank: 5, values: &[1, 2, 4, 8, 16, 31, 0], class: DivisionClass::QQ },
    Pattern { case: Dim7Case::M0Rank5Split, m: 0, rank: 5, values: &[1, 2, 4, 8, 16, 3, 28], class: DivisionClass::QQ },
    Pattern { case: Dim7Case::M0Rank4Zero, m: 0, rank: 4, values: &[1, 2, 4, 8, 3, 12, 0], class: DivisionClass::QQ },
    Pattern { case: Dim7Case::M0Rank4Chain, m: 0, rank: 4, values: &[1, 2, 4, 8, 3, 5, 9], class: DivisionClass::Q },
    Pattern { case: Dim7Case::M0Rank3, m: 0, rank: 3, values: &[1, 2, 4, 3, 6, 5, 7], class: DivisionClass::F },
];

/// Outcome of [`dim7_case_classify`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseReport {
    pub case: Dim7Case,
    pub class: DivisionClass,
    pub m: usize,
    /// Rank over `F_2` of the subgroup generated by the `h_j`.
    pub rank: usize,
    /// `permutation[k]` is the index of the anisotropic vector playing the role of `h_{k+1}`.
    pub permutation: Vec<usize>,
}

/// Bit vector of an element of order dividing 2, one bit per torsion factor.
fn two_torsion_bits(g: &GroupElement) -> Option<u64> {
    if g.free_part().iter().any(|&x| x != 0) {
        return None;
    }
    let mut bits = 0u64;
    for (k, (&t, &m)) in g.torsion_part().iter().zip(g.group().torsion()).enumerate() {
        if (2 * t) % m != 0 {
            return None;
        }
        if t != 0 {
            bits |= 1 << k;
        }
    }
    Some(bits)
}

fn f2_rank(vs: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vs {
        let r = basis.iter().fold(v, |acc, &b| acc.min(acc ^ b));
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Searches for an ordering of `h` matching `values`; returns the permutation.
fn match_pattern(h: &[u64], rank: usize, values: &[u8]) -> Option<Vec<usize>> {
    fn choose(h: &[u64], rank: usize, values: &[u8], chosen: &mut Vec<usize>) -> Option<Vec<usize>> {
        if chosen.len() == rank {
            let basis: Vec<u64> = chosen.iter().map(|&i| h[i]).collect();
            let mut perm = chosen.clone();
            for &v in &values[rank..] {
                let target = (0..rank).filter(|b| v >> b & 1 == 1).fold(0u64, |acc, b| acc ^ basis[b]);
                let idx = (0..h.len()).find(|i| !perm.contains(i) && h[*i] == target)?;
                perm.push(idx);
            }
            return Some(perm);
        }
        for i in 0..h.len() {
            if !chosen.contains(&i) {
                chosen.push(i);
                if let Some(p) = choose(h, rank, values, chosen) {
                    return Some(p);
                }
                chosen.pop();
            }
        }
        None
    }
    if h.len() != values.len() || f2_rank(h) != rank {
        return None;
    }
    choose(h, rank, values, &mut Vec::new())
}

/// Class of `Cl_0(U, q)` for a normalized seven dimensional `U`, read off
/// from `m` and the relations among the `h_j`.
pub fn dim7_case_classify(space: &GradedQuadraticSpace) -> Result<CaseReport, CliffordError> {
    if space.dim() != 7 {
        return Err(CliffordError::NotDim7(space.dim()));
    }
    space.check_normalized()?;
    let h: Vec<u64> = space
        .h()
        .iter()
        .map(|g| two_torsion_bits(g).ok_or_else(|| CliffordError::NotNormalized(format!("h = {g} has order greater than 2"))))
        .collect::<Result<_, _>>()?;
    let m = space.m();
    for p in PATTERNS.iter().filter(|p| p.m == m) {
        if let Some(permutation) = match_pattern(&h, p.rank, p.values) {
            return Ok(CaseReport { case: p.case, class: p.class, m, rank: p.rank, permutation });
        }
    }
    Err(CliffordError::NoCase(format!("m = {m}, F_2-rank {}", f2_rank(&h))))
}

/// One configuration per case of the dimension seven classification, as
/// `(name, raw space, expected class)`.
pub fn standard_configurations() -> Vec<(&'static str, RawQuadraticSpace, DivisionClass)> {
    fn raw(group: &str, coords: &[&[i64]]) -> RawQuadraticSpace {
        let g: GradingGroup = group.parse().expect("group literal");
        let degs: Vec<GroupElement> = coords.iter().map(|c| g.element_flat(c).expect("element")).collect();
        RawQuadraticSpace::with_standard_form(g, degs).expect("standard form")
    }
    let e = |k: usize, r: usize| -> Vec<i64> { (0..r).map(|i| i64::from(i == k)).collect() };
    let sum = |ks: &[usize], r: usize| -> Vec<i64> { (0..r).map(|i| i64::from(ks.contains(&i))).collect() };
    let with_free = |free: &[i64], t: Vec<i64>| -> Vec<i64> { free.iter().copied().chain(t).collect() };

    let m3: Vec<Vec<i64>> = vec![vec![1, 0, 0], vec![-1, 0, 0], vec![0, 1, 0], vec![0, -1, 0], vec![0, 0, 1], vec![0, 0, -1], vec![0, 0, 0]];
    let m2: Vec<Vec<i64>> = vec![
        vec![1, 0, 0, 0],
        vec![-1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, -1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![0, 0, 1, 1],
    ];
    let mut m1r3 = vec![with_free(&[1], vec![0; 3]), with_free(&[-1], vec![0; 3])];
    m1r3.extend([e(0, 3), e(1, 3), e(2, 3), sum(&[0, 1, 2], 3), vec![0; 3]].into_iter().map(|t| with_free(&[0], t)));
    let mut m1r4 = vec![with_free(&[1], vec![0; 4]), with_free(&[-1], vec![0; 4])];
    m1r4.extend([e(0, 4), e(1, 4), e(2, 4), e(3, 4), sum(&[0, 1, 2, 3], 4)].into_iter().map(|t| with_free(&[0], t)));
    let r6: Vec<Vec<i64>> = (0..6).map(|k| e(k, 6)).chain([sum(&[0, 1, 2, 3, 4, 5], 6)]).collect();
    let r5a: Vec<Vec<i64>> = (0..5).map(|k| e(k, 5)).chain([sum(&[0, 1, 2, 3, 4], 5), vec![0; 5]]).collect();
    let r5b: Vec<Vec<i64>> = (0..5).map(|k| e(k, 5)).chain([sum(&[0, 1], 5), sum(&[2, 3, 4], 5)]).collect();
    let r4a: Vec<Vec<i64>> = (0..4).map(|k| e(k, 4)).chain([sum(&[0, 1], 4), sum(&[2, 3], 4), vec![0; 4]]).collect();
    let quaternion_model: Vec<Vec<i64>> = vec![
        vec![1, 0, 0, 0],
        vec![1, 1, 0, 0],
        vec![0, 1, 1, 0],
        vec![0, 1, 1, 1],
        vec![1, 1, 0, 1],
        vec![1, 0, 0, 1],
        vec![0, 0, 0, 1],
    ];
    let cayley: Vec<Vec<i64>> = vec![
        vec![1, 0, 0],
        vec![0, 1, 0],
        vec![0, 0, 1],
        vec![1, 1, 0],
        vec![0, 1, 1],
        vec![1, 1, 1],
        vec![1, 0, 1],
    ];
    fn refs(rows: &[Vec<i64>]) -> Vec<&[i64]> {
        rows.iter().map(Vec::as_slice).collect()
    }
    vec![
        ("m=3", raw("Z^3", &refs(&m3)), DivisionClass::F),
        ("m=2", raw("Z^2 x Z_2^2", &refs(&m2)), DivisionClass::Q),
        ("m=1 rank 3", raw("Z x Z_2^3", &refs(&m1r3)), DivisionClass::Q),
        ("m=1 rank 4", raw("Z x Z_2^4", &refs(&m1r4)), DivisionClass::QQ),
        ("m=0 r=6", raw("Z_2^6", &refs(&r6)), DivisionClass::QQQ),
        ("m=0 r=5 with h=0", raw("Z_2^5", &refs(&r5a)), DivisionClass::QQ),
        ("m=0 r=5 split", raw("Z_2^5", &refs(&r5b)), DivisionClass::QQ),
        ("m=0 r=4 with h=0", raw("Z_2^4", &refs(&r4a)), DivisionClass::QQ),
        ("m=0 r=4 quaternion model", raw("Z_2^4", &refs(&quaternion_model)), DivisionClass::Q),
        ("m=0 r=3 Cayley", raw("Z_2^3", &refs(&cayley)), DivisionClass::F),
    ]
}

/// Both classifiers on one configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigurationResult {
    pub space: GradedQuadraticSpace,
    pub algorithm: DivisionReport,
    pub table: CaseReport,
}

impl ConfigurationResult {
    pub fn agree(&self) -> bool {
        self.algorithm.class == self.table.class
    }
}

/// Normalizes, builds `Cl_0` and runs both classifiers.
pub fn classify_configuration(raw: &RawQuadraticSpace) -> Result<ConfigurationResult, CliffordError> {
    let space = raw.normalize()?;
    let table = dim7_case_classify(&space)?;
    let cl = build_even_clifford(&space)?;
    let algorithm = division_class(cl.algebra(), cl.grading())?;
    Ok(ConfigurationResult { space, algorithm, table })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_search_records_permutation() {
        // r = 3 pattern with the input listed out of order
        let h = [7u64, 1, 2, 4, 3, 6, 5];
        let p = match_pattern(&h, 3, &[1, 2, 4, 3, 6, 5, 7]).unwrap();
        assert_eq!(p.len(), 7);
        let basis = [h[p[0]], h[p[1]], h[p[2]]];
        assert_eq!(h[p[3]], basis[0] ^ basis[1]);
        assert_eq!(h[p[6]], basis[0] ^ basis[1] ^ basis[2]);
    }

    #[test]
    fn f2_ranks() {
        assert_eq!(f2_rank(&[1, 2, 3]), 2);
        assert_eq!(f2_rank(&[1, 2, 4, 8, 3, 5, 9]), 4);
        assert_eq!(f2_rank(&[0]), 0);
    }

    #[test]
    fn every_configuration_agrees() {
        for (name, raw, expected) in standard_configurations() {
            let r = classify_configuration(&raw).unwrap();
            assert_eq!(r.table.class, expected, "{name}: table");
            assert_eq!(r.algorithm.class, expected, "{name}: algorithm {:?}", r.algorithm);
            assert!(r.algorithm.graded_division, "{name}");
            assert_eq!(r.algorithm.ideal_dim * r.algorithm.ideal_dim, 64 * r.algorithm.division_dim, "{name}");
        }
    }

    #[test]
    fn table_cases() {
        let cases: Vec<Dim7Case> =
            standard_configurations().iter().map(|(_, raw, _)| dim7_case_classify(&raw.normalize().unwrap()).unwrap().case).collect();
        assert_eq!(
            cases,
            vec![
                Dim7Case::M3,
                Dim7Case::M2,
                Dim7Case::M1Rank3,
                Dim7Case::M1Rank4,
                Dim7Case::M0Rank6,
                Dim7Case::M0Rank5Zero,
                Dim7Case::M0Rank5Split,
                Dim7Case::M0Rank4Zero,
                Dim7Case::M0Rank4Chain,
                Dim7Case::M0Rank3
            ]
        );
    }
}
