use super::CliffordError;
use crate::abgroup::{GradingGroup, GroupElement};
use crate::exactla::{add_scaled, scale_vec, unit_vec, Mat, Vector};
use crate::scalars::{parse_scalar, Scalar};
use std::collections::BTreeMap;

/// Homogeneous basis of a graded vector space together with the Gram matrix
/// of the polar form `q(x, y) = q(x + y) - q(x) - q(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawQuadraticSpace {
    pub group: GradingGroup,
    pub degrees: Vec<GroupElement>,
    pub gram: Mat,
}

/// `u, v` with `q(u) = q(v) = 0`, `q(u, v) = 1`, `deg u = degree = -deg v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperbolicPair {
    pub u: Vector,
    pub v: Vector,
    pub degree: GroupElement,
}

/// `w` with `q(w) = q`, of degree `h` with `2h = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Anisotropic {
    pub w: Vector,
    pub degree: GroupElement,
    pub q: Scalar,
}

/// Odd dimensional graded quadratic space in the normal form
/// `u_1, v_1, ..., u_m, v_m, w_1, ..., w_{2l+1}` with pairwise distinct `h_j`
/// summing to zero. Vectors are kept in the coordinates of the raw basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedQuadraticSpace {
    pub group: GradingGroup,
    pub pairs: Vec<HyperbolicPair>,
    pub anisotropic: Vec<Anisotropic>,
    /// Element added to every degree so that the `h_j` sum to zero.
    pub shift: GroupElement,
    /// Number of pairs obtained by merging two `w`'s of equal degree.
    pub merges: usize,
}

fn is_two_torsion(g: &GroupElement) -> bool {
    g.times(2).is_zero()
}

fn polar(gram: &Mat, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let gy = gram.mul_vec(y).expect("gram is square");
    x.iter().zip(&gy).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
}

impl RawQuadraticSpace {
    pub fn new(group: GradingGroup, degrees: Vec<GroupElement>, gram: Mat) -> Result<Self, CliffordError> {
        let n = degrees.len();
        if gram.rows() != n || gram.cols() != n {
            return Err(CliffordError::Shape(format!("{}x{} Gram matrix for {n} vectors", gram.rows(), gram.cols())));
        }
        if gram.transpose() != gram {
            return Err(CliffordError::Shape("Gram matrix is not symmetric".into()));
        }
        Ok(RawQuadraticSpace { group, degrees, gram })
    }

    /// Form with `q(w) = 1` on vectors of order dividing 2 and `q(u, v) = 1`
    /// between each remaining vector and the next unused one of opposite degree.
    pub fn with_standard_form(group: GradingGroup, degrees: Vec<GroupElement>) -> Result<Self, CliffordError> {
        let n = degrees.len();
        let mut gram = Mat::zeros(n, n);
        let mut used = vec![false; n];
        for i in 0..n {
            if used[i] {
                continue;
            }
            used[i] = true;
            if is_two_torsion(&degrees[i]) {
                gram[(i, i)] = Scalar::from_int(2);
                continue;
            }
            let target = degrees[i].neg();
            let j = (i + 1..n).find(|&j| !used[j] && degrees[j] == target).ok_or(CliffordError::Unpaired(i))?;
            used[j] = true;
            gram[(i, j)] = Scalar::one();
            gram[(j, i)] = Scalar::one();
        }
        Self::new(group, degrees, gram)
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// Parses a configuration: a group literal, then one degree per line,
    /// optionally followed by a line `gram` and the rows of the Gram matrix of
    /// the polar form. Degrees are either `([free];[torsion])` or a flat
    /// coordinate list `(a, b, ...)`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, CliffordError> {
        let err = |line: usize, message: String| CliffordError::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (gl, glit) = lines.next().ok_or_else(|| err(1, "missing group literal".into()))?;
        let group: GradingGroup = glit.parse().map_err(|e| err(gl, format!("{e}")))?;
        let mut degrees = Vec::new();
        let mut rows: Option<Vec<(usize, &str)>> = None;
        for (ln, l) in lines {
            if let Some(r) = rows.as_mut() {
                r.push((ln, l));
            } else if l.eq_ignore_ascii_case("gram") {
                rows = Some(Vec::new());
            } else {
                degrees.push(parse_degree(&group, l).map_err(|m| err(ln, m))?);
            }
        }
        if degrees.is_empty() {
            return Err(err(gl, "no degrees given".into()));
        }
        let Some(rows) = rows else {
            return Self::with_standard_form(group, degrees);
        };
        let n = degrees.len();
        if rows.len() != n {
            let ln = rows.last().map_or(gl, |r| r.0);
            return Err(err(ln, format!("expected {n} Gram rows, found {}", rows.len())));
        }
        let mut gram = Mat::zeros(n, n);
        for (r, (ln, l)) in rows.iter().enumerate() {
            let entries: Vec<&str> = l.split([',', ' ', '\t']).filter(|s| !s.is_empty()).collect();
            if entries.len() != n {
                return Err(err(*ln, format!("expected {n} entries, found {}", entries.len())));
            }
            for (c, e) in entries.iter().enumerate() {
                gram[(r, c)] = parse_scalar(e).map_err(|x| err(*ln, format!("{x}")))?;
            }
        }
        Self::new(group, degrees, gram)
    }

    /// Brings the space to normal form: dual bases on `U_g + U_{-g}` for
    /// `2g != 0`, an orthogonal basis on each `U_h` with `2h = 0` whose vectors
    /// are merged two at a time into hyperbolic pairs, and finally the shift
    /// by the sum of the remaining `h_j`.
    pub fn normalize(&self) -> Result<GradedQuadraticSpace, CliffordError> {
        let n = self.dim();
        if n.is_multiple_of(2) {
            return Err(CliffordError::EvenDimension(n));
        }
        for i in 0..n {
            for j in 0..n {
                if !self.gram[(i, j)].is_zero() && !self.degrees[i].add(&self.degrees[j])?.is_zero() {
                    return Err(CliffordError::Incompatible(i, j));
                }
            }
        }
        if self.gram.rank() != n {
            return Err(CliffordError::Degenerate);
        }
        let mut by_degree: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, d) in self.degrees.iter().enumerate() {
            by_degree.entry(d.clone()).or_default().push(i);
        }
        let mut pairs = Vec::new();
        let mut anisotropic = Vec::new();
        let mut merges = 0;
        let mut done: Vec<GroupElement> = Vec::new();
        for (g, idx) in &by_degree {
            if done.contains(g) {
                continue;
            }
            if !is_two_torsion(g) {
                let neg = g.neg();
                let dual = &by_degree[&neg];
                let block = self.gram.select(idx, dual);
                let inv = block.inverse().ok_or(CliffordError::Degenerate)?;
                for (k, &i) in idx.iter().enumerate() {
                    let mut v = vec![Scalar::zero(); n];
                    for (r, &j) in dual.iter().enumerate() {
                        v[j] = inv[(r, k)].clone();
                    }
                    pairs.push(HyperbolicPair { u: unit_vec(n, i), v, degree: g.clone() });
                }
                done.push(neg);
                continue;
            }
            let orth = self.orthogonal_basis(idx);
            let mut chunks = orth.chunks_exact(2);
            for pair in &mut chunks {
                let (a, b) = (&pair[0], &pair[1]);
                let qa = &polar(&self.gram, a, a) * &Scalar::frac(1, 2);
                let qb = &polar(&self.gram, b, b) * &Scalar::frac(1, 2);
                let ratio = (-&qa).div(&qb)?;
                let lambda = ratio.sqrt().ok_or_else(|| CliffordError::NoSquareRoot(ratio.to_expr()))?;
                let mut u = scale_vec(&Scalar::frac(1, 2), a);
                add_scaled(&mut u, &(&lambda * &Scalar::frac(1, 2)), b);
                let c = Scalar::frac(1, 2).div(&qa)?;
                let mut v = scale_vec(&c, a);
                add_scaled(&mut v, &-(&lambda * &c), b);
                pairs.push(HyperbolicPair { u, v, degree: g.clone() });
                merges += 1;
            }
            for w in chunks.remainder() {
                let q = &polar(&self.gram, w, w) * &Scalar::frac(1, 2);
                anisotropic.push(Anisotropic { w: w.clone(), degree: g.clone(), q });
            }
        }
        let shift = anisotropic.iter().try_fold(self.group.zero(), |acc, a| acc.add(&a.degree))?;
        for p in &mut pairs {
            p.degree = p.degree.add(&shift)?;
        }
        for a in &mut anisotropic {
            a.degree = a.degree.add(&shift)?;
        }
        Ok(GradedQuadraticSpace { group: self.group.clone(), pairs, anisotropic, shift, merges })
    }

    /// Orthogonal basis of the span of the given basis vectors, none isotropic.
    fn orthogonal_basis(&self, idx: &[usize]) -> Vec<Vector> {
        let n = self.dim();
        let mut rest: Vec<Vector> = idx.iter().map(|&i| unit_vec(n, i)).collect();
        let mut out = Vec::new();
        while !rest.is_empty() {
            let pos = match rest.iter().position(|x| !polar(&self.gram, x, x).is_zero()) {
                Some(p) => p,
                None => {
                    // all remaining vectors isotropic: x + y is not, for some pair
                    let (i, j) = (0..rest.len())
                        .flat_map(|i| (i + 1..rest.len()).map(move |j| (i, j)))
                        .find(|&(i, j)| !polar(&self.gram, &rest[i], &rest[j]).is_zero())
                        .expect("form is nondegenerate on the component");
                    let y = rest[j].clone();
                    add_scaled(&mut rest[i], &Scalar::one(), &y);
                    i
                }
            };
            let x = rest.swap_remove(pos);
            let bxx = polar(&self.gram, &x, &x);
            for y in &mut rest {
                let c = polar(&self.gram, y, &x).div(&bxx).expect("nonzero");
                add_scaled(y, &-c, &x);
            }
            out.push(x);
        }
        out
    }
}

fn parse_degree(group: &GradingGroup, s: &str) -> Result<GroupElement, String> {
    if s.contains(';') {
        return group.parse_element(s).map_err(|e| e.to_string());
    }
    let body = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(|| format!("bad degree literal {s:?}"))?;
    let coords = body
        .split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<i64>().map_err(|_| format!("bad coordinate {x:?} in {s:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    group.element_flat(&coords).map_err(|e| e.to_string())
}

impl GradedQuadraticSpace {
    /// Normal form given directly by its degrees; vectors are the standard
    /// basis in the order `u_1, v_1, ..., w_1, ...`.
    pub fn from_degrees(
        group: GradingGroup,
        pair_degrees: &[GroupElement],
        w: &[(GroupElement, Scalar)],
    ) -> Result<Self, CliffordError> {
        let n = 2 * pair_degrees.len() + w.len();
        let pairs = pair_degrees
            .iter()
            .enumerate()
            .map(|(i, g)| HyperbolicPair { u: unit_vec(n, 2 * i), v: unit_vec(n, 2 * i + 1), degree: g.clone() })
            .collect();
        let base = 2 * pair_degrees.len();
        let anisotropic =
            w.iter().enumerate().map(|(j, (h, q))| Anisotropic { w: unit_vec(n, base + j), degree: h.clone(), q: q.clone() }).collect();
        let space = GradedQuadraticSpace { shift: group.zero(), group, pairs, anisotropic, merges: 0 };
        space.check_normalized()?;
        Ok(space)
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    /// `l` with `2l + 1` anisotropic vectors.
    pub fn l(&self) -> usize {
        self.anisotropic.len() / 2
    }

    pub fn dim(&self) -> usize {
        2 * self.pairs.len() + self.anisotropic.len()
    }

    pub fn h(&self) -> Vec<GroupElement> {
        self.anisotropic.iter().map(|a| a.degree.clone()).collect()
    }

    /// Generator degrees in the order `u_1, v_1, ..., w_1, ...`.
    pub fn generator_degrees(&self) -> Vec<GroupElement> {
        let mut out: Vec<GroupElement> = self.pairs.iter().flat_map(|p| [p.degree.clone(), p.degree.neg()]).collect();
        out.extend(self.h());
        out
    }

    /// Gram matrix of the polar form on the generators.
    pub fn generator_gram(&self) -> Mat {
        let n = self.dim();
        let mut g = Mat::zeros(n, n);
        for i in 0..self.m() {
            g[(2 * i, 2 * i + 1)] = Scalar::one();
            g[(2 * i + 1, 2 * i)] = Scalar::one();
        }
        for (j, a) in self.anisotropic.iter().enumerate() {
            let k = 2 * self.m() + j;
            g[(k, k)] = &a.q * &Scalar::from_int(2);
        }
        g
    }

    /// The space with the first `k` hyperbolic pairs removed.
    pub fn drop_pairs(&self, k: usize) -> GradedQuadraticSpace {
        GradedQuadraticSpace { pairs: self.pairs[k..].to_vec(), ..self.clone() }
    }

    /// Odd dimension, `2h_j = 0`, distinct `h_j` and `sum h_j = 0`.
    pub fn check_normalized(&self) -> Result<(), CliffordError> {
        let h = self.h();
        if h.len().is_multiple_of(2) {
            return Err(CliffordError::EvenDimension(self.dim()));
        }
        if let Some(x) = h.iter().find(|x| !is_two_torsion(x)) {
            return Err(CliffordError::NotNormalized(format!("h = {x} has order greater than 2")));
        }
        for i in 0..h.len() {
            if h[i + 1..].contains(&h[i]) {
                return Err(CliffordError::NotNormalized(format!("h = {} is repeated", h[i])));
            }
        }
        let sum = h.iter().try_fold(self.group.zero(), |acc, x| acc.add(x))?;
        if !sum.is_zero() {
            return Err(CliffordError::NotNormalized(format!("the h_j sum to {sum}")));
        }
        Ok(())
    }
}
