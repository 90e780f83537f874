use super::{check_lie_super, AlgebraError, Flags, Parity, SuperAlgebra};
use crate::exactla::{add_scaled, zero_vec, Mat, SparseSystem, Vector};
use crate::scalars::Scalar;
use std::collections::HashMap;

/// Representation of an even Lie algebra on a module; `rho[i]` is the action of basis element `i`.
#[derive(Debug, Clone)]
pub struct ModuleAction {
    pub algebra: SuperAlgebra,
    pub dim: usize,
    pub rho: Vec<Mat>,
}

impl ModuleAction {
    pub fn new(algebra: SuperAlgebra, dim: usize, rho: Vec<Mat>) -> Result<Self, AlgebraError> {
        if rho.len() != algebra.dim() || rho.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(AlgebraError::Shape("action matrices do not match".into()));
        }
        Ok(ModuleAction { algebra, dim, rho })
    }

    /// Action matrix of an arbitrary element of the algebra.
    pub fn act(&self, x: &[Scalar]) -> Mat {
        let mut m = Mat::zeros(self.dim, self.dim);
        for (c, r) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                m = m.add(&r.scale(c)).expect("same shape");
            }
        }
        m
    }

    /// Whether `rho([x,y]) = [rho(x), rho(y)]` on basis pairs.
    pub fn is_representation(&self) -> bool {
        let n = self.algebra.dim();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let lhs = self.act(&self.algebra.multiply(&self.algebra.basis(i), &self.algebra.basis(j)));
                lhs == self.rho[i].commutator(&self.rho[j]).expect("square")
            })
        })
    }
}

/// Symmetric bilinear map `M x M -> g0`, stored as `values[a * m + b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub m: usize,
    pub values: Vec<Vector>,
}

impl Pairing {
    pub fn eval(&self, a: usize, b: usize) -> &Vector {
        &self.values[a * self.m + b]
    }

    pub fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let g = self.values.first().map_or(0, Vec::len);
        let mut out = zero_vec(g);
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                add_scaled(&mut out, &(xa * yb), self.eval(a, b));
            }
        }
        out
    }
}

fn is_diagonal(m: &Mat) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

/// Greedy Lie generating set of the algebra, preferring the given indices first.
fn generating_set(g: &SuperAlgebra, preferred: &[usize]) -> Vec<usize> {
    let n = g.dim();
    let mut gens: Vec<usize> = Vec::new();
    let mut span: Vec<Vector> = Vec::new();
    let in_span = |span: &Vec<Vector>, v: &Vector| {
        let mut t = span.clone();
        t.push(v.clone());
        crate::exactla::independent_subset(&t).len() == span.len()
    };
    let order: Vec<usize> = preferred.iter().copied().chain((0..n).filter(|i| !preferred.contains(i))).collect();
    for i in order {
        let e = g.basis(i);
        if span.len() == n {
            break;
        }
        if !span.is_empty() && in_span(&span, &e) {
            continue;
        }
        gens.push(i);
        // close the span under brackets
        span.push(e);
        let mut k = 0;
        while k < span.len() {
            for j in 0..=k {
                for v in [g.multiply(&span[j], &span[k]), g.multiply(&span[k], &span[j])] {
                    if !crate::exactla::is_zero_vec(&v) && !in_span(&span, &v) {
                        span.push(v);
                    }
                }
            }
            k += 1;
        }
    }
    gens
}

/// Basis of the `g0`-invariant symmetric bilinear maps `M x M -> g0` (adjoint target).
///
/// Basis elements of `g0` acting diagonally on both `M` and `g0` prune the
/// unknowns by weight; invariance is then imposed for a Lie generating set.
pub fn invariant_pairings(act: &ModuleAction) -> Vec<Pairing> {
    let all: Vec<usize> = (0..act.algebra.dim()).collect();
    invariant_pairings_into(act, &all)
}

/// Invariant symmetric pairings with values in the span of the basis
/// elements `target`, which must span an ideal of `g0`.
pub fn invariant_pairings_into(act: &ModuleAction, target: &[usize]) -> Vec<Pairing> {
    let g = &act.algebra;
    let (m, gd) = (act.dim, g.dim());
    if m == 0 || gd == 0 || target.is_empty() {
        return Vec::new();
    }
    let ad: Vec<Mat> = (0..gd).map(|i| g.left_mul(&g.basis(i))).collect();
    let diag: Vec<usize> = (0..gd).filter(|&i| is_diagonal(&act.rho[i]) && is_diagonal(&ad[i])).collect();
    let mut var: HashMap<(usize, usize, usize), usize> = HashMap::new();
    let mut keys = Vec::new();
    for a in 0..m {
        for b in a..m {
            for &k in target {
                let alive = diag.iter().all(|&x| {
                    let w = &(&act.rho[x][(a, a)] + &act.rho[x][(b, b)]) - &ad[x][(k, k)];
                    w.is_zero()
                });
                if alive {
                    var.insert((a, b, k), keys.len());
                    keys.push((a, b, k));
                }
            }
        }
    }
    let lookup = |a: usize, b: usize, k: usize| var.get(&(a.min(b), a.max(b), k)).copied();
    let mut sys = SparseSystem::new(keys.len());
    let gens = generating_set(g, &diag);
    let rho_cols: Vec<Vec<Vec<(usize, Scalar)>>> = act
        .rho
        .iter()
        .map(|r| (0..m).map(|j| (0..m).filter(|&i| !r[(i, j)].is_zero()).map(|i| (i, r[(i, j)].clone())).collect()).collect())
        .collect();
    for &x in gens.iter().filter(|x| !diag.contains(x)) {
        for a in 0..m {
            for b in a..m {
                for &k in target {
                    let mut terms = Vec::new();
                    for &kp in target {
                        let c = &ad[x][(k, kp)];
                        if !c.is_zero() {
                            if let Some(v) = lookup(a, b, kp) {
                                terms.push((v, c.clone()));
                            }
                        }
                    }
                    for (ap, c) in &rho_cols[x][a] {
                        if let Some(v) = lookup(*ap, b, k) {
                            terms.push((v, -c));
                        }
                    }
                    for (bp, c) in &rho_cols[x][b] {
                        if let Some(v) = lookup(a, *bp, k) {
                            terms.push((v, -c));
                        }
                    }
                    if !terms.is_empty() {
                        sys.add_equation(terms);
                    }
                }
            }
        }
    }
    sys.kernel()
        .into_iter()
        .map(|x| {
            let mut values = vec![zero_vec(gd); m * m];
            for (v, &(a, b, k)) in keys.iter().enumerate() {
                if !x[v].is_zero() {
                    values[a * m + b][k] = x[v].clone();
                    values[b * m + a][k] = x[v].clone();
                }
            }
            Pairing { m, values }
        })
        .collect()
}

/// Builds `g0 + M` with odd bracket `sum_t c_t B_t`, where the coefficients
/// solve the odd-odd-odd Jacobi identity together with the extra linear
/// `constraints` (each a linear form in `c` that must vanish). The first
/// nonzero coefficient is normalized to 1.
pub fn complete_superalgebra(
    act: &ModuleAction,
    pairings: &[Pairing],
    constraints: &[Vec<Scalar>],
    module_labels: Vec<String>,
) -> Result<(SuperAlgebra, Vec<Scalar>), AlgebraError> {
    let r = pairings.len();
    if r == 0 {
        return Err(AlgebraError::NoCompletion);
    }
    let m = act.dim;
    let mut sys = SparseSystem::new(r);
    for a in 0..m {
        for b in a..m {
            for c in b..m {
                // rho(B(b,c)) e_a + rho(B(c,a)) e_b + rho(B(a,b)) e_c, per pairing
                let mut eqs: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); m];
                for (t, p) in pairings.iter().enumerate() {
                    let mut acc = zero_vec(m);
                    for (x, y, z) in [(b, c, a), (c, a, b), (a, b, c)] {
                        for (k, coef) in p.eval(x, y).iter().enumerate() {
                            if !coef.is_zero() {
                                add_scaled(&mut acc, coef, &act.rho[k].col(z));
                            }
                        }
                    }
                    for (i, v) in acc.into_iter().enumerate() {
                        if !v.is_zero() {
                            eqs[i].push((t, v));
                        }
                    }
                }
                for e in eqs.into_iter().filter(|e| !e.is_empty()) {
                    sys.add_equation(e);
                }
            }
        }
    }
    for c in constraints {
        sys.add_equation(c.iter().cloned().enumerate());
    }
    let sol = sys.kernel().into_iter().next().ok_or(AlgebraError::NoCompletion)?;
    let lead = sol.iter().find(|x| !x.is_zero()).ok_or(AlgebraError::NoCompletion)?.inv()?;
    let coeffs: Vec<Scalar> = sol.iter().map(|x| x * &lead).collect();
    let g = &act.algebra;
    let gd = g.dim();
    let mut bracket = vec![zero_vec(gd); m * m];
    for (t, p) in pairings.iter().enumerate() {
        for (ab, v) in p.values.iter().enumerate() {
            add_scaled(&mut bracket[ab], &coeffs[t], v);
        }
    }
    let mut labels = g.labels().to_vec();
    labels.extend(module_labels);
    let mut parity = vec![Parity::Even; gd];
    parity.extend(std::iter::repeat_n(Parity::Odd, m));
    let n = gd + m;
    let alg = SuperAlgebra::from_fn(labels, parity, Flags::LIE, |i, j| {
        let mut out = zero_vec(n);
        match (i < gd, j < gd) {
            (true, true) => {
                for (k, c) in g.basis_product(i, j) {
                    out[*k] = c.clone();
                }
            }
            (true, false) => {
                for (k, c) in act.rho[i].col(j - gd).into_iter().enumerate() {
                    out[gd + k] = c;
                }
            }
            (false, true) => {
                for (k, c) in act.rho[j].col(i - gd).into_iter().enumerate() {
                    out[gd + k] = -c;
                }
            }
            (false, false) => {
                for (k, c) in bracket[(i - gd) * m + (j - gd)].iter().enumerate() {
                    out[k] = c.clone();
                }
            }
        }
        out
    })?;
    if !check_lie_super(&alg).ok() {
        return Err(AlgebraError::NoCompletion);
    }
    Ok((alg, coeffs))
}

/// Rank of the span of `[M, M]` inside `g0`.
pub fn odd_bracket_rank(a: &SuperAlgebra) -> usize {
    let odd: Vec<usize> = (0..a.dim()).filter(|&i| a.parity(i) == Parity::Odd).collect();
    let mut vs = Vec::new();
    for (x, &i) in odd.iter().enumerate() {
        for &j in &odd[x..] {
            let v = a.multiply(&a.basis(i), &a.basis(j));
            if !crate::exactla::is_zero_vec(&v) {
                vs.push(v);
            }
        }
    }
    crate::exactla::independent_subset(&vs).len()
}
