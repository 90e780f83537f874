use crate::constructions::{build_kac, build_quaternions, build_tkk, ConstructionError};
use crate::exactla::{add_scaled, is_zero_vec, unit_vec, Mat, SpanCoords, Vector};
use crate::scalars::Scalar;
use crate::superalg::derivations::flatten;
use crate::superalg::Parity;

/// Outcome of checking the isomorphism between the second even ideal of
/// `tkk(K10)` and `so(U, Q)`, `U = Q0 + V (x) V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TkkLemmaReport {
    /// Every image is skew for the polar form of `Q`.
    pub images_skew: bool,
    pub rank: usize,
    pub so_dim: usize,
    /// First basis pair `(i, j)` of the domain whose bracket is not preserved.
    pub bracket_witness: Option<(usize, usize)>,
    /// `Q0 (x) E1` and the domain are commuting ideals spanning the even part,
    /// and `Q0 (x) E1` is perfect.
    pub ideals_ok: bool,
    pub ideal_dims: (usize, usize),
}

impl TkkLemmaReport {
    pub fn ok(&self) -> bool {
        self.images_skew && self.rank == self.so_dim && self.bracket_witness.is_none() && self.ideals_ok
    }
}

fn in_span(span: &SpanCoords, v: &[Scalar]) -> bool {
    span.coords(v).is_some()
}

/// Builds the map `p (x) E2 -> ad_p`, `p (x) (u (x) v) -> Q(p, .) u (x) v - Q(u (x) v, .) p`,
/// `d -> d|_{V (x) V}` and checks that it is a bijective Lie homomorphism onto `so(U, Q)`.
pub fn verify_tkk_iso_lemma() -> Result<TkkLemmaReport, ConstructionError> {
    let (k3, k10) = build_kac()?;
    let tkk = build_tkk(&k10)?;
    let alg = &tkk.built.algebra;
    let n = alg.dim();
    let e1 = k10.element("E1").expect("E1").clone();
    let e2 = k10.element("E2").expect("E2").clone();
    // v_x (x) v_y with x, y in {v1, v-1}
    let vv: Vec<(usize, usize)> = [(1, 1), (1, 2), (2, 1), (2, 2)].to_vec();
    let vv_index: Vec<usize> = vv.iter().map(|&(x, y)| 1 + 3 * x + y).collect();

    let embed = |a: usize, j: &[Scalar]| -> Vector {
        let mut v = vec![Scalar::zero(); n];
        for (i, c) in j.iter().enumerate() {
            v[tkk.index(a, i)] = c.clone();
        }
        v
    };
    let mut domain: Vec<Vector> = Vec::new();
    for a in 0..3 {
        domain.push(embed(a, &e2));
        for &k in &vv_index {
            domain.push(unit_vec(n, tkk.index(a, k)));
        }
    }
    for (d, m) in tkk.der.maps.iter().enumerate() {
        if m.parity == Parity::Even {
            domain.push(unit_vec(n, tkk.der_index(d)));
        }
    }
    let ideal1: Vec<Vector> = (0..3).map(|a| embed(a, &e1)).collect();

    let q = build_quaternions()?;
    let norm = q.form("norm").expect("norm");
    let form = k3.form("form").expect("form");
    let mut gram = Mat::zeros(7, 7);
    for a in 0..3 {
        for b in 0..3 {
            gram[(a, b)] = norm[(a + 1, b + 1)].clone();
        }
    }
    for (r, &(x, y)) in vv.iter().enumerate() {
        for (c, &(u, w)) in vv.iter().enumerate() {
            gram[(3 + r, 3 + c)] = &form[(x, u)] * &form[(y, w)];
        }
    }
    let qa = &q.algebra;
    let mut images: Vec<Mat> = Vec::new();
    for a in 0..3 {
        let mut adp = Mat::zeros(7, 7);
        for b in 0..3 {
            let mut c = qa.multiply(&qa.basis(a + 1), &qa.basis(b + 1));
            add_scaled(&mut c, &Scalar::from_int(-1), &qa.multiply(&qa.basis(b + 1), &qa.basis(a + 1)));
            for r in 0..3 {
                adp[(r, b)] = c[r + 1].clone();
            }
        }
        images.push(adp);
        for k in 0..4 {
            let p = unit_vec(7, a);
            let w = unit_vec(7, 3 + k);
            let gp = gram.mul_vec(&p)?;
            let gw = gram.mul_vec(&w)?;
            images.push(Mat::from_fn(7, 7, |r, c| &(&w[r] * &gp[c]) - &(&p[r] * &gw[c])));
        }
    }
    for m in tkk.der.maps.iter().filter(|m| m.parity == Parity::Even) {
        let mut x = Mat::zeros(7, 7);
        for (r, &kr) in vv_index.iter().enumerate() {
            for (c, &kc) in vv_index.iter().enumerate() {
                x[(3 + r, 3 + c)] = m.matrix[(kr, kc)].clone();
            }
        }
        images.push(x);
    }

    let images_skew = images.iter().all(|x| {
        let s = x.transpose().mul(&gram).and_then(|l| l.add(&gram.mul(x)?));
        s.map(|s| s.is_zero()).unwrap_or(false)
    });
    let flat: Vec<Vector> = images.iter().map(flatten).collect();
    let rank = Mat::from_cols(&flat, 49)?.rank();
    let span = SpanCoords::new(domain.clone())?;

    let mut bracket_witness = None;
    'outer: for i in 0..domain.len() {
        for j in 0..domain.len() {
            let br = alg.multiply(&domain[i], &domain[j]);
            let Some(c) = span.coords(&br) else {
                bracket_witness = Some((i, j));
                break 'outer;
            };
            let mut img = vec![Scalar::zero(); 49];
            for (ck, fk) in c.iter().zip(&flat) {
                add_scaled(&mut img, ck, fk);
            }
            if img != flatten(&images[i].commutator(&images[j])?) {
                bracket_witness = Some((i, j));
                break 'outer;
            }
        }
    }

    let span1 = SpanCoords::new(ideal1.clone())?;
    let commuting = ideal1.iter().all(|x| domain.iter().all(|y| is_zero_vec(&alg.multiply(x, y))));
    let brackets1: Vec<Vector> =
        (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|(i, j)| alg.multiply(&ideal1[i], &ideal1[j])).collect();
    let closed1 = brackets1.iter().all(|v| in_span(&span1, v));
    let perfect1 = Mat::from_cols(&brackets1, n)?.rank() == 3;
    let mut all = ideal1.clone();
    all.extend(domain.iter().cloned());
    let even_dim = alg.even_dim();
    let spans_even = Mat::from_cols(&all, n)?.rank() == even_dim
        && all.iter().all(|v| (0..n).all(|k| v[k].is_zero() || alg.parity(k) == Parity::Even));
    Ok(TkkLemmaReport {
        images_skew,
        rank,
        so_dim: 21,
        bracket_witness,
        ideals_ok: commuting && closed1 && perfect1 && spans_even,
        ideal_dims: (ideal1.len(), domain.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn so_isomorphism_holds() {
        let r = verify_tkk_iso_lemma().unwrap();
        assert_eq!(r.rank, 21);
        assert!(r.images_skew);
        assert_eq!(r.bracket_witness, None);
        assert!(r.ideals_ok);
        assert_eq!(r.ideal_dims, (3, 21));
    }
}
