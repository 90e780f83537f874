use super::{labels, BuiltAlgebra, ConstructionError};
use crate::abgroup::GradingGroup;
use crate::exactla::{add_scaled, zero_vec, Mat, Vector};
use crate::gradinglab::{grading_from_diag, DiagGenerators, Grading};
use crate::scalars::Scalar;
use crate::superalg::{Flags, LinMap, Parity, SuperAlgebra};

const K3_DEG: [i64; 3] = [0, 1, -1];

/// The Kaplansky superalgebra `K3` with basis `e` (even), `v1, v-1` (odd),
/// its `Z`-grading and the supersymmetric form with `(e|e) = 1/2`, `(v1|v-1) = 1`.
pub fn build_k3() -> Result<BuiltAlgebra, ConstructionError> {
    let half = Scalar::frac(1, 2);
    let one = Scalar::one();
    let alg = SuperAlgebra::from_entries(
        labels(&["e", "v1", "v-1"]),
        vec![Parity::Even, Parity::Odd, Parity::Odd],
        Flags::NONE,
        [
            (0, 0, 0, one.clone()),
            (0, 1, 1, half.clone()),
            (1, 0, 1, half.clone()),
            (0, 2, 2, half.clone()),
            (2, 0, 2, half.clone()),
            (1, 2, 0, one.clone()),
            (2, 1, 0, -one.clone()),
        ],
    )?;
    let mut b = BuiltAlgebra::new("K3", alg);
    let z = GradingGroup::new(1, vec![]).expect("valid group");
    b.gradings.push(("Z".into(), Grading::from_coords(z, &K3_DEG.map(|d| vec![d]))?));
    let mut form = Mat::zeros(3, 3);
    form[(0, 0)] = half;
    form[(1, 2)] = one.clone();
    form[(2, 1)] = -one;
    b.extras.forms.insert("form".into(), form);
    Ok(b)
}

fn tensor(p: &[Scalar], q: &[Scalar]) -> Vector {
    let mut v = zero_vec(10);
    for (k, a) in p.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        for (l, c) in q.iter().enumerate() {
            v[1 + 3 * k + l] = a * c;
        }
    }
    v
}

/// Returns `(K3, K10)`. `K10 = F1 + K3 (x) K3` with basis `1` followed by
/// `x (x) y` at index `1 + 3x + y`, designated gradings `Z^2` (type (8,1)) and
/// `ZxZ2` (total degree and the swap `tau`), the swap itself and the
/// idempotents `E1, E2` summing to `1`.
pub fn build_kac() -> Result<(BuiltAlgebra, BuiltAlgebra), ConstructionError> {
    let k3 = build_k3()?;
    let a = &k3.algebra;
    let form = k3.form("form").expect("K3 form").clone();
    let three_quarters = Scalar::frac(3, 4);
    let mut names = vec!["1".to_string()];
    let mut parity = vec![Parity::Even];
    for x in 0..3 {
        for y in 0..3 {
            names.push(format!("{}*{}", a.label(x), a.label(y)));
            parity.push(a.parity(x).plus(a.parity(y)));
        }
    }
    let split = |i: usize| ((i - 1) / 3, (i - 1) % 3);
    let k10 = SuperAlgebra::from_fn(names, parity, Flags::NONE, |i, j| {
        if i == 0 {
            return a_unit(j);
        }
        if j == 0 {
            return a_unit(i);
        }
        let ((x, y), (u, w)) = (split(i), split(j));
        let sign = Scalar::from_int(a.parity(y).sign(a.parity(u)));
        let mut v = tensor(&a.multiply(&a.basis(x), &a.basis(u)), &a.multiply(&a.basis(y), &a.basis(w)));
        let c = &(&three_quarters * &form[(x, u)]) * &form[(y, w)];
        add_scaled(&mut v, &-c, &a_unit(0));
        v.iter().map(|t| &sign * t).collect()
    })?;
    let mut b = BuiltAlgebra::new("K10", k10);

    let z2 = GradingGroup::new(2, vec![]).expect("valid group");
    let mut coords = vec![vec![0, 0]];
    coords.extend((0..9).map(|i| vec![K3_DEG[i / 3], K3_DEG[i % 3]]));
    b.gradings.push(("Z^2".into(), Grading::from_coords(z2, &coords)?));

    let total: Vec<Scalar> = coords.iter().map(|c| Scalar::from_int(c[0] + c[1])).collect();
    let mut tau = Mat::zeros(10, 10);
    tau[(0, 0)] = Scalar::one();
    for x in 0..3 {
        for y in 0..3 {
            tau[(1 + 3 * y + x, 1 + 3 * x + y)] = Scalar::from_int(a.parity(x).sign(a.parity(y)));
        }
    }
    let gens = DiagGenerators::new(vec![Mat::diag(&total)], vec![(tau.clone(), 2)]);
    let zz2 = grading_from_diag(&b.algebra, &gens)?;
    b.gradings.push(("ZxZ2".into(), zz2));
    b.extras.maps.insert("tau".into(), LinMap::even(tau));

    // e (x) e
    let ee = 1;
    let mut e1 = zero_vec(10);
    e1[0] = Scalar::frac(-1, 2);
    e1[ee] = Scalar::from_int(2);
    let mut e2 = zero_vec(10);
    e2[0] = Scalar::frac(3, 2);
    e2[ee] = Scalar::from_int(-2);
    b.extras.elements.insert("E1".into(), e1);
    b.extras.elements.insert("E2".into(), e2);
    Ok((k3, b))
}

fn a_unit(k: usize) -> Vector {
    crate::exactla::unit_vec(10, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{is_zero_vec, scale_vec, unit_vec};
    use crate::gradinglab::{grading_type, GradingType};
    use crate::superalg::derivations;

    #[test]
    fn k3_relations() {
        let k3 = build_k3().unwrap();
        let a = &k3.algebra;
        assert_eq!(a.multiply(&a.basis(0), &a.basis(0)), a.basis(0));
        assert_eq!(a.multiply(&a.basis(2), &a.basis(1)), scale_vec(&Scalar::from_int(-1), &a.basis(0)));
        assert!(k3.failing_gradings().unwrap().is_empty());
        assert_eq!(derivations(a).unwrap().maps.len(), 5);
    }

    #[test]
    fn e_tensor_e_squared() {
        let (_, k10) = build_kac().unwrap();
        let a = &k10.algebra;
        let ee = a.basis(1);
        let mut want = ee.clone();
        want[0] = Scalar::frac(-3, 16);
        assert_eq!(a.multiply(&ee, &ee), want);
    }

    #[test]
    fn idempotents() {
        let (_, k10) = build_kac().unwrap();
        let a = &k10.algebra;
        let e1 = k10.element("E1").unwrap();
        let e2 = k10.element("E2").unwrap();
        assert_eq!(&a.multiply(e1, e1), e1);
        assert_eq!(&a.multiply(e2, e2), e2);
        assert!(is_zero_vec(&a.multiply(e1, e2)));
        let mut s = e1.clone();
        add_scaled(&mut s, &Scalar::one(), e2);
        assert_eq!(s, unit_vec(10, 0));
    }

    #[test]
    fn k10_gradings_and_derivations() {
        let (_, k10) = build_kac().unwrap();
        assert!(k10.failing_gradings().unwrap().is_empty());
        assert_eq!(grading_type(k10.grading("Z^2").unwrap()), GradingType(vec![8, 1]));
        assert_eq!(grading_type(k10.grading("ZxZ2").unwrap()), GradingType(vec![7, 0, 1]));
        let d = derivations(&k10.algebra).unwrap();
        let even = d.maps.iter().filter(|m| m.parity == Parity::Even).count();
        assert_eq!((d.maps.len(), even), (10, 6));
    }
}
