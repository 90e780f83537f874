use super::{grading_from_diag, grading_type, verify_grading, DiagGenerators, Grading, GradingCheck, GradingType};
use crate::abgroup::{GradingGroup, Invariants};
use crate::constructions::{
    build_d21, build_f4, build_g3, build_kac, build_tkk, iota, phi_hat, quaternion_conjugation, varpi, BuiltAlgebra,
    ConstructionError, D21Alpha, D21Layout, F4Model,
};
use crate::exactla::{unit_vec, Mat, Vector};
use crate::scalars::{CycNumber, Scalar};
use crate::superalg::SuperAlgebra;

/// Which algebra to reproduce the fine gradings of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogTarget {
    F4,
    G3,
    D21(D21Alpha),
}

/// One grading of the catalog together with the values it must reproduce.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub model: String,
    pub dim: usize,
    pub grading: Grading,
    pub check: GradingCheck,
    pub expected_type: GradingType,
    pub actual_type: GradingType,
    pub expected_group: Invariants,
    pub actual_group: Invariants,
}

impl CatalogEntry {
    pub fn pass(&self) -> bool {
        self.check.ok
            && self.expected_type == self.actual_type
            && self.expected_group == self.actual_group
            && self.actual_type.total_dim() == self.dim
    }
}

fn group(literal: &str) -> Invariants {
    literal.parse::<GradingGroup>().expect("valid group literal").invariants()
}

fn entry(
    name: &str,
    built: &BuiltAlgebra,
    grading: Grading,
    expected_type: &[usize],
    expected_group: &str,
) -> Result<CatalogEntry, ConstructionError> {
    let check = verify_grading(&built.algebra, &grading)?;
    let actual_group = grading.realized_group()?;
    Ok(CatalogEntry {
        name: name.to_string(),
        model: built.name.clone(),
        dim: built.algebra.dim(),
        actual_type: grading_type(&grading),
        grading,
        check,
        expected_type: GradingType(expected_type.to_vec()),
        expected_group: group(expected_group),
        actual_group,
    })
}

fn ad(a: &SuperAlgebra, x: &[Scalar]) -> Mat {
    a.left_mul(x)
}

fn diag_entry(
    name: &str,
    built: &BuiltAlgebra,
    gens: DiagGenerators,
    expected_type: &[usize],
    expected_group: &str,
) -> Result<CatalogEntry, ConstructionError> {
    let g = grading_from_diag(&built.algebra, &gens)?;
    entry(name, built, g, expected_type, expected_group)
}

fn element<'a>(b: &'a BuiltAlgebra, name: &str) -> &'a Vector {
    b.element(name).unwrap_or_else(|| panic!("{} has no element {name}", b.name))
}

fn characters(b: &BuiltAlgebra) -> Vec<(Mat, u32)> {
    (1..=3).map(|k| (b.map(&format!("chi{k}")).expect("character").matrix.clone(), 2)).collect()
}

/// Degree derivations of the two `Z` factors of the `Z^2`-grading on `K10`.
fn k10_degree_derivations(k10: &BuiltAlgebra) -> [Mat; 2] {
    let g = k10.grading("Z^2").expect("K10 Z^2 grading");
    [0, 1].map(|c| Mat::diag(&g.degrees.iter().map(|d| Scalar::from_int(d.coords()[c])).collect::<Vec<_>>()))
}

fn f4_entries() -> Result<Vec<CatalogEntry>, ConstructionError> {
    let mut out = Vec::new();
    let cay = build_f4(F4Model::Cayley)?;
    let a = &cay.algebra;
    let torus: Vec<Mat> = ["h", "t45", "t26", "t13"].iter().map(|t| ad(a, element(&cay, t))).collect();
    out.push(diag_entry("F4 (i) Cartan", &cay, DiagGenerators::new(torus, vec![]), &[36, 0, 0, 1], "Z^4")?);
    let gens = DiagGenerators::new(vec![ad(a, element(&cay, "h"))], characters(&cay));
    out.push(diag_entry("F4 (ii) ZxZ2^3 Cayley", &cay, gens, &[19, 0, 7], "Z x Z_2^3")?);

    let (_, k10) = build_kac()?;
    let tkk = build_tkk(&k10)?;
    let [d1, d2] = k10_degree_derivations(&k10);
    let adq: Vec<(Mat, u32)> = [1, 2]
        .iter()
        .map(|&k| Ok((tkk.lift_quaternion_map(&quaternion_conjugation(k))?, 2)))
        .collect::<Result<_, ConstructionError>>()?;
    let gens = DiagGenerators::new(vec![tkk.lift_derivation(&d1)?, tkk.lift_derivation(&d2)?], adq.clone());
    out.push(diag_entry("F4 (iii) Z^2xZ2^2 tkk", &tkk.built, gens, &[32, 4], "Z^2 x Z_2^2")?);
    let total = d1.add(&d2)?;
    let tau = &k10.map("tau").expect("tau").matrix;
    let mut finite = vec![(tkk.lift_automorphism(tau)?, 2)];
    finite.extend(adq);
    let gens = DiagGenerators::new(vec![tkk.lift_derivation(&total)?], finite);
    out.push(diag_entry("F4 (iv) ZxZ2^3 tkk", &tkk.built, gens, &[31, 0, 3], "Z x Z_2^3")?);

    let quat = build_f4(F4Model::Quaternion)?;
    let g = quat.grading("Z2^3xZ4").expect("designated grading").clone();
    out.push(entry("F4 (v) Z4xZ2^3 quaternion", &quat, g, &[24, 6, 0, 1], "Z_4 x Z_2^3")?);
    Ok(out)
}

fn g3_entries() -> Result<Vec<CatalogEntry>, ConstructionError> {
    let g3 = build_g3()?;
    let a = &g3.algebra;
    let torus: Vec<Mat> = ["h", "t1", "t2"].iter().map(|t| ad(a, element(&g3, t))).collect();
    let cartan = diag_entry("G3 Cartan", &g3, DiagGenerators::new(torus, vec![]), &[28, 0, 1], "Z^3")?;
    let gens = DiagGenerators::new(vec![ad(a, element(&g3, "h"))], characters(&g3));
    let mixed = diag_entry("G3 ZxZ2^3", &g3, gens, &[17, 7], "Z x Z_2^3")?;
    Ok(vec![cartan, mixed])
}

fn d21_entries(mode: D21Alpha) -> Result<Vec<CatalogEntry>, ConstructionError> {
    let d = build_d21(mode.clone())?;
    let a = &d.algebra;
    let n = a.dim();
    let h = |l: usize| unit_vec(n, D21Layout::sp(l, 0));
    let ad_h = |l: usize| ad(a, &h(l));
    let i = Scalar::i();
    let am = Mat::diag(&[i.clone(), -i]);
    let bm = Mat::from_ints(&[&[0, -1], &[1, 0]]);
    let one = Mat::identity(2);
    let mut out = Vec::new();

    out.push(diag_entry("D21 Cartan", &d, DiagGenerators::new((0..3).map(ad_h).collect(), vec![]), &[14, 0, 1], "Z^3")?);
    let finite = vec![(iota(&am, &am, &am), 4), (iota(&bm, &bm, &am), 4), (iota(&am, &bm, &bm), 4)];
    out.push(diag_entry("D21 Z4xZ2^2", &d, DiagGenerators::new(vec![], finite), &[14, 0, 1], "Z_4 x Z_2^2")?);
    for l in 0..3 {
        let slot = |x: &Mat| {
            let mut f = [x.clone(), x.clone(), x.clone()];
            f[l] = one.clone();
            iota(&f[0], &f[1], &f[2])
        };
        let gens = DiagGenerators::new(vec![ad_h(l)], vec![(slot(&am), 2), (slot(&bm), 2)]);
        out.push(diag_entry(&format!("D21 ZxZ2^2 variant {}", l + 1), &d, gens, &[11, 3], "Z x Z_2^2")?);
    }

    if let D21Alpha::Value(alpha) = &mode {
        if *alpha == CycNumber::omega() {
            let mut diag = h(0);
            diag[D21Layout::sp(1, 0)] = Scalar::one();
            diag[D21Layout::sp(2, 0)] = Scalar::one();
            let gens = DiagGenerators::new(vec![ad(a, &diag)], vec![(varpi(), 3)]);
            out.push(diag_entry("D21 ZxZ3 (alpha = omega)", &d, gens, &[17], "Z x Z_3")?);
        }
        if *alpha == CycNumber::frac(-1, 2) {
            let pi23 = phi_hat(&one, &one, &one);
            let gens = DiagGenerators::new(
                vec![ad_h(0)],
                vec![(pi23.clone(), 2), (iota(&one, &am, &am), 2), (iota(&one, &bm, &bm), 2)],
            );
            out.push(diag_entry("D21 ZxZ2^3 (alpha = -1/2)", &d, gens, &[17], "Z x Z_2^3")?);
            let mut h23 = h(1);
            h23[D21Layout::sp(2, 0)] = Scalar::one();
            let gens = DiagGenerators::new(vec![ad_h(0), ad(a, &h23)], vec![(pi23, 2)]);
            out.push(diag_entry("D21 Z^2xZ2 (alpha = -1/2)", &d, gens, &[15, 1], "Z^2 x Z_2")?);
            let phi = phi_hat(&bm, &one, &bm);
            let psi = iota(&am, &am, &am.scale(&Scalar::from_int(-1)));
            let gens = DiagGenerators::new(vec![], vec![(phi, 4), (psi, 4)]);
            out.push(diag_entry("D21 Z4^2 (alpha = -1/2)", &d, gens, &[13, 2], "Z_4^2")?);
        }
    }
    Ok(out)
}

/// Builds every catalog grading of the target on an explicit model and
/// compares its type and realized group with the expected values.
pub fn catalog(target: &CatalogTarget) -> Result<Vec<CatalogEntry>, ConstructionError> {
    match target {
        CatalogTarget::F4 => f4_entries(),
        CatalogTarget::G3 => g3_entries(),
        CatalogTarget::D21(mode) => d21_entries(mode.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(entries: &[CatalogEntry]) -> Vec<String> {
        entries
            .iter()
            .map(|e| format!("{} ok={} type={} group={} pass={}", e.name, e.check.ok, e.actual_type, e.actual_group, e.pass()))
            .collect()
    }

    #[test]
    fn f4_catalog() {
        let e = catalog(&CatalogTarget::F4).unwrap();
        assert_eq!(e.len(), 5);
        assert!(e.iter().all(CatalogEntry::pass), "{:#?}", show(&e));
    }

    #[test]
    fn g3_catalog() {
        let e = catalog(&CatalogTarget::G3).unwrap();
        assert!(e.iter().all(CatalogEntry::pass), "{:#?}", show(&e));
    }

    #[test]
    fn d21_catalogs() {
        for mode in [D21Alpha::Symbolic, D21Alpha::Value(CycNumber::omega()), D21Alpha::Value(CycNumber::frac(-1, 2))] {
            let e = catalog(&CatalogTarget::D21(mode)).unwrap();
            assert!(e.iter().all(CatalogEntry::pass), "{:#?}", show(&e));
        }
    }
}
