//! Acceptance run: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use supergrade::abgroup::{GradingGroup, Invariants};
use supergrade::cliffordlab::{classify_configuration, standard_configurations, verify_cayley_model, verify_quaternion_model};
use supergrade::constructions::{build_d21, build_f4, build_g3, build_kac, quaternion_model_action, D21Alpha, F4Model};
use supergrade::exactla::{add_scaled, is_zero_vec, unit_vec};
use supergrade::gradinglab::{catalog, grading_type, is_refinement, verify_grading, verify_tkk_iso_lemma, CatalogEntry, CatalogTarget, Grading, GradingType};
use supergrade::groupslab::{f2_subspace_cases, maximal_abelian_fxq82k, maximal_abelian_q83k};
use supergrade::scalars::{CycNumber, Scalar};
use supergrade::superalg::{check_lie_super, invariant_pairings_into};

type Outcome = Result<String, String>;

fn group(literal: &str) -> Invariants {
    literal.parse::<GradingGroup>().expect("group literal").invariants()
}

/// Multiset of `(type, group)` over the entries; fails if any entry does not verify.
fn observed(entries: &[CatalogEntry]) -> Result<BTreeMap<(Vec<usize>, String), usize>, String> {
    let mut out = BTreeMap::new();
    for e in entries {
        if !e.check.ok {
            return Err(format!("{} does not verify: {:?}", e.name, e.check.witness));
        }
        *out.entry((e.actual_type.0.clone(), e.actual_group.to_string())).or_insert(0) += 1;
    }
    Ok(out)
}

fn expected(list: &[(&[usize], &str)]) -> BTreeMap<(Vec<usize>, String), usize> {
    let mut out = BTreeMap::new();
    for (t, g) in list {
        *out.entry((t.to_vec(), group(g).to_string())).or_insert(0) += 1;
    }
    out
}

fn compare_catalog(target: CatalogTarget, want: &[(&[usize], &str)]) -> Outcome {
    let entries = catalog(&target).map_err(|e| e.to_string())?;
    let got = observed(&entries)?;
    let want = expected(want);
    if got == want {
        Ok(format!("{} gradings with the expected types and groups", entries.len()))
    } else {
        Err(format!("got {got:?}, expected {want:?}"))
    }
}

fn f4_types() -> Outcome {
    compare_catalog(
        CatalogTarget::F4,
        &[
            (&[36, 0, 0, 1], "Z^4"),
            (&[19, 0, 7], "Z x Z_2^3"),
            (&[32, 4], "Z^2 x Z_2^2"),
            (&[31, 0, 3], "Z x Z_2^3"),
            (&[24, 6, 0, 1], "Z_4 x Z_2^3"),
        ],
    )
}

fn g3_types() -> Outcome {
    compare_catalog(CatalogTarget::G3, &[(&[28, 0, 1], "Z^3"), (&[17, 7], "Z x Z_2^3")])
}

fn d21_types() -> Outcome {
    let generic: Vec<(&[usize], &str)> =
        vec![(&[14, 0, 1], "Z^3"), (&[14, 0, 1], "Z_4 x Z_2^2"), (&[11, 3], "Z x Z_2^2"), (&[11, 3], "Z x Z_2^2"), (&[11, 3], "Z x Z_2^2")];
    let mut omega = generic.clone();
    omega.push((&[17], "Z x Z_3"));
    let mut half = generic.clone();
    half.extend([(&[17][..], "Z x Z_2^3"), (&[15, 1][..], "Z^2 x Z_2"), (&[13, 2][..], "Z_4^2")]);
    let runs = [
        ("symbolic", D21Alpha::Symbolic, generic),
        ("omega", D21Alpha::Value(CycNumber::omega()), omega),
        ("-1/2", D21Alpha::Value(CycNumber::frac(-1, 2)), half),
    ];
    let mut counts = Vec::new();
    for (name, mode, want) in runs {
        let n = want.len();
        compare_catalog(CatalogTarget::D21(mode), &want).map_err(|e| format!("alpha {name}: {e}"))?;
        counts.push(format!("{n} at alpha {name}"));
    }
    Ok(counts.join(", "))
}

fn axiom_suite() -> Outcome {
    let models = [
        ("D21 symbolic", build_d21(D21Alpha::Symbolic), (17, 9, 8)),
        ("G3", build_g3(), (31, 17, 14)),
        ("F4 cayley", build_f4(F4Model::Cayley), (40, 24, 16)),
        ("F4 tkk", build_f4(F4Model::Tkk), (40, 24, 16)),
        ("F4 quaternion", build_f4(F4Model::Quaternion), (40, 24, 16)),
    ];
    for (name, built, shape) in models {
        let a = built.map_err(|e| format!("{name}: {e}"))?.algebra;
        let lc = check_lie_super(&a);
        if !lc.ok() {
            return Err(format!("{name}: nonzero residual at {:?}", lc.first_failure));
        }
        if (a.dim(), a.even_dim(), a.odd_dim()) != shape {
            return Err(format!("{name}: dim {} = {}+{}", a.dim(), a.even_dim(), a.odd_dim()));
        }
    }
    Ok("five models, residuals exactly zero, dimensions 17/31/40".into())
}

fn clifford_classes() -> Outcome {
    let configs = standard_configurations();
    for (name, raw, class) in &configs {
        let r = classify_configuration(raw).map_err(|e| format!("{name}: {e}"))?;
        if r.algorithm.class != *class || r.table.class != *class {
            return Err(format!("{name}: algorithm {}, table {}, expected {class}", r.algorithm.class, r.table.class));
        }
    }
    Ok(format!("{} configurations, algorithm and case table agree", configs.len()))
}

fn structural_models() -> Outcome {
    let c = verify_cayley_model().map_err(|e| e.to_string())?;
    if !c.ok() {
        return Err(format!("Cayley model: {c:?}"));
    }
    let q = verify_quaternion_model().map_err(|e| e.to_string())?;
    if !q.ok() {
        return Err(format!("quaternion model: {q:?}"));
    }
    let t = verify_tkk_iso_lemma().map_err(|e| e.to_string())?;
    if !t.ok() {
        return Err(format!("so(U,Q) map: {t:?}"));
    }
    Ok(format!("Cl_0 = End(C) (dim {}), Phi onto End_Q(Q(x)Q) (dim {}), so(U,Q) map bijective (rank {})", c.span_dim, q.phi_rank, t.rank))
}

fn finite_groups() -> Outcome {
    let q = maximal_abelian_q83k();
    if !q.ok() || q.types != vec![vec![2, 2, 4]] || q.orbit_count != 3 {
        return Err(format!("Q8^3/K: {q:?}"));
    }
    for blocks in [2, 3] {
        let r = f2_subspace_cases(blocks).map_err(|e| e.to_string())?;
        if !r.ok() {
            return Err(format!("{blocks} blocks: {r:?}"));
        }
    }
    let f = maximal_abelian_fxq82k();
    if !f.ok() || f.orbit_count != 2 {
        return Err(format!("(F^x x Q8^2)/K: {f:?}"));
    }
    Ok(format!("{} maximal abelian subgroups of type Z_2^2 x Z_4 in 3 orbits; subspace cases exhaustive; 2 families", q.subgroup_count))
}

fn k10_gradings() -> Outcome {
    let (_, k10) = build_kac().map_err(|e| e.to_string())?;
    let failing = k10.failing_gradings().map_err(|e| e.to_string())?;
    if !failing.is_empty() {
        return Err(format!("failing gradings {failing:?}"));
    }
    let types = [("Z^2", vec![8, 1]), ("ZxZ2", vec![7, 0, 1])];
    for (name, want) in types {
        let got = grading_type(k10.grading(name).ok_or(format!("no grading {name}"))?);
        if got != GradingType(want.clone()) {
            return Err(format!("{name}: type {got}"));
        }
    }
    let a = &k10.algebra;
    let (e1, e2) = (k10.element("E1").ok_or("no E1")?, k10.element("E2").ok_or("no E2")?);
    let mut sum = e1.clone();
    add_scaled(&mut sum, &Scalar::one(), e2);
    let ok = &a.multiply(e1, e1) == e1
        && &a.multiply(e2, e2) == e2
        && is_zero_vec(&a.multiply(e1, e2))
        && is_zero_vec(&a.multiply(e2, e1))
        && sum == unit_vec(a.dim(), 0);
    if !ok {
        return Err("E1, E2 are not complementary orthogonal idempotents".into());
    }
    Ok("types (8,1) and (7,0,1); E1 E2 = 0, E1 + E2 = 1".into())
}

fn corrupted(g: &Grading) -> Grading {
    let mut bad = g.clone();
    let shift = (0..g.group.rank()).map(|k| g.group.generator(k)).find(|x| !x.is_zero()).expect("nontrivial group");
    bad.degrees[0] = bad.degrees[0].add(&shift).expect("same group");
    bad
}

fn properties() -> Outcome {
    let act = quaternion_model_action().map_err(|e| e.to_string())?;
    let pairings = invariant_pairings_into(&act, &[0, 1, 2]).len();
    if pairings != 1 {
        return Err(format!("Hom(g1 (x) g1, a1) has dimension {pairings}"));
    }

    let entries = catalog(&CatalogTarget::F4).map_err(|e| e.to_string())?;
    let fine = &entries.iter().find(|e| e.name.starts_with("F4 (ii)")).ok_or("no F4 (ii)")?.grading;
    let z = GradingGroup::new(1, vec![]).map_err(|e| e.to_string())?;
    let coarse = fine.coarsen(z.clone(), |d| Ok(z.element(d.free_part(), &[])?)).map_err(|e| e.to_string())?;
    let refl = is_refinement(fine, fine).and_then(|a| is_refinement(&coarse, &coarse).map(|b| a && b));
    let forward = is_refinement(fine, &coarse);
    let backward = is_refinement(&coarse, fine);
    match (refl, forward, backward) {
        (Ok(true), Ok(true), Ok(false)) => {}
        other => return Err(format!("refinement order on F4 (ii) and its Z-coarsening: {other:?}")),
    }

    let cay = build_f4(F4Model::Cayley).map_err(|e| e.to_string())?;
    let mut controls = 0;
    for e in entries.iter().filter(|e| e.model == cay.name) {
        let r = verify_grading(&cay.algebra, &corrupted(&e.grading)).map_err(|x| x.to_string())?;
        if r.ok || r.witness.is_none() {
            return Err(format!("corrupted {} was accepted", e.name));
        }
        controls += 1;
    }
    if controls == 0 {
        return Err("no negative controls ran".into());
    }
    Ok(format!("pairing space dim 1; refinement reflexive and antisymmetric; {controls} corrupted gradings rejected with witnesses"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, u64); 9] = [
        ("1 F(4) grading types", f4_types, 120),
        ("2 G(3) grading types", g3_types, 60),
        ("3 D(2,1;alpha) grading types", d21_types, 120),
        ("4 axiom suite", axiom_suite, 600),
        ("5 Clifford classification", clifford_classes, 120),
        ("6 structural isomorphisms", structural_models, 600),
        ("7 finite group enumerations", finite_groups, 120),
        ("8 K10 gradings and idempotents", k10_gradings, 600),
        ("9 property suite", properties, 600),
    ];
    let mut failures = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(d) if elapsed > Duration::from_secs(budget) => Err(format!("{d}, but took longer than {budget} s")),
            o => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {name}: PASS ({detail}; {} ms)", elapsed.as_millis()),
            Err(detail) => {
                failures += 1;
                println!("criterion {name}: FAIL ({detail}; {} ms)", elapsed.as_millis());
            }
        }
    }
    println!("acceptance: {}/9 criteria pass", 9 - failures);
    if failures > 0 {
        std::process::exit(1);
    }
}
