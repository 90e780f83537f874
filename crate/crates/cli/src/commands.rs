use crate::report::{Check, Report};
use crate::{BuildTarget, Model, Target};
use std::path::Path;
use supergrade::cliffordlab::{classify_configuration, verify_cayley_model, verify_quaternion_model, RawQuadraticSpace};
use supergrade::constructions::{
    build_cayley, build_d21, build_f4, build_g3, build_kac, build_quaternions, BuiltAlgebra, ConstructionError, D21Alpha, F4Model,
};
use supergrade::gradinglab::{catalog, component_parities, verify_tkk_iso_lemma, CatalogEntry, CatalogTarget};
use supergrade::groupslab::{f2_subspace_cases, maximal_abelian_fxq82k, maximal_abelian_q83k, MaximalAbelianReport};
use supergrade::superalg::{check_lie_super, SuperAlgebra};

fn alpha_label(alpha: &D21Alpha) -> String {
    match alpha {
        D21Alpha::Symbolic => "a".into(),
        D21Alpha::Value(c) => c.to_expr(),
    }
}

fn build_target(target: BuildTarget, model: Model, alpha: D21Alpha) -> Result<BuiltAlgebra, ConstructionError> {
    match target {
        BuildTarget::K3 => Ok(build_kac()?.0),
        BuildTarget::K10 => Ok(build_kac()?.1),
        BuildTarget::Cayley => build_cayley(),
        BuildTarget::Quaternions => build_quaternions(),
        BuildTarget::F4 => build_f4(model.into()),
        BuildTarget::G3 => build_g3(),
        BuildTarget::D21a => build_d21(alpha),
    }
}

/// Dimension and even/odd split.
fn expected_shape(target: BuildTarget) -> (usize, usize, usize) {
    match target {
        BuildTarget::K3 => (3, 1, 2),
        BuildTarget::K10 => (10, 6, 4),
        BuildTarget::Cayley => (8, 8, 0),
        BuildTarget::Quaternions => (4, 4, 0),
        BuildTarget::F4 => (40, 24, 16),
        BuildTarget::G3 => (31, 17, 14),
        BuildTarget::D21a => (17, 9, 8),
    }
}

fn shape(a: &SuperAlgebra) -> String {
    format!("dim {} = {}+{}", a.dim(), a.even_dim(), a.odd_dim())
}

/// Returns the report and, when no output path is given, the serialized algebra.
pub fn build(target: BuildTarget, model: Model, alpha: Option<D21Alpha>, out: Option<&Path>) -> (Report, Option<String>) {
    let alpha = alpha.unwrap_or(D21Alpha::Symbolic);
    let mut command = format!("build {target:?}").to_lowercase();
    match target {
        BuildTarget::F4 => command.push_str(&format!(" --model {model:?}").to_lowercase()),
        BuildTarget::D21a => command.push_str(&format!(" --alpha {}", alpha_label(&alpha))),
        _ => {}
    }
    let mut report = Report::new(command);
    let built = match build_target(target, model, alpha) {
        Ok(b) => b,
        Err(e) => {
            report.push(Check::error("construction", "algebra builds", e));
            return (report, None);
        }
    };
    let a = &built.algebra;
    let (n, even, odd) = expected_shape(target);
    report.push(Check::compare("shape", format!("dim {n} = {even}+{odd}"), shape(a)));
    let text = a.to_text();
    let reloaded = match out {
        Some(path) => std::fs::write(path, &text)
            .map(|_| report.detail(format!("wrote {} ({} nonzero structure constants)", path.display(), a.nnz())))
            .and_then(|_| std::fs::read_to_string(path))
            .map_err(|e| format!("{}: {e}", path.display())),
        None => Ok(text.clone()),
    };
    match reloaded.and_then(|t| SuperAlgebra::from_text(&t).map_err(|e| e.to_string())) {
        Ok(back) => report.push(Check::flag(
            "round-trip",
            back == *a,
            "identical structure constants",
            if back == *a { "identical structure constants" } else { "structure constants differ" },
            None,
        )),
        Err(e) => report.push(Check::error("round-trip", "identical structure constants", e)),
    }
    (report, out.is_none().then_some(text))
}

fn axioms(report: &mut Report, name: &str, built: Result<BuiltAlgebra, ConstructionError>, expected: (usize, usize, usize)) {
    let check_name = format!("axioms {name}");
    let expected_text = format!("residuals zero, dim {} = {}+{}", expected.0, expected.1, expected.2);
    match built {
        Ok(b) => {
            let lc = check_lie_super(&b.algebra);
            let ok = lc.ok() && (b.algebra.dim(), b.algebra.even_dim(), b.algebra.odd_dim()) == expected;
            let actual = format!("{}, {}", if lc.ok() { "residuals zero" } else { "nonzero residual" }, shape(&b.algebra));
            let witness = lc.first_failure.map(|f| format!("basis indices {f:?}"));
            report.push(Check::flag(check_name, ok, expected_text, actual, witness));
        }
        Err(e) => report.push(Check::error(check_name, expected_text, e)),
    }
}

fn catalog_checks(report: &mut Report, target: &CatalogTarget) {
    match catalog(target) {
        Ok(entries) => {
            for e in entries {
                report.push(catalog_check(&e));
            }
        }
        Err(e) => report.push(Check::error("catalog", "every catalog grading verifies", e)),
    }
}

fn catalog_check(e: &CatalogEntry) -> Check {
    let expected = format!("type {} on {}", e.expected_type, e.expected_group);
    let actual = format!("type {} on {}", e.actual_type, e.actual_group);
    let witness = e.check.witness.as_ref().map(|w| format!("{} is not a grading: {w}", e.model));
    Check::flag(format!("grading {}", e.name), e.pass(), expected, actual, witness)
}

fn report_check<T: std::fmt::Debug>(report: &mut Report, name: &str, expected: &str, result: Result<T, impl std::fmt::Display>, ok: impl Fn(&T) -> bool, summary: impl Fn(&T) -> String) {
    match result {
        Ok(r) => {
            let pass = ok(&r);
            report.push(Check::flag(name, pass, expected, summary(&r), (!pass).then(|| format!("{r:?}"))));
        }
        Err(e) => report.push(Check::error(name, expected, e)),
    }
}

fn group_check(report: &mut Report, name: &str, expected: &str, r: MaximalAbelianReport, show_types: bool) {
    let types: Vec<String> = r.types.iter().map(|t| format!("{t:?}")).collect();
    let mut actual = format!("{} maximal abelian subgroups in {} orbits", r.subgroup_count, r.orbit_count);
    if show_types {
        actual.push_str(&format!(", invariant factors {}", types.join(" ")));
    }
    let ok = r.ok();
    report.push(Check::flag(name, ok, expected, actual, (!ok).then(|| format!("{r:?}"))));
}

pub fn theorem_check(target: Target, alpha: Option<D21Alpha>) -> Report {
    let alpha = alpha.unwrap_or(D21Alpha::Symbolic);
    let command = match target {
        Target::D21a => format!("theorem-check d21a --alpha {}", alpha_label(&alpha)),
        _ => format!("theorem-check {target:?}").to_lowercase(),
    };
    let mut report = Report::new(command);
    match target {
        Target::F4 => {
            catalog_checks(&mut report, &CatalogTarget::F4);
            for (name, model) in [("F4 cayley", F4Model::Cayley), ("F4 tkk", F4Model::Tkk), ("F4 quaternion", F4Model::Quaternion)] {
                axioms(&mut report, name, build_f4(model), (40, 24, 16));
            }
            report_check(&mut report, "cayley model of Cl_0", "End(C) via left multiplication, image dim 64", verify_cayley_model(), |r| r.ok(), |r| {
                format!("image dim {}, identities {}", r.span_dim, if r.ok() { "hold" } else { "fail" })
            });
            report_check(&mut report, "quaternion model of Cl_0", "Phi onto End_Q(Q (x) Q), h skew-hermitian and adjoint", verify_quaternion_model(), |r| r.ok(), |r| {
                format!("Phi rank {}, commutant dim {}, identities {}", r.phi_rank, r.commutant_dim, if r.ok() { "hold" } else { "fail" })
            });
            report_check(&mut report, "so(U,Q) isomorphism", "bijective Lie homomorphism onto so(U,Q)", verify_tkk_iso_lemma(), |r| r.ok(), |r| {
                format!("rank {} of so dim {}", r.rank, r.so_dim)
            });
        }
        Target::G3 => {
            catalog_checks(&mut report, &CatalogTarget::G3);
            axioms(&mut report, "G3", build_g3(), (31, 17, 14));
        }
        Target::D21a => {
            catalog_checks(&mut report, &CatalogTarget::D21(alpha.clone()));
            axioms(&mut report, &format!("D21 alpha = {}", alpha_label(&alpha)), build_d21(alpha), (17, 9, 8));
            group_check(&mut report, "maximal abelian subgroups of Q8^3/K", "3 orbits, all of type Z_2^2 x Z_4", maximal_abelian_q83k(), true);
            group_check(&mut report, "maximal abelian subgroups of (F^x x Q8^2)/K", "2 families containing the center", maximal_abelian_fxq82k(), false);
            for blocks in [2, 3] {
                report_check(
                    &mut report,
                    &format!("F_2 subspace cases, {blocks} blocks"),
                    "every subspace in exactly one family",
                    f2_subspace_cases(blocks),
                    |r| r.ok(),
                    |r| format!("{} subspaces, family counts {:?}", r.classified_count, r.family_counts),
                );
            }
        }
    }
    report
}

pub fn clifford_class(config: &Path) -> Report {
    let mut report = Report::new(format!("clifford-class {}", config.display()));
    let parsed = std::fs::read_to_string(config)
        .map_err(|e| format!("{}: {e}", config.display()))
        .and_then(|t| RawQuadraticSpace::parse(&t).map_err(|e| format!("{}: {e}", config.display())));
    let raw = match parsed {
        Ok(r) => r,
        Err(e) => {
            report.push(Check::error("configuration", "well-formed configuration", e));
            return report;
        }
    };
    let degrees: Vec<String> = raw.degrees.iter().map(ToString::to_string).collect();
    report.detail(format!("group {}", raw.group));
    report.detail(format!("degrees {}", degrees.join(" ")));
    let result = match classify_configuration(&raw) {
        Ok(r) => r,
        Err(e) => {
            report.push(Check::error("classification", "both classifiers succeed", e));
            return report;
        }
    };
    let s = &result.space;
    let h: Vec<String> = s.h().iter().map(ToString::to_string).collect();
    let pairs: Vec<String> = s.pairs.iter().map(|p| p.degree.to_string()).collect();
    report.detail(format!("normalized: m = {}, l = {}, merges = {}, shift = {}", s.m(), s.l(), s.merges, s.shift));
    report.detail(format!("pair degrees g = {}", if pairs.is_empty() { "-".into() } else { pairs.join(" ") }));
    report.detail(format!("anisotropic degrees h = {}", h.join(" ")));
    let t = &result.table;
    report.detail(format!("case {:?}: m = {}, F_2-rank {}, matched with h permuted by {:?}", t.case, t.m, t.rank, t.permutation));
    let a = &result.algorithm;
    report.detail(format!(
        "division algorithm: class {}, degree zero part dim {}, ideal dim {}, division part dim {}, support {}",
        a.class,
        a.degree_zero_dim,
        a.ideal_dim,
        a.division_dim,
        a.support.len()
    ));
    report.detail(format!("case table: class {}", t.class));
    report.push(Check::compare("division class agrees with case table", t.class.to_string(), a.class.to_string()));
    report.push(Check::flag("graded division part", a.graded_division, "every nonzero homogeneous element invertible", a.graded_division, None));
    report
}

pub fn grading_report(target: Target, alpha: Option<D21Alpha>) -> Report {
    let alpha = alpha.unwrap_or(D21Alpha::Symbolic);
    let (command, catalog_target, built) = match target {
        Target::F4 => ("grading-report f4".to_string(), CatalogTarget::F4, None),
        Target::G3 => ("grading-report g3".to_string(), CatalogTarget::G3, build_g3().ok()),
        Target::D21a => (
            format!("grading-report d21a --alpha {}", alpha_label(&alpha)),
            CatalogTarget::D21(alpha.clone()),
            build_d21(alpha).ok(),
        ),
    };
    let mut report = Report::new(command);
    let entries = match catalog(&catalog_target) {
        Ok(e) => e,
        Err(e) => {
            report.push(Check::error("catalog", "every catalog grading verifies", e));
            return report;
        }
    };
    let f4_models = if target == Target::F4 {
        [F4Model::Cayley, F4Model::Tkk, F4Model::Quaternion].into_iter().filter_map(|m| build_f4(m).ok()).collect()
    } else {
        Vec::new()
    };
    for e in &entries {
        report.push(catalog_check(e));
        let owner = built.iter().chain(&f4_models).find(|b| b.name == e.model);
        report.detail(format!("{} on {} ({}): type {}, group {}", e.name, e.model, e.grading.group, e.actual_type, e.actual_group));
        let Some(owner) = owner else { continue };
        let (Ok(parities), Ok(graded)) = (component_parities(&owner.algebra, &e.grading), e.grading.graded_algebra(&owner.algebra)) else {
            continue;
        };
        for ((degree, basis), (even, odd)) in e.grading.components().iter().zip(parities) {
            let coords: Vec<String> = degree.iter().map(i64::to_string).collect();
            let labels: Vec<&str> = basis.iter().map(|&k| graded.label(k)).collect();
            report.detail(format!("    ({}) dim {} = {even}+{odd}: {}", coords.join(","), even + odd, labels.join(" ")));
        }
    }
    report
}
