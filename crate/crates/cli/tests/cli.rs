use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supergrade")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn config(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name).display().to_string()
}

fn json(args: &[&str]) -> (serde_json::Value, Option<i32>) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    (serde_json::from_slice(&o.stdout).expect("json report"), o.status.code())
}

#[test]
fn f4_theorem_check_passes() {
    let (v, code) = json(&["theorem-check", "f4"]);
    assert_eq!(code, Some(0));
    let checks = v["checks"].as_array().unwrap();
    let gradings: Vec<&serde_json::Value> = checks.iter().filter(|c| c["name"].as_str().unwrap().starts_with("grading F4")).collect();
    assert_eq!(gradings.len(), 5);
    let types: Vec<&str> = gradings.iter().map(|c| c["actual"].as_str().unwrap()).collect();
    for t in ["(36,0,0,1)", "(19,0,7)", "(32,4)", "(31,0,3)", "(24,6,0,1)"] {
        assert!(types.iter().any(|a| a.contains(t)), "missing {t} in {types:?}");
    }
}

#[test]
fn omega_adds_type_17_entry() {
    let (v, code) = json(&["theorem-check", "d21a", "--alpha", "z^4"]);
    assert_eq!(code, Some(0));
    let found = v["checks"].as_array().unwrap().iter().any(|c| c["actual"] == "type (17) on Z x Z_3" && c["status"] == "pass");
    assert!(found, "{v}");
}

#[test]
fn forbidden_alpha_is_a_usage_error() {
    for a in ["-1", "0"] {
        let o = run(&["theorem-check", "d21a", "--alpha", a]);
        assert_eq!(o.status.code(), Some(2), "alpha {a}");
    }
    assert_eq!(run(&["theorem-check", "e8"]).status.code(), Some(2));
}

#[test]
fn checks_are_sorted_and_schema_stable() {
    let (v, _) = json(&["theorem-check", "g3"]);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    for key in ["command", "checks", "elapsed_ms", "version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn clifford_configs_classify() {
    let expected = [
        ("m3.cfg", "F"),
        ("m2.cfg", "Q"),
        ("m1_rank3.cfg", "Q"),
        ("m1_rank4.cfg", "QQ"),
        ("r6.cfg", "QQQ"),
        ("r5_zero.cfg", "QQ"),
        ("r5_split.cfg", "QQ"),
        ("r4_zero.cfg", "QQ"),
        ("quaternion_model.cfg", "Q"),
        ("cayley.cfg", "F"),
        ("cayley_gram.cfg", "F"),
    ];
    for (file, class) in expected {
        let (v, code) = json(&["clifford-class", &config(file)]);
        assert_eq!(code, Some(0), "{file}: {v}");
        let agree = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "division class agrees with case table").unwrap();
        assert_eq!(agree["actual"], class, "{file}");
        assert_eq!(agree["expected"], class, "{file}");
    }
}

#[test]
fn malformed_config_reports_line() {
    let dir = std::env::temp_dir().join(format!("supergrade-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.cfg");
    std::fs::write(&path, "# comment\nZ_2^3\n(1,0,0)\n(1,0)\n").unwrap();
    let (v, code) = json(&["clifford-class", path.to_str().unwrap()]);
    assert_eq!(code, Some(1));
    let c = &v["checks"][0];
    assert_eq!(c["status"], "error");
    assert!(c["witness"].as_str().unwrap().contains("line 4"), "{c}");
}

#[test]
fn build_round_trips() {
    let dir = std::env::temp_dir().join(format!("supergrade-build-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (args, shape) in [
        (vec!["build", "k10"], "dim 10 = 6+4"),
        (vec!["build", "f4", "--model", "tkk"], "dim 40 = 24+16"),
        (vec!["build", "d21a", "--alpha", "1"], "dim 17 = 9+8"),
    ] {
        let out = dir.join(format!("{}.alg", args[1]));
        let mut full = args.clone();
        full.extend(["--out", out.to_str().unwrap(), "--format", "json"]);
        let o = run(&full);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        let checks = v["checks"].as_array().unwrap();
        assert!(checks.iter().any(|c| c["name"] == "shape" && c["actual"] == shape));
        assert!(std::fs::read_to_string(&out).unwrap().starts_with("superalgebra"));
    }
}

#[test]
fn build_without_out_prints_the_algebra() {
    let o = run(&["build", "cayley"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("superalgebra 8"));
}

#[test]
fn grading_report_lists_components() {
    let o = run(&["grading-report", "g3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("G3 ZxZ2^3"));
    assert!(text.contains("(0,0,0) dim 3 = 3+0"));
}
