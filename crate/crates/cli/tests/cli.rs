use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_frobring")).args(args).output().expect("binary runs")
}

fn run_specs(args: &[&str]) -> (i32, String) {
    let resolved: Vec<String> = args
        .iter()
        .map(|a| if a.ends_with(".json") { spec(a).display().to_string() } else { a.to_string() })
        .collect();
    let refs: Vec<&str> = resolved.iter().map(String::as_str).collect();
    let out = run(&refs);
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut args = args.to_vec();
    args.push("--json");
    let (code, out) = run_specs(&args);
    (code, serde_json::from_str(&out).expect("JSON report"))
}

fn verdict<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["name"] == name)
        .map(|v| &v["value"])
        .unwrap_or_else(|| panic!("no verdict {name}"))
}

#[test]
fn validate_product_ring() {
    let (code, report) = json(&["ring", "validate", "z2xz4.json"]);
    assert_eq!(code, 0);
    assert_eq!(verdict(&report, "characteristic"), 4);
    assert_eq!(verdict(&report, "cardinality"), 8);
    assert_eq!(run_specs(&["ring", "validate", "r8.json"]).0, 0);
}

#[test]
fn validate_reports_associativity_witness() {
    let (code, report) = json(&["ring", "validate", "broken_assoc.json"]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&report, "associative"), false);
    assert_eq!(report["witness"]["associativity_witness"], serde_json::json!([1, 2, 2]));
}

#[test]
fn frobenius_verdicts() {
    let (code, report) = json(&["ring", "frobenius", "z4.json"]);
    assert_eq!(code, 0);
    assert_eq!(verdict(&report, "agreement"), true);

    let (code, report) = json(&["ring", "frobenius", "r8.json"]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&report, "frobenius_functional"), false);
    assert_eq!(verdict(&report, "socle_test"), false);
    assert_eq!(verdict(&report, "agreement"), true);

    assert_eq!(run_specs(&["ring", "frobenius", "m2f2.json"]).0, 0);
    assert_eq!(run_specs(&["ring", "frobenius", "z3c3.json"]).0, 0);
}

#[test]
fn macwilliams_counterexample_and_identity_form() {
    let (code, text) =
        run_specs(&["code", "macwilliams", "f2.json", "code_c.json", "--form", "form_q.json"]);
    assert_eq!(code, 1);
    assert!(text.contains("identity: FAILS"));
    assert!(text.contains("monomial: false"));
    assert!(text.contains("dual_enumerator: X^2 + Y^2"));
    assert!(text.contains("transformed_enumerator: X^2 + XY"));

    let (code, text) = run_specs(&["code", "macwilliams", "f2.json", "code_c.json"]);
    assert_eq!(code, 0);
    assert!(text.contains("identity: HOLDS"));
}

#[test]
fn dual_and_weight_enumerator() {
    let (code, report) = json(&["code", "dual", "f2.json", "code_c.json", "--form", "form_q.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["witness"]["dual"], serde_json::json!([[[0], [0]], [[1], [1]]]));
    assert_eq!(verdict(&report, "cardinality_identity"), true);

    let (code, _) =
        run_specs(&["code", "dual", "f2.json", "code_c.json", "--form", "form_q.json", "--side", "left"]);
    assert_eq!(code, 1);

    let (code, text) = run_specs(&["code", "wenum", "f2.json", "code_zero3.json"]);
    assert_eq!(code, 0);
    assert!(text.contains("enumerator: X^3"));
}

#[test]
fn degenerate_form_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let form = dir.path().join("form.json");
    std::fs::write(&form, r#"{"matrix": [[[1],[1]],[[1],[1]]]}"#).unwrap();
    let out = run(&[
        "code",
        "dual",
        spec("f2.json").to_str().unwrap(),
        spec("code_c.json").to_str().unwrap(),
        "--form",
        form.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("degenerate"));
}

#[test]
fn skew_commands() {
    let (code, report) = json(&["skew", "build", "f4_x2_minus_1.json"]);
    assert_eq!(code, 0);
    assert_eq!(report["witness"]["ring"]["kind"], "table");
    assert_eq!(verdict(&report, "cardinality"), 16);

    let (code, report) = json(&["skew", "build", "f4_x2_minus_omega.json"]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&report, "two_sided"), false);
    assert!(report["witness"]["two_sided_violation"].is_string());

    assert_eq!(run_specs(&["skew", "frobenius", "f4_x2_minus_1.json"]).0, 0);
    let (code, report) = json(&["skew", "sweep", "f4_x2_minus_1.json"]);
    assert_eq!(code, 0);
    assert!(verdict(&report, "left_ideals").as_u64().unwrap() >= 2);
}

#[test]
fn cyclic_length_three_sweep() {
    let (code, report) = json(&["skew", "sweep", "z2_x3_minus_1.json"]);
    assert_eq!(code, 0);
    // x^3 - 1 = (x + 1)(x^2 + x + 1) over F_2
    assert_eq!(verdict(&report, "left_ideals"), 4);
    let sizes: Vec<(u64, u64)> = report["witness"]["ideals"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e["size"].as_u64().unwrap(), e["dual_size"].as_u64().unwrap()))
        .collect();
    for (size, dual) in &sizes {
        assert_eq!(size * dual, 8);
    }
}

#[test]
fn parse_error_reports_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, "{\n  \"kind\": \"zn\",\n  \"n\": 4,,\n}\n").unwrap();
    let out = run(&["ring", "validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 3"), "{err}");
    assert!(err.contains("column"), "{err}");
}

#[test]
fn missing_file_exits_two() {
    let out = run(&["ring", "frobenius", "/nonexistent/ring.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_two() {
    let out = run(&["--cap", "4", "ring", "frobenius", spec("m2f2.json").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec!["ring", "frobenius", "z3c3.json", "--json"],
        vec!["skew", "sweep", "f4_x2_minus_1.json", "--json"],
        vec!["code", "macwilliams", "f2.json", "code_c.json", "--form", "form_q.json"],
    ] {
        let first = run_specs(&args);
        let second = run_specs(&args);
        assert_eq!(first, second);
    }
}
