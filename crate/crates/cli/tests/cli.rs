use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_spinwigner"));
    c.env_remove("SPINWIGNER_OUT_DIR");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("schema")
        .join(name);
    let text = std::fs::read_to_string(path).unwrap();
    let value: Value = serde_json::from_str(&text).unwrap();
    jsonschema::JSONSchema::compile(&value).expect("schema compiles")
}

fn assert_valid(schema: &jsonschema::JSONSchema, doc: &Value) {
    if let Err(errors) = schema.validate(doc) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect();
        panic!("schema violations: {msgs:?}");
    }
}

#[test]
fn props_output_matches_schema() {
    let out = run(&["props", "--j", "0,1/2,1,5,19/2"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema("property_report.schema.json"), &doc);
    let reports = doc.as_array().unwrap();
    assert_eq!(reports.len(), 5);
    assert!(reports[0]["first_zero_gap"].is_null());
    assert!((reports[1]["first_zero_gap"].as_f64().unwrap() - 4.0 / 3.0).abs() < 1e-12);
    assert_eq!(reports[3]["zero_count"], 10);
    let b = reports[4]["value_b"].as_f64().unwrap();
    assert!((b + 20.0 / (16.0 * std::f64::consts::PI.powi(2))).abs() < 1e-15);
}

#[test]
fn props_failure_names_field() {
    let out = run(&["props", "--j", "5", "--envelope-exponent-abs", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("envelope_exponent"), "{err}");
    // the report itself is still emitted
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc.as_array().unwrap().len(), 1);
}

#[test]
fn twice_j_flag_matches_fraction() {
    let a = run(&["props", "--j", "19/2"]);
    let b = run(&["props", "--twice-j", "19"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn correlate_output_and_examples() {
    let schema = schema("correlation.schema.json");
    let cases: [(&str, &str, &str, f64); 3] = [
        ("1", "0,0,1", "0,0,1", -2.0 / 3.0),
        ("3", "0,0,1", "0.8660254037844386,0,0.5", -2.0),
        ("5/2", "1,0,0", "0,1,0", 0.0),
    ];
    for (j, a, b, want) in cases {
        let out = run(&["correlate", "--j", j, "--a", a, "--b", b, "--oracle"]);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{}",
            String::from_utf8_lossy(&out.stderr)
        );
        let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_valid(&schema, &doc);
        let ps = doc["phase_space"].as_f64().unwrap();
        let or = doc["oracle"].as_f64().unwrap();
        assert!((ps - want).abs() < 1e-9, "j = {j}: {ps}");
        assert!((or - want).abs() < 1e-9, "j = {j}: {or}");
    }
    let out = run(&[
        "correlate",
        "--twice-j",
        "2",
        "--a",
        "-1,0,0",
        "--b",
        "1,0,0",
    ]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_valid(&schema, &doc);
    assert!(doc.get("oracle").is_none());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["correlate", "--j", "1", "--a", "0,0,2", "--b", "1,0,0"][..],
        &["correlate", "--j", "1", "--a", "0,0,1", "--b", "0.5,0.5,0"],
        &[
            "correlate",
            "--j",
            "9",
            "--a",
            "0,0,1",
            "--b",
            "0,0,1",
            "--oracle",
        ],
        &["figure1", "--points", "8"],
        &["figure1", "--format", "xml"],
        &["props", "--j", "1/3"],
        &["verify", "--tol", "-1"],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(2),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

#[test]
fn unwritable_output_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("file");
    std::fs::write(&blocker, "").unwrap();
    let out = run(&[
        "figure1",
        "--j",
        "1",
        "--points",
        "16",
        "--out",
        blocker.join("sub").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn figure1_is_bit_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    for d in [&a, &b] {
        let out = run(&[
            "figure1",
            "--j",
            "5,19/2",
            "--points",
            "500",
            "--out",
            d.path().to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
    }
    for name in ["wigner_j5.csv", "wigner_j19_2.csv"] {
        let x = std::fs::read(a.path().join(name)).unwrap();
        let y = std::fs::read(b.path().join(name)).unwrap();
        assert!(!x.is_empty());
        assert_eq!(x, y, "{name}");
    }
}

#[test]
fn figure1_out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let out = bin()
        .args(["figure1", "--j", "0", "--points", "16"])
        .env("SPINWIGNER_OUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("wigner_j0.csv")).unwrap();
    let c = 1.0 / (16.0 * std::f64::consts::PI.powi(2));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("x,W_exact,W_cd,W_asymptotic"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 16);
    assert!(rows
        .iter()
        .all(|r| (r[1] - c).abs() < 1e-17 && (r[2] - c).abs() < 1e-17));
}

#[test]
fn figure1_json_matches_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "figure1",
        "--j",
        "5",
        "--points",
        "64",
        "--format",
        "json",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("wigner_j5.json")).unwrap())
            .unwrap();
    assert_valid(&schema("figure1.schema.json"), &doc);
    assert_eq!(doc["x"].as_array().unwrap().len(), 64);
}

#[test]
fn verify_passes_and_fails() {
    let out = run(&["verify", "--j-max", "1"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("worst residual"));
    assert!(!text.contains("FAIL"));

    let out = run(&["verify", "--j-max", "1", "--traciality-abs", "1e-300"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("FAIL"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("traciality"));
}

#[test]
fn verify_spin_zero_is_degenerate_pass() {
    let out = run(&["verify", "--j-max", "0"]);
    assert_eq!(out.status.code(), Some(0));
}
