use std::process::{Command, Output};

use serde_json::{json, Value};

fn cubica(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubica")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = cubica(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn pure_count() {
    let v = ok_json(&["pure", "count", "0", "4"]);
    assert_eq!(v["count"], json!(3));
}

#[test]
fn analyze_reports_ramification_at_infinity() {
    let v = ok_json(&["analyze", "--field", "5", "--model", r#"{"c": 1, "alpha": [0, 1]}"#]);
    assert_eq!(v["total"], json!([{ "inf": true }]));
    assert_eq!(v["genus"], json!(0));
    assert_eq!(v["model"]["equation"], json!("y^3 = 3*y + x"));
}

#[test]
fn malformed_input_is_a_schema_error() {
    let out = cubica(&["analyze", "--field", "5", "--model", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cubica(&["analyze", "--field", "6", "--model", r#"{"beta": [1]}"#]);
    assert_ne!(out.status.code(), Some(0));
    let out = cubica(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degenerate_parameter_is_a_domain_error() {
    let out = cubica(&["parshin", "genus1", "--lambda", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
}

#[test]
fn output_is_deterministic() {
    let args = ["descend", "--field", "11", "--closure", r#"{"kummer": [2]}"#, "--places", r#"[{"poly": [1, 1]}, {"poly": [2, 1]}, {"poly": [3, 1]}]"#, "--all-signs"];
    let a = cubica(&args);
    let b = cubica(&args);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn parshin_cover_golden() {
    let v = ok_json(&["parshin", "cover", "--curve", r#"{"etale": [-5, 0, 4, 4]}"#, "--point", "[1, 2]"]);
    assert_eq!(v["P_tilde"], json!({ "x": "7/3", "y": "-3278/81" }));
    assert_eq!(v["P"], json!({ "x": "49/9", "y": "-22946/243" }));
    assert_eq!(v["lambda"], json!("5"));
    assert_eq!(v["alpha"]["b"], json!(["-480", "-320"]));
    assert_eq!(v["alpha"]["c"], json!(["49", "-156", "174", "-76", "9"]));
}

#[test]
fn output_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("cubica-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("count.json");
    let out = cubica(&["--output", path.to_str().unwrap(), "pure", "count", "1", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v, ok_json(&["pure", "count", "1", "3"]));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn bitwist_family_size() {
    let v = ok_json(&["bitwists", "--tag", "R3322", "--field", "5"]);
    assert_eq!(v["count"], json!(6));
}

#[test]
fn model_file_argument() {
    let dir = std::env::temp_dir().join(format!("cubica-cli-model-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("model.json");
    std::fs::write(&path, r#"{"beta": [0, 1]}"#).unwrap();
    let arg = format!("@{}", path.display());
    let v = ok_json(&["analyze", "--field", "7", "--model", &arg]);
    assert_eq!(v["genus"], json!(0));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn selftest_passes() {
    let v = ok_json(&["selftest"]);
    assert_eq!(v["passed"], json!(true));
    assert_eq!(v["criteria"].as_array().map(Vec::len), Some(9));
}
