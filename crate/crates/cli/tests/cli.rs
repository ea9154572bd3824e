use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BROKEN: &str = r#"{"group":"integer_line","name":"broken","templates":[
 {"mod":2,"res":0,"members":[{"a":1,"b":0,"flip":0}]},
 {"mod":2,"res":1,"members":[{"a":1,"b":0,"flip":0},{"a":-1,"b":0,"flip":0}]}]}"#;

fn schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn verify_passes_builtins() {
    for b in ["discrete-Z", "symmetric-Z", "discrete-D", "orbit-D(3)", "nontraditional-2305b"] {
        let out = schur(&["verify", "--builtin", b, "--radius", "8"]);
        assert_eq!(code(&out), 0, "{b}: {}", String::from_utf8_lossy(&out.stdout));
    }
    assert_eq!(code(&schur(&["verify", "--builtin", "orbit-D", "--param", "i=5", "--radius", "8"])), 0);
    let out = schur(&["verify", "--builtin", "half-shift-D", "--param", "i=4", "--radius", "8", "--format", "json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["passed"], true);
}

#[test]
fn broken_file_fails_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "broken.json", BROKEN);
    let out = schur(&["verify", "--file", &file, "--radius", "8", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let report = json(&out);
    assert_eq!(report["passed"], false);
    assert_eq!(report["closure"]["witness"]["kind"], "not_class_constant");
}

#[test]
fn configuration_errors_exit_two() {
    assert_eq!(code(&schur(&["verify", "--builtin", "nope"])), 2);
    assert_eq!(code(&schur(&["verify", "--file", "/nonexistent/scheme.json"])), 2);
    assert_eq!(code(&schur(&["verify"])), 2);
    assert_eq!(code(&schur(&["verify", "--builtin", "orbit-D", "--file", "x.json"])), 2);
    let dir = tempfile::tempdir().unwrap();
    let garbage = write(dir.path(), "garbage.json", "{\"group\": 7}");
    assert_eq!(code(&schur(&["classify", "--file", &garbage])), 2);
}

#[test]
fn nontraditional_classify_exits_three() {
    let out = schur(&["classify", "--builtin", "nontraditional-2305b", "--radius", "16", "--format", "json"]);
    assert_eq!(code(&out), 3);
    let report = json(&out);
    assert_eq!(report["classification"]["status"], "not_applicable");
    assert_eq!(report["prop1136a"]["t"]["value"], 2);
}

#[test]
fn classify_reports_case() {
    let out = schur(&["classify", "--builtin", "half-shift-D", "--param", "i=4", "--radius", "16"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("i=4"));
}

#[test]
fn json_is_byte_identical_across_runs() {
    let args = ["analyze", "--builtin", "nontraditional-2305b", "--radius", "12", "--format", "json"];
    let first = schur(&args);
    let second = schur(&args);
    assert_eq!(first.stdout, second.stdout);
    assert!(!first.stdout.is_empty());
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = schur(&["verify", "--builtin", "symmetric-Z", "--radius", "6", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(written["passed"], true);
}

#[test]
fn print_scheme_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    for b in ["symmetric-Z", "orbit-D(-5)", "nontraditional-2305b"] {
        let printed = schur(&["print-scheme", "--builtin", b]);
        assert_eq!(code(&printed), 0);
        let file = write(dir.path(), "scheme.json", &String::from_utf8(printed.stdout.clone()).unwrap());
        let again = schur(&["print-scheme", "--file", &file]);
        assert_eq!(printed.stdout, again.stdout, "{b}");
    }
}

#[test]
fn analyze_with_quotient() {
    let out = schur(&["analyze", "--builtin", "orbit-D", "--param", "k=0", "--radius", "12", "--quotient", "4", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let report = json(&out);
    assert_eq!(report["quotient"]["group_order"], 8);
    assert_eq!(report["quotient"]["classes"].as_array().unwrap().len(), 6);
}

#[test]
fn quotient_command() {
    let ok = schur(&["quotient", "--builtin", "nontraditional-2305b", "--quotient", "2", "--radius", "8"]);
    assert_eq!(code(&ok), 0);
    let bad = schur(&["quotient", "--builtin", "nontraditional-2305b", "--quotient", "3", "--radius", "8"]);
    // the kernel ⟨z^3⟩ is not a union of classes
    assert_eq!(code(&bad), 1);
}
