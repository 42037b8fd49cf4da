use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supersolve"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"]["kind"].as_str().unwrap().to_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_klein() {
    let v = ok_json(&["analyze", path(&fixture("klein.json"))]);
    assert_eq!(v["lines"], 21);
    assert_eq!(v["t"]["3"], 28);
    assert_eq!(v["t"]["4"], 21);
    assert_eq!(v["exponents"], serde_json::json!([1, 9, 11]));
    assert_eq!(v["supersolvable"], Value::Null);
    assert_eq!(v["extss_upper_bound"], 12);
}

#[test]
fn analyze_csv() {
    let out = run(&["analyze", "--csv", path(&fixture("pappus_P.json"))]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "r,t_r\n2,15\n");
}

#[test]
fn solve_paper_l() {
    let v = ok_json(&["solve", path(&fixture("paper_L.json"))]);
    assert_eq!(v["mode"], "exact");
    assert_eq!(v["extss"], 5);
    assert_eq!(v["added_lines"].as_array().unwrap().len(), 5);
    let v = ok_json(&["solve", "--mode", "upper", path(&fixture("paper_L.json"))]);
    assert_eq!(v["extss"], Value::Null);
    assert_eq!(v["upper_bound"], 5);
}

#[test]
fn output_does_not_depend_on_threads() {
    for verb in ["analyze", "solve"] {
        let file = fixture("boroczky_12.json");
        let one = run(&[verb, "--threads", "1", path(&file)]);
        let four = run(&[verb, "--threads", "4", path(&file)]);
        assert!(one.status.success());
        assert_eq!(one.stdout, four.stdout, "{verb}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "usage");
    // the unexpected-curve scan is randomized and refuses to pick a seed itself
    let out = run(&["unexpected", path(&fixture("pappus_P.json"))]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["generate", "generic", "--d", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "invalid-argument");
    let out = run(&["analyze", "--threads", "0", path(&fixture("pappus_P.json"))]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn runtime_errors_are_classified() {
    let out = run(&["solve", "--budget", "10", path(&fixture("klein.json"))]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "budget-exceeded");
    let out = run(&["analyze", "/nonexistent/file.json"]);
    assert_eq!(error_kind(&out), "io");
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"version\":1,").unwrap();
    assert_eq!(error_kind(&run(&["analyze", path(&bad)])), "parse");
}

#[test]
fn render() {
    let out = run(&[
        "render",
        "--show-span-line",
        path(&fixture("pappus_P.json")),
    ]);
    assert!(out.status.success());
    let svg = String::from_utf8(out.stdout).unwrap();
    assert!(svg.starts_with("<?xml"));
    assert!(svg.contains("class=\"span\""));
    let out = run(&[
        "render",
        "--tikz",
        "--chart",
        "imag-y",
        path(&fixture("boroczky_12.json")),
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout)
        .unwrap()
        .contains("\\begin{tikzpicture}"));

    let dir = tempfile::tempdir().unwrap();
    let fermat = dir.path().join("fermat.json");
    assert!(
        run(&["generate", "fermat", "--n", "3", "--out", path(&fermat)])
            .status
            .success()
    );
    let out = run(&["render", path(&fermat)]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "render");
}

#[test]
fn resolve_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let chain = dir.path().join("chain.json");
    let out = run(&[
        "resolve",
        "--apex",
        "0:2:1",
        path(&fixture("paper_L.json")),
        "--out",
        path(&chain),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(out.stdout.is_empty());
    let v = ok_json(&["resolve", "--check", path(&chain)]);
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 6);
    assert_eq!(steps.last().unwrap()["lines"], 11);
    assert_eq!(v["witness"]["multiplicity"], 7);
    assert_eq!(v["exponents"], serde_json::json!([1, 4, 6]));

    let exact = dir.path().join("exact.json");
    let out = run(&[
        "resolve",
        "--strategy",
        "exact",
        path(&fixture("pappus_P.json")),
        "--out",
        path(&exact),
    ]);
    assert!(out.status.success());
    let chain: Value = serde_json::from_str(&std::fs::read_to_string(&exact).unwrap()).unwrap();
    assert_eq!(chain["added"].as_array().unwrap().len(), 5);

    // an apex that is not a singular point still gives a valid, longer chain
    let v = ok_json(&[
        "resolve",
        "--apex",
        "1:1:0",
        path(&fixture("pappus_P.json")),
    ]);
    assert!(v["added"].as_array().unwrap().len() > 5);
}

#[test]
fn unexpected_scan() {
    let dir = tempfile::tempdir().unwrap();
    let fe = dir.path().join("fe3.json");
    assert!(run(&[
        "generate",
        "fermat-extended",
        "--n",
        "3",
        "--out",
        path(&fe)
    ])
    .status
    .success());
    let v = ok_json(&["unexpected", "--seed", "7", path(&fe)]);
    assert_eq!(v["unexpected_degrees"], serde_json::json!([5]));
    assert_eq!(v["supersolvable_criterion"], true);
}

#[test]
fn help_and_version_go_to_stdout() {
    for flag in ["--help", "--version"] {
        let out = run(&[flag]);
        assert_eq!(out.status.code(), Some(0));
        assert!(!out.stdout.is_empty());
    }
}
