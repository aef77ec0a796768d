use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use ghborsuk::io::read_space;
use ghborsuk_core::{distortion, Relation, ToleranceConfig};
use serde_json::Value;
use tempfile::TempDir;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ghborsuk"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const Y: &str = r#"{"labels": ["a", "b", "c", "d"], "dist": [[0, 3, 4, 5], [3, 0, 5, 4], [4, 5, 0, 3], [5, 4, 3, 0]]}"#;

#[test]
fn gh_against_one_point_is_half_the_diameter() {
    let dir = TempDir::new().unwrap();
    let d1 = write(&dir, "delta1.json", r#"{"dist": [[0]]}"#);
    let y = write(&dir, "y.json", Y);
    let o = run(&["gh", s(&d1), s(&y), "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2.5);
    assert_eq!(v["witness"], serde_json::json!([[0, 0], [0, 1], [0, 2], [0, 3]]));
}

#[test]
fn gh_witness_rescores_to_the_value() {
    let dir = TempDir::new().unwrap();
    let x = write(&dir, "x.csv", "p,q,r\n0,1,2\n1,0,2.5\n2,2.5,0\n");
    let y = write(&dir, "y.json", Y);
    for extra in [&[][..], &["--workers", "3"][..]] {
        let mut args = vec!["gh", s(&x), s(&y), "--format", "json"];
        args.extend_from_slice(extra);
        let o = run(&args);
        assert!(o.status.success(), "{}", stderr(&o));
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        let pairs: Vec<(usize, usize)> = v["witness"]
            .as_array()
            .unwrap()
            .iter()
            .map(|p| (p[0].as_u64().unwrap() as usize, p[1].as_u64().unwrap() as usize))
            .collect();
        let mut sorted = pairs.clone();
        sorted.sort_unstable();
        assert_eq!(pairs, sorted);
        let tol = ToleranceConfig::default();
        let (sx, sy) = (read_space(&x, &tol).unwrap(), read_space(&y, &tol).unwrap());
        let rel = Relation::new(sx.len(), sy.len(), pairs).unwrap();
        let dis = distortion(&sx, &sy, &rel).unwrap();
        let value = v["value"].as_f64().unwrap();
        assert!((dis - 2.0 * value).abs() <= 1e-9 * sy.diameter());
        assert!(v["lower"].as_f64().unwrap() <= value && value <= v["upper"].as_f64().unwrap());
    }
}

#[test]
fn gh_falls_back_to_bounds_when_too_large() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    assert!(run(&["gen", "euclidean:6:2:1.0:1", "-o", s(&a)]).status.success());
    assert!(run(&["gen", "synthetic:6:2:1.0:2", "-o", s(&b)]).status.success());
    let o = run(&["gh", s(&a), s(&b), "--max-points", "3", "--format", "json"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["value"].is_null());
    assert_eq!(v["method"], "bounds");
    assert!(v["notice"].as_str().unwrap().starts_with("TooLarge"));
}

#[test]
fn borsuk_of_simplex() {
    let dir = TempDir::new().unwrap();
    let f = dir.path().join("simplex3.json");
    assert!(run(&["delta", "3", "1.5", "-o", s(&f)]).status.success());
    let o = run(&["borsuk", s(&f), "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["beta"], 3);
    assert_eq!(v["diam"], 1.5);
    let o = run(&["borsuk", s(&f)]);
    assert!(stdout(&o).starts_with("beta     3\n"));
}

#[test]
fn borsuk_of_one_point_fails_with_name() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.json", r#"{"dist": [[0]]}"#);
    let o = run(&["borsuk", s(&f)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("SinglePoint"));
}

#[test]
fn verify_named_suite() {
    let o = run(&["verify", "thm4", "--seed", "7", "--trials", "50"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("A7   PASS 50/50"), "{}", stdout(&o));
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["verify", "all", "--seed", "11", "--trials", "5", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    let mut four = args.to_vec();
    four.extend(["--workers", "4"]);
    let c = run(&four);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 14);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["verify", "A7"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "nonsense", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "cube:4"]).status.code(), Some(2));
    assert_eq!(run(&["delta", "3", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["delta", "3", "1", "--tol-eq", "-1"]).status.code(), Some(2));
}

#[test]
fn validation_failures_exit_1_with_error_name() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"dist": [[0, 1, 5], [1, 0, 1], [5, 1, 0]]}"#);
    let o = run(&["validate", s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("TriangleViolation"));
    let o = run(&["validate", s(&bad), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["error"], "TriangleViolation");
    let o = run(&["gh", s(&bad), s(&bad)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("TriangleViolation"));
    let o = run(&["info", s(&dir.path().join("missing.json"))]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("IoError"));
}

#[test]
fn validate_and_info_report() {
    let dir = TempDir::new().unwrap();
    let y = write(&dir, "y.json", Y);
    let o = run(&["validate", s(&y), "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((v["valid"].clone(), v["n"].clone(), v["diameter"].clone()), (true.into(), 4.into(), 5.0.into()));
    let o = run(&["info", s(&y), "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["diameter_graph_edges"], 2);
    assert_eq!(
        v["spectrum"],
        serde_json::json!([
            {"distance": 3.0, "count": 2},
            {"distance": 4.0, "count": 2},
            {"distance": 5.0, "count": 2}
        ])
    );
}

#[test]
fn generated_matrices_round_trip() {
    let dir = TempDir::new().unwrap();
    let tol = ToleranceConfig::default();
    let o = run(&["gen", "sphere-sample:5:3:1.0:9"]);
    assert!(o.status.success());
    let csv = write(&dir, "g.csv", &stdout(&o));
    let o = run(&["gen", "sphere-sample:5:3:1.0:9", "--format", "json"]);
    let json = write(&dir, "g.json", &stdout(&o));
    assert_eq!(read_space(&csv, &tol).unwrap(), read_space(&json, &tol).unwrap());
    // --seed overrides the seed in the spec string.
    let a = run(&["gen", "synthetic:4", "--seed", "3"]);
    let b = run(&["gen", "synthetic:4:2:1:3"]);
    assert_eq!(a.stdout, b.stdout);
}
