use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn lrmso(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lrmso"))
        .args(args)
        .env_remove("LRMSO_CAP")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn figure1_file(dir: &Path) -> String {
    let p = dir.join("f1.json");
    let path = p.to_str().unwrap();
    let out = lrmso(&["gen", "figure1", "-o", path]);
    assert_eq!(out.status.code(), Some(0));
    path.to_string()
}

#[test]
fn selftest_succeeds() {
    let out = lrmso(&["selftest"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ok"], true);
}

#[test]
fn check_reports_truth_in_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.json", r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    let yes = write(dir.path(), "yes.txt", "exists x . exists y . E(x, y)");
    let no = write(dir.path(), "no.txt", "forall x . forall y . (x = y \\/ E(x, y))");
    let out = lrmso(&["check", &g, &yes]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"], true);
    let out = lrmso(&["check", &g, &no, "--strategy", "brute"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["result"], false);
}

#[test]
fn trace_goes_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p2.json", r#"{"n":2,"edges":[[0,1]]}"#);
    let f = write(dir.path(), "f.txt", "forall x . exists y . E(x, y)");
    let out = lrmso(&["check", &g, &f, "--trace"]);
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<Value> = String::from_utf8(out.stderr)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l.get("quantifier").is_some() && l.get("var").is_some()));
}

#[test]
fn input_errors_exit_with_three() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", r#"{"n":2,"edges":[[0,0]]}"#);
    let f = write(dir.path(), "f.txt", "exists x . x = x");
    let out = lrmso(&["check", &bad, &f]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert!(err["error"].as_str().unwrap().contains("self-loop"));

    let g = write(dir.path(), "g.json", r#"{"n":2,"edges":[]}"#);
    let unbound = write(dir.path(), "u.txt", "E(x, y)");
    assert_eq!(lrmso(&["check", &g, &unbound]).status.code(), Some(3));
    assert_eq!(lrmso(&["check", &g, "/nonexistent/f.txt"]).status.code(), Some(3));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(lrmso(&["enum-lowrank"]).status.code(), Some(2));
    assert_eq!(lrmso(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn rank_and_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let g = figure1_file(dir.path());
    let out = lrmso(&["rank", &g, "--set", "2,3,5,6,7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["rk_f2"], 3);

    let brute = lrmso(&["enum-lowrank", &g, "--rank", "1", "--method", "brute"]);
    let via = lrmso(&["enum-lowrank", &g, "--rank", "1", "--threads", "3"]);
    assert_eq!(json(&brute)["sets"], json(&via)["sets"]);
}

#[test]
fn cap_is_enforced_from_the_environment() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "e.json", r#"{"n":6,"edges":[]}"#);
    let out = Command::new(env!("CARGO_BIN_EXE_lrmso"))
        .args(["enum-lowrank", &g, "--rank", "0"])
        .env("LRMSO_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    let out = Command::new(env!("CARGO_BIN_EXE_lrmso"))
        .args(["enum-lowrank", &g, "--rank", "0", "--cap", "100"])
        .env("LRMSO_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["sets"].as_array().unwrap().len(), 64);
}

#[test]
fn flip_suffixes_and_seeds_on_the_example() {
    let dir = tempfile::tempdir().unwrap();
    let g = figure1_file(dir.path());
    let h = ["--plus", "2,3", "--minus", "0,1", "--rank", "2"];

    let out = lrmso(&[&["flip", g.as_str()], &h[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    let arcs = json(&out)["arcs"].clone();
    assert!(arcs.as_array().unwrap().contains(&serde_json::json!([5, 6])));

    let out = lrmso(&[&["suffixes", g.as_str()], &h[..]].concat());
    let sets = json(&out)["sets"].clone();
    assert_eq!(sets, serde_json::json!([[], [0, 1, 2, 3, 4, 5, 6, 7], [2, 3, 6, 7], [2, 3, 7]]));

    let out = lrmso(&[&["seed", g.as_str(), "--set", "2,3,6,7"], &h[..]].concat());
    assert_eq!(out.status.code(), Some(0));
    let seed = json(&out);
    assert!(seed["b"].is_array());
    assert!(seed["x_plus"].is_array());

    let out = lrmso(&[&["seed", g.as_str(), "--set", "2,3,5,6,7"], &h[..]].concat());
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn declared_flips_take_a_parameter_tuple() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p3.json", r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
    let spec = write(
        dir.path(),
        "spec.txt",
        "flip Cut k=1 symmetric { (eq=1, adj=*) ~ (eq=*, adj=1) }",
    );
    let out = lrmso(&["flip", &g, "--spec", &spec, "--params", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["arcs"], serde_json::json!([]));
    let out = lrmso(&["flip", &g, "--spec", &spec, "--params", "0,1"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn capture_vc_and_generation() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p4.json", r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
    let out = lrmso(&["capture", &g, "--set", "0,1", "--t", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let sep = json(&out);
    assert!(sep["order"].as_u64().unwrap() <= 4);

    let out = lrmso(&["vc", &g]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["vc"].is_u64());

    let a = lrmso(&["gen", "random", "7", "0.4", "--seed", "11"]);
    let b = lrmso(&["gen", "random", "7", "0.4", "--seed", "11", "--threads", "2"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(lrmso(&["gen", "random", "7", "0.4"]).status.code(), Some(3));
    assert_eq!(lrmso(&["gen", "hypercube", "3"]).status.code(), Some(3));
}
