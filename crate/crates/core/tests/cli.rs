use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_quandle");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn make_file(dir: &Path, name: &str, args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    let path = dir.join(name);
    std::fs::write(&path, &o.stdout).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn every_family_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let cocycle = dir.path().join("cocycle.json");
    std::fs::write(&cocycle, "[[0,1],[2,0]]").unwrap();
    let cocycle = cocycle.to_string_lossy().into_owned();
    let cases: Vec<Vec<&str>> = vec![
        vec!["make", "trivial", "--n", "4"],
        vec!["make", "dihedral", "--n", "6"],
        vec!["make", "alexander", "--p", "5", "--a", "2"],
        vec!["make", "alexander", "--p", "3", "--n", "2", "--a", "1,1;0,1"],
        vec!["make", "section5", "--p", "3", "--n", "2"],
        vec!["make", "unipotent", "--p", "3"],
        vec!["make", "conj", "--group", "symmetric:3"],
        vec!["make", "conj-class", "--group", "sl2:3", "--element", "1"],
        vec!["make", "phi-space", "--group", "cyclic:6", "--phi", "inverse", "--subgroup", "fixed"],
        vec!["make", "vedernikov", "--group", "symmetric:3", "--phi", "inner:1"],
        vec!["make", "cocycle", "--x", "2", "--group", "cyclic:3", "--cocycle", &cocycle],
    ];
    for args in cases {
        let made = run(&args);
        assert_eq!(made.status.code(), Some(0), "{args:?}: {}", stderr(&made));
        let v: Value = serde_json::from_slice(&made.stdout).unwrap();
        assert!(v["table"].is_array(), "{args:?}");
        let checked = run_stdin(&["check", "-"], &stdout(&made));
        assert_eq!(checked.status.code(), Some(0), "{args:?}: {}", stderr(&checked));
        assert!(stdout(&checked).starts_with("valid (size "));
    }
}

#[test]
fn corrupted_table_reports_witnesses() {
    // idempotence broken at 0 and distributivity broken with it
    let bad = r#"{"size":3,"table":[[1,2,0],[2,1,0],[1,0,2]]}"#;
    let o = run_stdin(&["check", "-"], bad);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.starts_with("error:"), "{err}");
    assert!(err.lines().count() > 1, "expected witnesses: {err}");

    let ragged = run_stdin(&["check", "-"], r#"{"size":2,"table":[[0,1],[0]]}"#);
    assert_eq!(ragged.status.code(), Some(1));
    let junk = run_stdin(&["check", "-"], "not json");
    assert_eq!(junk.status.code(), Some(1));
}

#[test]
fn connectivity_and_json_output() {
    let dir = tempfile::tempdir().unwrap();
    let a5 = make_file(dir.path(), "a5.json", &["make", "alexander", "--p", "5", "--a", "2"]);
    let t3 = make_file(dir.path(), "t3.json", &["make", "trivial", "--n", "3"]);
    let o = run(&["connected", &a5]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "connected: true");
    assert_eq!(stdout(&run(&["connected", &t3])).trim(), "connected: false");

    let j: Value = serde_json::from_slice(&run(&["--json", "connected", &a5]).stdout).unwrap();
    assert_eq!(j["connected"], true);
    let aut: Value = serde_json::from_slice(&run(&["--json", "aut", &a5]).stdout).unwrap();
    assert_eq!(aut["order"], "20");
    let orb: Value = serde_json::from_slice(&run(&["--json", "orbits", &t3]).stdout).unwrap();
    assert_eq!(orb["orbits"].as_array().unwrap().len(), 3);
}

#[test]
fn coloring_commands() {
    let dir = tempfile::tempdir().unwrap();
    let r3 = make_file(dir.path(), "r3.json", &["make", "dihedral", "--n", "3"]);
    let pd = dir.path().join("trefoil.pd");
    std::fs::write(&pd, "X[1,4,2,5];X[3,6,4,1];X[5,2,6,3]").unwrap();
    let pd = pd.to_string_lossy().into_owned();
    let j: Value = serde_json::from_slice(&run(&["--json", "color", "--diagram", &pd, "--quandle", &r3]).stdout).unwrap();
    assert_eq!(j["total"], "9");
    let j: Value = serde_json::from_slice(
        &run(&["--json", "color", "--braid", "s1 s1 s1", "--strands", "2", "--quandle", &r3]).stdout,
    )
    .unwrap();
    assert_eq!(j["total"], "9");

    let bad_pd = dir.path().join("bad.pd");
    std::fs::write(&bad_pd, "X[1,4,2,5];X[3,6,4 1]").unwrap();
    let o = run(&["color", "--diagram", &bad_pd.to_string_lossy(), "--quandle", &r3]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("column 20"), "{}", stderr(&o));
}

#[test]
fn realization_and_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let c3 = make_file(dir.path(), "c3.json", &["make", "conj-class", "--group", "symmetric:3", "--element", "1"]);
    let o = run(&["--json", "realize", &c3, "--base", "0"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let j: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(j["checks"].as_object().unwrap().values().all(|v| v == true), "{j}");

    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["make", "bogus"]).status.code(), Some(1));
    assert_eq!(run(&["make", "trivial"]).status.code(), Some(1));
    assert_eq!(run(&["check", "/nonexistent/file.json"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}
