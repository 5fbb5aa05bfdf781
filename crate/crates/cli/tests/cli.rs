use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn vdreg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vdreg")).args(args).output().expect("binary runs")
}

fn write_temp(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("vdreg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const C5: &str = r#"{"n": 5, "edges": [[1,2],[2,3],[3,4],[4,5],[1,5]]}"#;
const EX1: &str = r#"{"n": 8, "edges": [[1,5],[1,6],[1,7],[1,8],[2,5],[2,6],[2,7],[2,8],[3,6],[3,7],[4,6],[4,8],[7,8]]}"#;
const C4: &str = r#"{"n": 4, "edges": [[1,2],[2,3],[3,4],[1,4]]}"#;

#[test]
fn analyze_graph_reports_invariants() {
    let f = write_temp("c5.json", C5);
    let out = vdreg(&["analyze-graph", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["edge_count"], 5);
    assert_eq!(v["height"], 3);
    assert_eq!(v["sequentially_cm"]["2"], true);
    assert_eq!(v["reg_quotient"]["32003"], 2);
}

#[test]
fn vd_exit_codes() {
    let c5 = write_temp("vd-c5.json", C5);
    assert_eq!(vdreg(&["vd", c5.to_str().unwrap()]).status.code(), Some(0));
    let c4 = write_temp("vd-c4.json", C4);
    assert_eq!(vdreg(&["vd", c4.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn inconclusive_search_exits_3() {
    let g = write_temp("ex1.json", EX1);
    let out = vdreg(&["vd", g.to_str().unwrap(), "--budget", "0"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stdout_json(&out)["verdict"], "inconclusive");
}

#[test]
fn invalid_input_exits_2() {
    let bad = write_temp("bad.json", r#"{"n": 3, "edges": [[1,4]]}"#);
    let out = vdreg(&["analyze-graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(vdreg(&["vd", "/nonexistent/graph.json"]).status.code(), Some(2));
    let c5 = write_temp("c5-char.json", C5);
    assert_eq!(vdreg(&["--char", "4", "analyze-graph", c5.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn shelling_verify_and_find() {
    // Boundary of a triangle plus a pendant edge: {1,2},{2,3},{1,3},{3,4}.
    let complex = write_temp("cx.json", r#"{"ground_n": 4, "facets": [[1,2],[2,3],[1,3],[3,4]]}"#);
    let good = write_temp("good.json", "[0, 1, 2, 3]");
    let out = vdreg(&["shelling", "verify", complex.to_str().unwrap(), good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["shelling"], true);

    let disconnected = write_temp("dis.json", r#"{"ground_n": 4, "facets": [[1,2],[3,4]]}"#);
    let order = write_temp("dis-order.json", "[[1,2],[3,4]]");
    let out = vdreg(&["shelling", "verify", disconnected.to_str().unwrap(), order.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(vdreg(&["shelling", "find", disconnected.to_str().unwrap()]).status.code(), Some(1));

    let out = vdreg(&["shelling", "find", complex.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["positions"].as_array().unwrap().len(), 4);
}

#[test]
fn betti_of_an_ideal_file() {
    let ideal = write_temp("ideal.json", r#"{"ring_n": 3, "gens": [[1,2],[2,3]]}"#);
    let out = vdreg(&["betti", ideal.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["characteristics_agree"], true);
    assert_eq!(v["regularity"][0], 1);
}

#[test]
fn small_counterexample_report_passes() {
    let out = vdreg(&["paper", "ex1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["status"], "PASSED");
}

#[test]
fn hunt_emits_the_included_graph() {
    let f = write_temp("hunt-include.json", EX1);
    let out = vdreg(&["hunt", "--n", "8", "--samples", "0", "--include", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let first = String::from_utf8_lossy(&out.stdout).lines().next().map(str::to_owned).unwrap();
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["invariants"]["violated_statements"], serde_json::json!([1, 3]));
    let summary: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(summary["violators"], 1);
}
