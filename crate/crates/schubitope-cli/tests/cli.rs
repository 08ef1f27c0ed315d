//! End-to-end checks of the command surface: exit codes, renderings, JSON
//! schema, and budget handling.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubitope"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_schubitope"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn decide_exit_codes() {
    let yes = run(&["decide", "--code", "2,0,2", "--alpha", "2,1,1"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes).trim(), "yes");

    let no = run(&["decide", "--code", "2,0,2", "--alpha", "4"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no).trim(), "no");

    let bad = run(&["decide", "--code", "2,0,2", "--alpha", "1,1"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("degree mismatch"));

    let beyond = run(&["decide", "--code", "2", "--alpha", "1,1"]);
    assert_eq!(beyond.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&beyond.stderr).contains("support beyond row 1"));
}

#[test]
fn decide_is_deterministic() {
    let a = run(&["decide", "--code", "2,0,2", "--alpha", "2,1,1", "--witness"]);
    let b = run(&["decide", "--code", "2,0,2", "--alpha", "2,1,1", "--witness"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn decide_json_schema() {
    let out = run(&[
        "decide", "--code", "2,0,2", "--alpha", "2,1,1", "--witness", "--oracle", "--json",
    ]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["coefficient"], 1);
    assert_eq!(v["method"], "schubitope-lp+oracle");
    assert!(v["witness"].as_str().is_some_and(|w| !w.is_empty()));
    assert!(v["elapsed_ms"].is_number());

    // Witness is present only when the verdict affirms.
    let out = run(&["decide", "--code", "2,0,2", "--alpha", "4", "--witness", "--json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["verdict"], "no");
    assert!(v.get("witness").is_none());
}

#[test]
fn decide_rounding_witness() {
    let out = run(&[
        "decide", "--code", "4,2,5,3", "--alpha", "4,2,5,3", "--witness", "--rounding", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["method"], "schubitope-lp+rounding");
    assert!(v["witness"].as_str().is_some_and(|w| !w.is_empty()));
}

#[test]
fn count_commands() {
    let out = run(&["count", "--code", "4,2,5,3", "--alpha", "4,2,5,3", "--method", "both"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "coefficient = 1");

    // The Kostka coefficient K_{(2,1),(1,1,1)} through the padded code.
    let out = run(&["count", "--code", "0,1,2", "--alpha", "1,1,1"]);
    assert_eq!(stdout(&out).trim(), "coefficient = 2");

    // Identity: the empty coefficient is one.
    let out = run(&["count", "--code", "", "--alpha", ""]);
    assert_eq!(stdout(&out).trim(), "coefficient = 1");

    // Support beyond the last code row is an input error.
    let out = run(&["count", "--code", "1,2", "--alpha", "1,1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn count_budget_exit_code() {
    let out = run_env(
        &["count", "--code", "4,2,5,3", "--alpha", "4,2,5,3"],
        &[("SCHUBITOPE_TREE_NODES", "1")],
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn diagram_renderings() {
    let out = run(&["diagram", "53841267", "--essential"]);
    let grid: Vec<Vec<char>> = stdout(&out)
        .lines()
        .map(|l| l.split(' ').map(|s| s.chars().next().unwrap()).collect())
        .collect();
    assert_eq!(grid.len(), 8);
    for (r, c) in [(1, 4), (3, 4), (3, 7), (4, 2)] {
        assert_eq!(grid[r - 1][c - 1], 'E', "essential mark at ({r},{c})");
    }

    let out = run(&["diagram", "--code", "4,2,5,3", "--accessible"]);
    let grid: Vec<Vec<char>> = stdout(&out)
        .lines()
        .map(|l| l.split(' ').map(|s| s.chars().next().unwrap()).collect())
        .collect();
    assert_eq!(grid[3][3], 'z', "accessible mark at (4,4)");

    let out = run(&["diagram", "id"]);
    assert!(stdout(&out).contains("empty grid"));

    let out = run(&["diagram"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tree_rendering() {
    let out = run(&["tree", "--code", "4,2,5,3"]);
    let text = stdout(&out);
    assert!(text.trim_end().ends_with("leaves: 10"));
    // The root has exactly two children (one deletion, one march).
    let depth1 = text
        .lines()
        .filter(|l| l.starts_with("  ") && !l.starts_with("    "))
        .count();
    assert_eq!(depth1, 2);

    let out = run(&["tree", "--code", "1,2"]);
    let text = stdout(&out);
    assert!(text.contains("(vexillary)"));
    assert!(text.trim_end().ends_with("leaves: 1"));
}

#[test]
fn polytope_dump() {
    let out = run(&["polytope", "--code", "2,0,2", "--alpha", "2,1,1"]);
    let text = stdout(&out);
    assert!(text.contains("1*a[1,1] + 1*a[1,2] + 1*a[1,3] + 1*a[1,4] + 1*a[1,5] = 2"));
    assert!(text.lines().count() > 50);

    let out = run(&["polytope", "--code", "2,0,2", "--alpha", "2,1,1", "--compressed"]);
    let compressed = stdout(&out);
    assert!(compressed.lines().count() < text.lines().count());
    assert!(compressed.contains("= 2"));
}

#[test]
fn selftest_quick_json() {
    let out = run(&["selftest", "quick", "--json", "--seed", "42"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["scope"], "quick");
    assert_eq!(v["seed"], 42);
    assert_eq!(v["suites"].as_array().unwrap().len(), 10);
}
