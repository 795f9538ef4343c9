mod common;

use std::path::{Path, PathBuf};
use std::process::Command;

use common::*;
use quiverdt::cli::{ratfunc_from_json, run_args};
use serde_json::Value;

fn write_quiver(dir: &Path, name: &str, json: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

fn quiverdt(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_quiverdt")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn dt_table_for_two_loops() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_quiver(dir.path(), "g2.json", r#"{"vertices": 1, "arrow_matrix": [[2]]}"#);
    let (code, out, _) = quiverdt(&["dt", "--quiver", q.to_str().unwrap(), "--max-degree", "4"]);
    assert_eq!(code, 0);
    for line in ["(1)    -q^(3/2)", "(4)    q^7 + q^9", "status: ok"] {
        assert!(out.contains(line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn refined_without_loops_reports_but_passes() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_quiver(dir.path(), "g0.json", r#"{"vertices": 1, "arrow_matrix": [[0]]}"#);
    let (code, out, _) = quiverdt(&["refined", "--quiver", q.to_str().unwrap(), "--max-degree", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("[FAIL] b_gamma in N[q] (reported)"));
    assert!(out.contains("x11^2      -q^-1"));
}

#[test]
fn kac_for_jordan_quiver_as_json() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_quiver(dir.path(), "j.json", r#"{"vertices": 1, "arrow_matrix": [[1]]}"#);
    let (code, out, _) = quiverdt(&["kac", "--quiver", q.to_str().unwrap(), "--max-degree", "3", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    let rows = v["tables"][0]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    for row in rows {
        assert_eq!(ratfunc_from_json(&row[1]).unwrap(), rf(qp(&[(1, 1)])));
        assert_eq!(row[2], Value::Bool(true));
    }
}

/// Every cell of the JSON report renders to the corresponding table cell.
#[test]
fn table_and_json_carry_the_same_data() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_quiver(
        dir.path(),
        "two.json",
        r#"{"vertices": 2, "arrow_matrix": [[1, 1], [1, 1]], "theta": ["1", 0]}"#,
    );
    for cmd in ["dt", "kac", "refined", "hn", "stable"] {
        let base = ["--quiver", q.to_str().unwrap(), "--max-degree", "3"];
        let table = run_args(["quiverdt", cmd].iter().chain(&base).copied());
        let json = run_args(["quiverdt", cmd].iter().chain(&base).chain(&["--format", "json"]).copied());
        assert_eq!((table.exit_code, json.exit_code), (0, 0), "{cmd}");
        let v: Value = serde_json::from_str(&json.stdout).unwrap();
        let mut lines = table.stdout.lines();
        for t in v["tables"].as_array().unwrap() {
            assert!(lines.any(|l| l == t["title"].as_str().unwrap()), "{cmd}: title");
            lines.next();
            for row in t["rows"].as_array().unwrap() {
                let line = lines.next().unwrap();
                let mut rest = line;
                for cell in row.as_array().unwrap() {
                    let text = match cell {
                        Value::String(s) => s.clone(),
                        Value::Bool(true) => "yes".into(),
                        Value::Bool(false) => "no".into(),
                        Value::Number(n) => n.to_string(),
                        poly => {
                            let f = ratfunc_from_json(poly).unwrap();
                            f.as_laurent().map_or_else(|| f.to_string(), |p| p.to_string())
                        }
                    };
                    let at = rest.find(&text).unwrap_or_else(|| panic!("{cmd}: {text:?} not in {line:?}"));
                    rest = &rest[at + text.len()..];
                }
            }
        }
        assert_eq!(v["status"], "ok");
    }
}

#[test]
fn json_polynomials_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_quiver(dir.path(), "g3.json", r#"{"vertices": 1, "arrow_matrix": [[3]]}"#);
    let out = run_args(["quiverdt", "dt", "--quiver", q.to_str().unwrap(), "--max-degree", "4", "--format", "json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    let row = &v["tables"][0]["rows"][3];
    assert_eq!(row[0], "(4)");
    let expect = qp(&[(9, 1), (10, 1), (11, 2), (12, 1), (13, 2), (14, 1), (15, 1), (17, 1)]);
    assert_eq!(ratfunc_from_json(&row[2]).unwrap(), rf(expect));
    assert_eq!(row[2]["terms"][2], serde_json::json!([22, "2"]));
}

#[test]
fn oracle_and_selftest() {
    let dir = tempfile::tempdir().unwrap();
    let q = write_quiver(dir.path(), "two.json", r#"{"vertices": 2, "arrow_matrix": [[1, 1], [1, 1]]}"#);
    let path = q.to_str().unwrap();
    let (code, out, _) = quiverdt(&["oracle", "--quiver", path, "--max-degree", "2", "--prime", "3"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("(1,1)  45       36"));
    let (code, out, _) = quiverdt(&["selftest", "--quiver", path, "--max-degree", "3", "--prime", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn input_errors_exit_with_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_quiver(dir.path(), "bad.json", r#"{"vertices": 2, "arrow_matrix": [[1]]}"#);
    let good = write_quiver(dir.path(), "g.json", r#"{"vertices": 1, "arrow_matrix": [[1]]}"#);
    let a2 = write_quiver(dir.path(), "a2.json", r#"{"vertices": 2, "arrow_matrix": [[0, 1], [0, 0]]}"#);
    let cases: [&[&str]; 6] = [
        &["dt", "--quiver", bad.to_str().unwrap(), "--max-degree", "2"],
        &["dt", "--quiver", "/nonexistent.json", "--max-degree", "2"],
        &["oracle", "--quiver", good.to_str().unwrap(), "--max-degree", "2"],
        &["oracle", "--quiver", good.to_str().unwrap(), "--max-degree", "2", "--prime", "4"],
        &["dt", "--quiver", good.to_str().unwrap(), "--max-degree", "0"],
        &["dt", "--quiver", a2.to_str().unwrap(), "--max-degree", "2"],
    ];
    for args in cases {
        let (code, _, err) = quiverdt(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
    let (code, _, err) = quiverdt(&["hn", "--quiver", good.to_str().unwrap(), "--max-degree", "2", "--theta", "1,2"]);
    assert_eq!(code, 2);
    assert!(err.contains("theta"));
}
