//! End-to-end checks of the executable: file formats, documented outputs,
//! and the exit-code contract (0 success, 1 verification failure, 2 usage).

use std::path::Path;
use std::process::{Command, Output};

fn gf2lab(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gf2lab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn projective_generation_is_complete_and_stable() {
    let dir = tempfile::tempdir().unwrap();
    let first = gf2lab(&["gen", "projective", "-n", "4", "-o", "pg.gf2set"], dir.path());
    assert!(first.status.success());
    let text = std::fs::read_to_string(dir.path().join("pg.gf2set")).unwrap();
    assert_eq!(text.lines().next(), Some("n=4"));
    let rows: Vec<&str> = text
        .lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .collect();
    assert_eq!(rows.len(), 15, "all nonzero vectors of GF(2)^4");
    assert!(rows.iter().all(|r| r.len() == 4));
    gf2lab(&["gen", "projective", "-n", "4", "-o", "again.gf2set"], dir.path());
    let again = std::fs::read_to_string(dir.path().join("again.gf2set")).unwrap();
    assert_eq!(text, again, "generation is deterministic");
}

#[test]
fn critical_exact_reports_the_known_value() {
    let dir = tempfile::tempdir().unwrap();
    gf2lab(&["gen", "projective", "-n", "4", "-o", "pg.gf2set"], dir.path());
    let out = gf2lab(&["critical", "exact", "pg.gf2set"], dir.path());
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["value"], 4);
    assert_eq!(value["method"], "exact");
    assert_eq!(value["witness_basis"].as_array().unwrap().len(), 4);
}

#[test]
fn census_emits_the_documented_csv_header() {
    let dir = tempfile::tempdir().unwrap();
    gf2lab(&["gen", "projective", "-n", "4", "-o", "pg.gf2set"], dir.path());
    let out = gf2lab(&["matroid", "census", "pg.gf2set", "-k", "5"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("element,count"));
    assert_eq!(text.lines().count(), 16, "header plus one row per element");
    assert!(text.lines().skip(1).all(|l| l.ends_with(",56")));
}

#[test]
fn count_sums_emits_a_full_table() {
    let dir = tempfile::tempdir().unwrap();
    gf2lab(&["gen", "projective", "-n", "3", "-o", "plane.gf2set"], dir.path());
    let out = gf2lab(&["spectral", "count-sums", "plane.gf2set", "-k", "3"], dir.path());
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("x,count"));
    assert_eq!(text.lines().count(), 9);
    assert!(text.contains("000,42"));
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(gf2lab(&["no-such-command"], dir.path()).status.code(), Some(2));
    assert_eq!(
        gf2lab(&["gen", "projective", "-n", "notanumber"], dir.path()).status.code(),
        Some(2)
    );
    assert_eq!(
        gf2lab(&["critical", "exact", "missing.gf2set"], dir.path()).status.code(),
        Some(2),
        "an unreadable input is an operational error"
    );
    assert_eq!(
        gf2lab(&["constants", "--alpha", "1/0", "-k", "5"], dir.path()).status.code(),
        Some(2)
    );
}

#[test]
fn verification_failures_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    gf2lab(
        &["gen", "affine-layer", "--gamma", "100101", "-o", "layer.gf2set"],
        dir.path(),
    );
    let check = gf2lab(
        &["regularity", "check", "layer.gf2set", "--eps", "1/8"],
        dir.path(),
    );
    assert_eq!(check.status.code(), Some(1), "a layer is irregular over the full space");
    let cert: serde_json::Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(cert["regular"], false);

    let strict = gf2lab(
        &["spectral", "uniformity", "layer.gf2set", "--eps", "1/128"],
        dir.path(),
    );
    assert_eq!(strict.status.code(), Some(1), "defect 2^(n-1) fails a strict threshold");
}

#[test]
fn flat_or_triangle_finds_the_plane_triangle() {
    let dir = tempfile::tempdir().unwrap();
    gf2lab(&["gen", "projective", "-n", "3", "-o", "plane.gf2set"], dir.path());
    let out = gf2lab(
        &["verify", "flat-or-triangle", "plane.gf2set", "--eps", "1/4"],
        dir.path(),
    );
    assert!(out.status.success());
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &reports.as_array().unwrap()[0];
    assert_eq!(report["pass"], true);
    assert_eq!(report["procedure"]["outcome"]["kind"], "triangle");
    assert_eq!(
        report["procedure"]["outcome"]["elements"],
        serde_json::json!(["001", "010", "011"])
    );
}

#[test]
fn self_test_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = gf2lab(&["--self-test", "--seed", "7"], dir.path());
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 10, "one line per suite");
    assert!(text.lines().all(|l| l.contains(": pass")));
}

#[test]
fn regularity_find_writes_the_trace_file() {
    let dir = tempfile::tempdir().unwrap();
    gf2lab(
        &["gen", "random-density", "-n", "9", "--density", "1/2", "--seed", "5", "-o", "x.gf2set"],
        dir.path(),
    );
    let out = gf2lab(
        &["regularity", "find", "x.gf2set", "--eps", "1/8", "--trace", "trace.json"],
        dir.path(),
    );
    assert!(out.status.success());
    let trace: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("trace.json")).unwrap())
            .unwrap();
    assert_eq!(trace["certificate"]["regular"], true);
    assert_eq!(
        trace["steps"].as_array().unwrap().len() as u64,
        trace["certificate"]["subspace"]["codim"].as_u64().unwrap(),
        "one refinement step per lost dimension"
    );
}
