//! End-to-end checks of the `gtbrion` binary: golden outputs for small
//! weights, usage-error exit codes, and byte-level determinism of seeded
//! reports across repeated runs and across worker-thread counts.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gtbrion"))
        .args(args)
        .env_remove("GTBRION_LAMBDA")
        .env_remove("GTBRION_SEED")
        .env_remove("GTBRION_FORMAT")
        .output()
        .expect("binary should spawn")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout should be utf-8")
}

#[test]
fn schur_prints_the_polynomial() {
    let out = run(&["schur", "--lambda", "1,0"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x1 + x2");
}

#[test]
fn schur_evaluates_at_a_point() {
    let out = run(&["schur", "--lambda", "2,1,0", "--at", "1,1,1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "8");

    let out = run(&["schur", "--lambda", "3,2,1,0", "--at", "1,1,1,1"]);
    assert_eq!(stdout(&out).trim(), "64");
}

#[test]
fn schur_refuses_csv() {
    let out = run(&["schur", "--lambda", "1,0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn non_dominant_lambda_is_a_usage_error() {
    let out = run(&["vertices", "--lambda", "1,2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("dominant"), "stderr should explain: {err}");
}

#[test]
fn degenerate_point_override_is_rejected() {
    let out = run(&["contributions", "--lambda", "1,0", "--at", "2,2"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("rejected"), "stderr should explain: {err}");
}

#[test]
fn verify_passes_and_report_is_byte_identical() {
    let args = [
        "verify", "--lambda", "2,1,0", "--seed", "7", "--format", "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(
        first.status.success(),
        "verify should exit 0 when all checks pass"
    );
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "same seed and config must reproduce the report"
    );
}

#[test]
fn worker_count_does_not_change_the_report() {
    let serial = run(&[
        "verify", "--lambda", "2,2,0", "--seed", "3", "--format", "json", "--jobs", "1",
    ]);
    let parallel = run(&[
        "verify", "--lambda", "2,2,0", "--seed", "3", "--format", "json", "--jobs", "2",
    ]);
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn environment_variables_stand_in_for_flags() {
    let out = Command::new(env!("CARGO_BIN_EXE_gtbrion"))
        .arg("schur")
        .env("GTBRION_LAMBDA", "1,0")
        .output()
        .expect("binary should spawn");
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "x1 + x2");
}

#[test]
fn contributions_csv_has_one_row_per_vertex() {
    let out = run(&[
        "contributions",
        "--lambda",
        "1,0",
        "--at",
        "2,3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("pattern,mu,simplicial,acyclic,permutation,contribution,zero,matched")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 2, "the segment has two vertices");
    assert!(rows.iter().any(|r| r.contains(",-4,")));
    assert!(rows.iter().any(|r| r.contains(",9,")));
}
