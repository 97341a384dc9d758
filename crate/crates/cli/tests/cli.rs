use std::process::{Command, Output};

use monocurve_core::VerificationReport;

fn monocurve(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monocurve"))
        .args(args)
        .env_remove("MONOCURVE_N_MAX")
        .env_remove("MONOCURVE_K")
        .env_remove("MONOCURVE_FIELD")
        .env_remove("MONOCURVE_FORMAT")
        .env_remove("MONOCURVE_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = monocurve(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn report(args: &[&str]) -> VerificationReport {
    let mut full = args.to_vec();
    full.extend(["--format", "json", "--no-timing"]);
    VerificationReport::from_json(&stdout(&full)).unwrap()
}

fn choose(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn ideal_examples() {
    assert_eq!(stdout(&["ideal", "--d", "3", "--kind", "I", "--n", "2"]), "x3^3, x2^2*x3^2, x2^3*x3, x2^4\n");
    assert_eq!(stdout(&["ideal", "--d", "3", "--kind", "fi", "--i", "1"]), "-x2^2\n");
    assert_eq!(stdout(&["ideal", "--d", "2", "--kind", "I", "--n", "5"]), "x2^10\n");
    assert_eq!(stdout(&["ideal", "--d", "3", "--kind", "J", "--i", "1"]), "x3^2, x2*x3, x2^2\n");
    assert_eq!(stdout(&["ideal", "--d", "3", "--kind", "S", "--a", "1,1"]), "x2*x3^2, x2^2*x3\n");
    assert_eq!(stdout(&["ideal", "--d", "3", "--kind", "X"]), "[x1, x2, x3]\n[x2, x3, x1^2]\n[x3, x1^2, x1*x2]\n");
    assert_eq!(stdout(&["ideal", "--d", "4", "--kind", "I", "--n", "0"]), "1\n");
}

#[test]
fn ideal_bad_parameters() {
    assert_eq!(monocurve(&["ideal", "--d", "3", "--kind", "fi"]).status.code(), Some(2));
    assert_eq!(monocurve(&["ideal", "--d", "3", "--kind", "fi", "--i", "7"]).status.code(), Some(2));
    assert_eq!(monocurve(&["ideal", "--d", "3", "--m", "3", "--kind", "X"]).status.code(), Some(2));
    assert_eq!(monocurve(&["ideal", "--d", "3", "--kind", "S", "--a", "1,0"]).status.code(), Some(2));
    assert_eq!(monocurve(&["ideal", "--d", "1", "--kind", "I", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn length_suite_values() {
    let r = report(&["verify", "--suite", "length", "--d", "4", "--n-max", "6"]);
    assert_eq!(r.summary.total, 6);
    assert_eq!(r.summary.passed, 6);
    for (n, case) in (1..=6u64).zip(&r.cases) {
        assert_eq!(case.actual, serde_json::json!(4 * choose(n + 2, 3)));
    }
}

#[test]
fn colon_and_socle_pass() {
    assert!(report(&["verify", "--suite", "colon", "--d", "5", "--n-max", "8"]).all_passed());
    let socle = report(&["verify", "--suite", "socle", "--d", "3"]);
    assert!(socle.all_passed());
    assert!(socle.cases.iter().any(|c| c.actual == serde_json::json!(1)));
}

#[test]
fn exit_codes() {
    assert_eq!(monocurve(&["verify", "--suite", "length", "--d", "3", "--n-max", "3"]).status.code(), Some(0));
    assert_eq!(monocurve(&["verify", "--suite", "leading", "--d", "6"]).status.code(), Some(2));
    assert_eq!(monocurve(&["verify", "--suite", "sanity", "--d", "7"]).status.code(), Some(2));
    assert_eq!(monocurve(&["verify", "--suite", "nope", "--d", "3"]).status.code(), Some(2));
    assert_eq!(monocurve(&["verify", "--suite", "length", "--d", "3", "--field", "fp:10"]).status.code(), Some(2));
    assert_eq!(monocurve(&["verify", "--suite", "length"]).status.code(), Some(2));
    assert_eq!(monocurve(&["verify", "--suite", "length", "--d", "3", "--jobs", "0"]).status.code(), Some(2));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = ["verify", "--suite", "alternating", "--d", "3", "--n-max", "4", "--format", "json", "--no-timing"];
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(monocurve(&with_out).status.code(), Some(0));
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(VerificationReport::from_json(&written).unwrap().to_json(), written);
    assert_eq!(stdout(&args), written);
}

#[test]
fn all_suites_as_json_array() {
    let out = stdout(&["verify", "--d", "3", "--n-max", "3", "--format", "json", "--no-timing"]);
    let reports: Vec<VerificationReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 9);
    assert!(reports.iter().all(VerificationReport::all_passed));
    let again = stdout(&["verify", "--d", "3", "--n-max", "3", "--format", "json", "--no-timing", "--jobs", "1"]);
    assert_eq!(out, again);
}

#[test]
fn csv_output() {
    let out = stdout(&["verify", "--suite", "length", "--d", "3", "--n-max", "4", "--format", "csv"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("suite,case,inputs,expected,actual,pass"));
    assert_eq!(lines.count(), 4);
}

#[test]
fn env_override_of_grid() {
    let out = Command::new(env!("CARGO_BIN_EXE_monocurve"))
        .args(["verify", "--suite", "length", "--d", "3", "--format", "json"])
        .env("MONOCURVE_N_MAX", "3")
        .output()
        .unwrap();
    let r = VerificationReport::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(r.summary.total, 3);
}

#[test]
fn text_output_summary() {
    let out = stdout(&["verify", "--suite", "scounts", "--d", "3", "--n-max", "4", "--no-timing"]);
    assert!(out.starts_with("suite scounts (d=3, n_max=4, field=rational)\n"));
    assert!(out.trim_end().ends_with("0 failed, 0 ms"));
}
