//! End-to-end tests of the compiled binary: output formats and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2theta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verlinde_csv_has_exact_header_and_value() {
    let out = run(&[
        "verlinde", "--algebra", "G2", "--level", "1", "--genus", "2", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("algebra,level,genus,dimension,method,residual,precision_bits")
    );
    let row = lines.next().unwrap();
    assert!(row.starts_with("G2,1,2,5,verlinde,"));
}

#[test]
fn verlinde_json_round_trips_with_string_dimension() {
    let out = run(&[
        "verlinde", "--algebra", "A1", "--level", "3", "--genus-range", "2..4", "--format", "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 3);
    assert_eq!(records[0]["dimension"], "20");
    assert_eq!(records[1]["dimension"], "120");
    assert_eq!(records[2]["dimension"], "800");
    assert_eq!(records[0]["method"], "verlinde");
    // emit and reparse is the identity
    let again: serde_json::Value =
        serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
}

#[test]
fn verlinde_writes_to_file() {
    let dir = std::env::temp_dir().join("g2theta-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let out = run(&[
        "verlinde", "--algebra", "A2", "--level", "1", "--genus", "3", "--format", "csv", "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.contains("A2,1,3,27,verlinde,"));
}

#[test]
fn verlinde_rejects_level_zero_with_usage_exit() {
    let out = run(&["verlinde", "--algebra", "A1", "--level", "0", "--genus", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verlinde_rejects_genus_one() {
    let out = run(&["verlinde", "--algebra", "A1", "--level", "1", "--genus", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = run(&["verlinde", "--bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn tight_precision_cap_exits_three() {
    let out = Command::new(env!("CARGO_BIN_EXE_g2theta"))
        .args(["verlinde", "--algebra", "G2", "--level", "1", "--genus", "12"])
        .env("THETA_PRECISION_CAP", "128")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("residual"));
    assert!(err.contains("128"));
}

#[test]
fn identities_pass_over_small_range() {
    let out = run(&["identities", "--genus-range", "2..4", "--format", "table"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("20 = 20"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn identities_reject_genus_below_two() {
    let out = run(&["identities", "--genus-range", "1..3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn octonion_verify_passes_and_reports_dimensions() {
    let out = run(&["octonion-verify"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "derivations: 14, sl3-stabilizer: 8, so4-stabilizer: 6, lemmas: pass"
    );
}

#[test]
fn octonion_verify_json_schema() {
    let out = run(&["octonion-verify", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["derivation_dimension"], 14);
    assert_eq!(v["sl3_stabilizer_dimension"], 8);
    assert_eq!(v["so4_stabilizer_dimension"], 6);
    assert_eq!(v["lemma22_passed"], true);
    assert_eq!(v["lemma23_passed"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn tampered_table_fails_naming_the_pair() {
    let out = run(&["octonion-verify", "--tamper", "2,5"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("(2, 5)"), "missing pair in: {text}");
}

#[test]
fn dynkin_known_values() {
    for (algebra, weight, want) in [
        ("G2", "1,0", "2"),
        ("A1", "2", "4"),
        ("A2", "1,0", "1"),
    ] {
        let out = run(&["dynkin", "--algebra", algebra, "--weight", weight]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), want, "{algebra} {weight}");
    }
}

#[test]
fn dynkin_rejects_malformed_weight() {
    let out = run(&["dynkin", "--algebra", "G2", "--weight", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["dynkin", "--algebra", "G2", "--weight", "-1,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn dynkin_rejects_unknown_algebra() {
    let out = run(&["dynkin", "--algebra", "B2", "--weight", "1,0"]);
    assert_eq!(out.status.code(), Some(2));
}
