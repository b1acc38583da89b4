//! End-to-end tests of the command-line interface: subcommand output,
//! exit-code taxonomy, and byte-level determinism of the search stream.

use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_socle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn analyze_monomial_ring() {
    let out = run(&["analyze", corpus("monomial-xyz.ring").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["depth"], 0);
    assert_eq!(v["hilbert"]["multiplicity"], 1);
    assert_eq!(v["sop"]["detail"]["e_x"], 1);
    assert_eq!(v["status"], "ok");
}

#[test]
fn analyze_artinian_msquare() {
    let out = run(&["analyze", corpus("artinian-msquare.ring").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["dim"], 0);
    assert_eq!(v["is_aci"], true);
    assert_eq!(v["is_cm"], true);
    assert_eq!(v["sop"]["detail"]["e_x"], 3);
    assert_eq!(v["sop"]["detail"]["m2_case"]["ok"], true);
}

#[test]
fn koszul_subcommand_reports_lengths() {
    let out = run(&[
        "koszul",
        corpus("monomial-xyz.ring").to_str().unwrap(),
        "--seq",
        "y,z",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let rows = v["homology"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["length"], 2);
    assert_eq!(rows[1]["length"], 2);
    assert_eq!(rows[2]["length"], 1);
    assert_eq!(rows[2]["nonzero"], true);
}

#[test]
fn question1_passes_on_corpus() {
    let out = run(&["question1", corpus("artinian-msquare.ring").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ok"], true);
}

#[test]
fn residual_uses_file_witness() {
    let out = run(&["residual", corpus("monomial-xyz.ring").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["witness"], "x");
    assert_eq!(v["acyclic"], true);
    assert_eq!(v["h0_length_one"], true);
}

#[test]
fn residual_rejects_bad_witness() {
    let out = run(&[
        "residual",
        corpus("monomial-xyz.ring").to_str().unwrap(),
        "--z",
        "y",
    ]);
    assert_eq!(out.status.code(), Some(65));
}

#[test]
fn hilbert_subcommand() {
    let out = run(&["hilbert", corpus("monomial-xyz.ring").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["hilbert"]["dim"], 2);
    assert_eq!(v["hilbert"]["multiplicity"], 1);
    assert_eq!(
        v["hilbert"]["numerator"],
        serde_json::json!([1, 1, -2, 1])
    );
    // weighted gradings are rejected
    let out2 = run(&["hilbert", corpus("weighted-dim6.ring").to_str().unwrap()]);
    assert_eq!(out2.status.code(), Some(65));
}

#[test]
fn oracle_subcommand_table() {
    let out = run(&[
        "oracle",
        corpus("monomial-xyz.ring").to_str().unwrap(),
        "--seq",
        "y,z",
        "--i",
        "2",
        "--bound",
        "8",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["total"], 1);
}

#[test]
fn adjoin_sqrt_emits_new_presentation() {
    let out = run(&[
        "adjoin-sqrt",
        corpus("monomial-xyz.ring").to_str().unwrap(),
        "--elems",
        "y,z",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["minimal_basis_promotion"], true);
    assert_eq!(v["dim_preserved"], true);
    let rendered = v["presentation"].as_str().unwrap();
    assert!(rendered.contains("Q1") && rendered.contains("Q2"));
}

#[test]
fn search_deterministic_bytes() {
    let args = ["search", "--seed", "7", "--count", "3", "--vars", "3"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.iter().filter(|&&c| c == b'\n').count(), 3);
}

#[test]
fn exit_codes_usage_and_parse() {
    // unknown subcommand: usage error
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(64));
    // missing file: input error
    let out = run(&["analyze", "/nonexistent.ring"]);
    assert_eq!(out.status.code(), Some(65));
    // malformed polynomial in the file: input error, no panic
    let dir = std::env::temp_dir().join("socle-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.ring");
    std::fs::write(&bad, "char = 0\nvars = [x]\nideal = [x + + 1]\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
    assert!(!out.stderr.is_empty());
}

#[test]
fn inhomogeneous_input_suggests_weights() {
    let dir = std::env::temp_dir().join("socle-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("inhom.ring");
    std::fs::write(&f, "char = 0\nvars = [x, y]\nideal = [y^2 + x^3]\n").unwrap();
    let out = run(&["analyze", f.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(65));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("weights"), "stderr was: {}", err);
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
