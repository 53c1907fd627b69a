use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn lexseg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexseg")).args(args).env_remove("LEXSEG_WORKERS").output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    std::fs::read_to_string(path).expect("fixture exists")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(args: &[&str], name: &str) -> Value {
    let out = lexseg(args);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8_lossy(&out.stdout), fixture(name));
    stdout_json(&out)
}

#[test]
fn three_variable_segment_golden() {
    let r = golden(
        &["analyze", "--n", "3", "--d", "3", "--u", "x1*x2*x3", "--v", "x2*x3^2", "--check-oracle", "--resolution"],
        "analyze_n3_d3.json",
    );
    assert_eq!(r["completely"], true);
    assert_eq!(r["linear_resolution"], true);
    assert_eq!(r["case"]["linear_resolution"], "c");
    assert_eq!(r["order"]["generators"], serde_json::json!(["x2^3", "x2^2*x3", "x2*x3^2", "x1*x2*x3", "x1*x3^2"]));
    assert_eq!(r["oracle_agreement"]["all"], true);
    assert_eq!(r["resolution"]["ranks"], serde_json::json!([1, 5, 5, 1]));
}

#[test]
fn five_generator_resolution_golden() {
    let r = golden(
        &["resolve", "--n", "3", "--gens", "x2^3,x1*x2^2,x1*x2*x3,x1*x3^2,x1^2*x2", "--verify"],
        "resolve_five_generators.json",
    );
    assert_eq!(r["verification"]["passed"], true);
    assert_eq!(r["verification"]["hilbert_numerator"], "1 - 5t^3 + 5t^4 - t^5");
    assert_eq!(r["resolution"]["twists"], serde_json::json!([[0], [-3, -3, -3, -3, -3], [-4, -4, -4, -4, -4], [-5]]));
    assert_eq!(r["resolution"]["sets"], serde_json::json!([[], [2], [2], [2], [2, 3]]));
}

#[test]
fn non_complete_segment_golden() {
    let r = golden(
        &["analyze", "--n", "6", "--d", "4", "--u", "x1*x3^2*x5", "--v", "x2*x6^3", "--check-oracle"],
        "analyze_n6_d4.json",
    );
    assert_eq!(r["completely"], false);
    assert_eq!(r["linear_resolution"], true);
    assert_eq!(r["order"]["kind"], "j-then-k");
    assert_eq!(r["linear_quotients"], true);
}

#[test]
fn irregular_decomposition_golden() {
    let r = golden(
        &["analyze", "--n", "4", "--d", "3", "--u", "x1*x3^2", "--v", "x2*x4^2", "--check-oracle"],
        "analyze_n4_d3.json",
    );
    let reg = &r["regular_decomposition"];
    assert_eq!(reg["regular"], false);
    assert_eq!(reg["witness"]["generator"], "x1*x4^2");
    assert_eq!(reg["witness"]["var"], 2);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["analyze", "--n", "4", "--d", "3", "--u", "x1*x2^2", "--v", "x3^3", "--check-oracle"];
    assert_eq!(lexseg(&args).stdout, lexseg(&args).stdout);
}

#[test]
fn meta_only_when_asked() {
    let args = ["enumerate", "--n", "2", "--d", "2"];
    assert!(stdout_json(&lexseg(&args)).get("meta").is_none());
    let with = lexseg(&["--meta", "enumerate", "--n", "2", "--d", "2"]);
    assert!(stdout_json(&with)["meta"]["version"].is_string());
}

#[test]
fn enumerate_lists_in_lex_order() {
    let r = stdout_json(&lexseg(&["enumerate", "--n", "2", "--d", "2"]));
    assert_eq!(r["monomials"], serde_json::json!(["x1^2", "x1*x2", "x2^2"]));
    let r = stdout_json(&lexseg(&["enumerate", "--n", "3", "--d", "3", "--u", "x1*x2*x3", "--v", "x2*x3^2"]));
    assert_eq!(r["count"], 5);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(lexseg(&["analyze", "--n", "3"]).status.code(), Some(2));
    let bad = lexseg(&["analyze", "--n", "3", "--d", "2", "--u", "x1*x4", "--v", "x3^2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("out of range"));
    let syntax = lexseg(&["analyze", "--n", "3", "--d", "2", "--u", "x1*", "--v", "x3^2"]);
    assert_eq!(syntax.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&syntax.stderr).contains("byte 3"));
    // u <lex v
    assert_eq!(lexseg(&["analyze", "--n", "3", "--d", "2", "--u", "x3^2", "--v", "x1^2"]).status.code(), Some(2));
}

#[test]
fn unsupported_construction_exits_4() {
    let out = lexseg(&["resolve", "--n", "6", "--d", "4", "--u", "x1*x3^2*x5", "--v", "x2*x6^3"]);
    assert_eq!(out.status.code(), Some(4));
    // linear quotients in the given order but a non-regular decomposition function
    let out = lexseg(&[
        "resolve",
        "--n",
        "4",
        "--gens",
        "x2^3,x2^2*x3,x2^2*x4,x2*x3^2,x2*x3*x4,x2*x4^2,x1*x4^2,x1*x3*x4,x1*x3^2",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not regular"));
}

#[test]
fn principal_resolution() {
    let out = lexseg(&["resolve", "--n", "3", "--d", "2", "--u", "x2*x3", "--v", "x2*x3", "--verify"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["resolution"]["ranks"], serde_json::json!([1, 1]));
    assert_eq!(r["verification"]["hilbert_numerator"], "1 - t^2");
}

#[test]
fn sweep_two_variables() {
    let out = lexseg(&["sweep", "--max-n", "2", "--max-d", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["instances"], 31);
    assert_eq!(r["mismatches"], 0);
}

#[test]
fn sweep_small_range_exercises_every_clause() {
    let out = Command::new(env!("CARGO_BIN_EXE_lexseg"))
        .args(["sweep", "--min-n", "3", "--max-n", "4", "--max-d", "3"])
        .env("LEXSEG_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r = stdout_json(&out);
    assert_eq!(r["mismatches"], 0);
    for clause in ["linear:a", "linear:b", "linear:c", "linear:non-complete", "cm:a", "cm:b", "depth:zero", "depth:c"] {
        assert!(r["clauses"][clause].as_u64().unwrap_or(0) > 0, "{clause} never fired");
    }
}
