use std::process::{Command, Output};

use serde_json::Value;

fn coins(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coins"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = coins(&all);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn check_reports_verdict_and_sum() {
    let rec = json(&["check", "110110"]);
    assert_eq!(rec["schema_version"], 1);
    assert_eq!(rec["removable"], true);
    assert_eq!(rec["parity_sum"], 0);
    let rec = json(&["check", "010111"]);
    assert_eq!(rec["removable"], false);
    assert_eq!(rec["residue"], 2);
    let rec = json(&["check", "10010", "--variant", "circle-nogaps"]);
    assert_eq!(rec["removable"], true);
}

#[test]
fn solve_prints_a_replayable_trace() {
    let rec = json(&["solve", "110"]);
    let steps = rec["trace"].as_array().unwrap();
    assert_eq!(steps.len(), 3);
    assert_eq!(steps.last().unwrap()["configuration"], "");
    let rec = json(&["solve", "11", "--method", "search"]);
    assert_eq!(rec["removable"], false);
    assert!(rec["trace"].is_null());
}

#[test]
fn count_is_exact_for_large_n() {
    assert_eq!(json(&["count", "7"])["count"], "85");
    let matrix = json(&["count", "60", "--method", "matrix"]);
    let recurrence = json(&["count", "60", "--method", "recurrence"]);
    assert_eq!(matrix["count"], recurrence["count"]);
    assert_eq!(matrix["count"], "768614336404564650");
}

#[test]
fn game_and_grid_commands() {
    assert_eq!(json(&["game", "111"])["winner"], "first-wins");
    assert_eq!(json(&["game", "101"])["winner"], "second-wins");
    assert_eq!(json(&["grid", "1010/0101"])["removable"], true);
    assert_eq!(
        json(&["grid", "0110/0000", "--method", "brute"])["removable"],
        false
    );
}

#[test]
fn dfa_export_and_run() {
    let out = coins(&["dfa", "export", "--minimized"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("digraph"));
    assert_eq!(text.matches("->").count(), 10);
    let rec = json(&["dfa", "run", "110110", "--minimized"]);
    assert_eq!(rec["accepted"], true);
    assert_eq!(rec["path"].as_array().unwrap().len(), 7);
}

#[test]
fn verify_passes_small_lengths() {
    let out = coins(&["verify", "--max-len", "8"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(out.status.success(), "{text}");
    assert!(!text.contains("[FAIL]"));
}

#[test]
fn bad_input_exits_with_usage_code() {
    for args in [
        &["check", "12"][..],
        &["check", "1.1"],
        &["verify", "--max-len", "15"],
        &["frobnicate"],
        &["count", "7", "--method", "abacus"],
    ] {
        let out = coins(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
