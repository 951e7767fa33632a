//! End-to-end tests driving the binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn rwp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rwp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const UNIVERSAL: &str = "\
alphabet: x X
states: q
start: q
final: q
trans: q x - q
trans: q X - q
trans: q - x q
trans: q - X q
";

fn write_universal(dir: &Path) -> String {
    let path = dir.join("universal.afsa");
    fs::write(&path, UNIVERSAL).expect("writable temp dir");
    path.display().to_string()
}

#[test]
fn eval_reports_the_triple_of_a_word() {
    let out = rwp(&["eval", "--model", "freeinverse", "--word", "xxxXXXXxxx"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(-1,3,2)\n");

    let json = rwp(&[
        "eval",
        "--model",
        "freeinverse",
        "--word",
        "xxxXXXXxxx",
        "--format",
        "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid json");
    assert_eq!(value["element"], "(-1,3,2)");
    assert_eq!(value["word"], "xxxXXXXxxx");
}

#[test]
fn eval_in_other_models() {
    let out = rwp(&["eval", "--model", "bicyclic", "--word", "bbc"]);
    assert_eq!(stdout(&out), "c^0 b^1\n");

    let out = rwp(&["eval", "--model", "c2", "--word", "gg"]);
    assert_eq!(stdout(&out), "e\n");

    let out = rwp(&["eval", "--model", "freemonoid:a,b", "--word", "ab"]);
    assert_eq!(stdout(&out), "ab\n");
}

#[test]
fn eval_rejects_bad_input_with_exit_2() {
    let out = rwp(&["eval", "--model", "freeinverse", "--word", "xyz"]);
    assert_eq!(code(&out), 2);
    let out = rwp(&["eval", "--model", "no-such-model-file", "--word", "x"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn wp_check_verdicts_drive_the_exit_code() {
    let equal = rwp(&["wp-check", "--model", "freeinverse", "xXx", "x"]);
    assert_eq!(code(&equal), 0);
    assert_eq!(stdout(&equal), "equal\n");

    let different = rwp(&["wp-check", "--model", "freeinverse", "xxxXXXXxxx", "xxxx"]);
    assert_eq!(code(&different), 1);
    assert_eq!(stdout(&different), "different\n");

    let bicyclic = rwp(&["wp-check", "--model", "bicyclic", "bbc", "b"]);
    assert_eq!(code(&bicyclic), 0);
}

#[test]
fn wp_enum_lists_pairs_in_canonical_order() {
    let out = rwp(&["wp-enum", "--model", "freemonoid:a", "--max-len", "2"]);
    assert_eq!(stdout(&out), "a a\naa aa\n");

    let json = rwp(&["wp-enum", "--model", "c2", "--max-len", "2", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid json");
    assert_eq!(value["max_len"], 2);
    assert_eq!(value["pairs"][0], serde_json::json!({"u": "g", "v": "g"}));
}

#[test]
fn afsa_accept_and_enum_run_automata_from_files() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = write_universal(dir.path());

    let yes = rwp(&["afsa-accept", "--afsa", &path, "xX", "Xx"]);
    assert_eq!(code(&yes), 0);
    assert_eq!(stdout(&yes), "accepted\n");

    // `-` is the empty word; the universal automaton's start is final
    let empty = rwp(&["afsa-accept", "--afsa", &path, "-", "-"]);
    assert_eq!(code(&empty), 0);

    let listed = rwp(&["afsa-enum", "--afsa", &path, "--max-len", "1"]);
    assert_eq!(stdout(&listed), "- -\n- X\n- x\nX -\nx -\nX X\nX x\nx X\nx x\n");

    let bad = rwp(&["afsa-accept", "--afsa", &path, "ab", "x"]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn cayley_afsa_output_is_reusable() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("c2.afsa").display().to_string();

    let wrote = rwp(&["cayley-afsa", "--model", "c2", "--out", &path]);
    assert_eq!(code(&wrote), 0);
    assert!(stdout(&wrote).contains("9 states"));

    let odd_even = rwp(&["afsa-accept", "--afsa", &path, "g", "ggg"]);
    assert_eq!(code(&odd_even), 0);
    let odd_odd = rwp(&["afsa-accept", "--afsa", &path, "g", "gg"]);
    assert_eq!(code(&odd_odd), 1);
}

#[test]
fn refute_fi_emits_a_verified_witness() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = write_universal(dir.path());

    let out = rwp(&["refute-fi", "--afsa", &path]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("kind: accepted-invalid-pair"));
    assert!(text.contains("verified: true"));

    let json = rwp(&["refute-fi", "--afsa", &path, "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&json)).expect("valid json");
    assert_eq!(value["kind"], "accepted-invalid-pair");
    assert_eq!(value["verified"], true);
    assert_eq!(value["n"], 2);
    assert!(value["i"].as_u64().expect("i present") >= 1);

    // identical invocations produce byte-identical output
    let again = rwp(&["refute-fi", "--afsa", &path, "--format", "json"]);
    assert_eq!(stdout(&json), stdout(&again));
}

#[test]
fn refute_fi_reports_rejected_valid_pairs() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("diagonal.afsa");
    let diagonal = "\
alphabet: x X
states: q0
start: q0
final: q0
trans: q0 x x q0
trans: q0 X X q0
";
    fs::write(&path, diagonal).expect("writable temp dir");
    let out = rwp(&["refute-fi", "--afsa", &path.display().to_string()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("kind: rejected-valid-pair"));
    assert!(text.contains("u: xxXXxx"));
    assert!(text.contains("v: xx"));
    assert!(text.contains("verified: true"));
}

#[test]
fn classify_reports_type_data() {
    let out = rwp(&["classify", "5; 1->2, 3->4, 4->5, 5->3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("index: 2"));
    assert!(text.contains("period: 3"));
    assert!(text.contains("closure-size: 7"));
    assert!(text.contains("kernel-matches-canonical-model: yes"));

    let link2 = rwp(&["classify", "2; 1->2"]);
    assert!(stdout(&link2).contains("closure-size: 5"));

    // the one-point cycle, i.e. the identity on one point
    let trivial = rwp(&["classify", "1; 1->1"]);
    let text = stdout(&trivial);
    assert!(text.contains("index: 1"));
    assert!(text.contains("period: 1"));
    assert!(text.contains("closure-size: 1"));
    assert!(text.contains("kernel-matches-canonical-model: yes"));

    let capped = rwp(&["classify", "5; 1->2, 3->4, 4->5, 5->3", "--cap", "3"]);
    assert_eq!(code(&capped), 0);
    assert!(stdout(&capped).contains("exceeds cap 3"));

    let garbage = rwp(&["classify", "5; 1->2, 1->3"]);
    assert_eq!(code(&garbage), 2);
}

#[test]
fn export_dot_draws_the_automaton() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = write_universal(dir.path());
    let out = rwp(&["export-dot", "--afsa", &path]);
    assert_eq!(code(&out), 0);
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph afsa {"));
    assert!(dot.contains("\"q\" [shape=doublecircle];"));
    assert!(dot.contains("label=\"x|-\""));
}

#[test]
fn model_files_work_end_to_end() {
    let dir = tempfile::tempdir().expect("temp dir");
    let path = dir.path().join("c2.model");
    fs::write(
        &path,
        "model: finite\nelements: e g\nrow: e g\nrow: g e\ngen: g -> g\n",
    )
    .expect("writable temp dir");
    let model = path.display().to_string();

    let out = rwp(&["eval", "--model", &model, "--word", "ggg"]);
    assert_eq!(stdout(&out), "g\n");

    let check = rwp(&["wp-check", "--model", &model, "g", "ggg"]);
    assert_eq!(code(&check), 0);
}
