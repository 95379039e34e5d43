//! End-to-end tests driving the compiled binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_semiring-lab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_tmp(name: &str, content: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

const Z4: &str = "semiring
order 4
elements 0 1 2 3
zero 0
one 1
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
";

const Z4_SWAPPED: &str = "semiring
order 4
elements 0 1 2 3
zero 0
one 1
add
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
mul
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
";

#[test]
fn validate_accepts_valid_semiring() {
    let path = write_tmp("z4.sr", Z4);
    let out = run(&["validate", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("semiring_axioms: true"));
}

#[test]
fn validate_rejects_swapped_tables_with_axiom_listed() {
    let path = write_tmp("z4_swapped.sr", Z4_SWAPPED);
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("zero_absorbing"));
}

#[test]
fn parse_error_reports_line_number() {
    let broken = Z4.replace("0 1 2 3\n1 2 3 0", "0 1 2 3\n1 2 3");
    let path = write_tmp("broken.sr", &broken);
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 8"), "stderr: {}", stderr(&out));
}

#[test]
fn analyze_example_11_matches_manifest() {
    let out = run(&["analyze", "--example", "1.1"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("commutative: false (matches manifest)"));
    assert!(text.contains("centrally_essential: true (matches manifest)"));
    assert!(text.contains("center_matches_listed: true (matches manifest)"));
}

#[test]
fn analyze_example_fq8() {
    let out = run(&["analyze", "--example", "fq8"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("centrally_essential: true (matches manifest)"));
    assert!(text.contains("nonzero_nilpotents: true (matches manifest)"));
}

#[test]
fn analyze_selected_properties_on_file() {
    let path = write_tmp("z4_props.sr", Z4);
    let out = run(&["analyze", path.to_str().unwrap(), "--properties", "semiprime,reduced"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("semiprime: false"));
    assert!(text.contains("reduced: false"));
}

#[test]
fn analyze_unknown_property_is_usage_error() {
    let path = write_tmp("z4_unknown.sr", Z4);
    let out = run(&["analyze", path.to_str().unwrap(), "--properties", "frobnicating"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn group_q8_classes_match() {
    let out = run(&["group", "q8", "--action", "classes"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for class in ["{e}", "{a, a^3}", "{a^2}", "{b, a^2b}", "{ab, a^3b}"] {
        assert!(text.contains(class), "missing {class} in {text}");
    }
}

#[test]
fn group_q8_prop31_prints_identities() {
    let out = run(&["group", "q8", "--action", "prop31", "--coeff", "qplus"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("centrally_essential: true"));
    assert!(text.contains("a*sum(C(G)) = a + a^3"));
    assert!(text.contains("a^3b*sum(C(G)) = ab + a^3b"));
}

#[test]
fn group_d16_prop31_reports_no_conclusion() {
    let out = run(&["group", "d16", "--action", "prop31", "--coeff", "qplus"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("hypotheses not met (class 3)"));
    assert!(text.contains("no conclusion at this scale"));
}

#[test]
fn search_order_2_census() {
    let out = run(&["search", "--order", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("records: 2"));
}

#[test]
fn search_open_question_probe_is_empty_with_note() {
    let out = run(&[
        "search",
        "--order",
        "4",
        "--require",
        "centrally_essential,semisubtractive",
        "--forbid",
        "commutative,nonzero_nilpotents",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("records: 0"));
    assert!(text.contains("no conclusion at this scale"));
}

#[test]
fn search_cap_truncates_with_resource_exit() {
    let out = run(&["search", "--order", "3", "--cap", "1"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("truncated: resume with --resume"));
}

#[test]
fn verify_round_trip_and_tampering() {
    let path = write_tmp("z4_verify.sr", Z4);
    let out = run(&[
        "analyze",
        path.to_str().unwrap(),
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    let report_path = write_tmp("z4_report.json", &stdout(&out));
    let verified = run(&["verify", report_path.to_str().unwrap()]);
    assert!(verified.status.success(), "{}", stdout(&verified));
    assert!(stdout(&verified).contains("verified"));

    // tamper with a witness: point the nilpotent-ideal generator at 1
    let tampered = stdout(&out).replace("\"generator\": \"2\"", "\"generator\": \"1\"");
    assert_ne!(tampered, stdout(&out));
    let bad_path = write_tmp("z4_tampered.json", &tampered);
    let failed = run(&["verify", bad_path.to_str().unwrap()]);
    assert_eq!(failed.status.code(), Some(1));
    assert!(stdout(&failed).contains("FAILED semiprime"));
}

#[test]
fn verify_missing_subject_file_errors() {
    let path = write_tmp("gone.sr", Z4);
    let out = run(&["analyze", path.to_str().unwrap(), "--format", "structured"]);
    let mut report: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    report["subject"]["path"] = serde_json::Value::String("/nonexistent/file.sr".into());
    let report_path = write_tmp("missing_subject.json", &report.to_string());
    let failed = run(&["verify", report_path.to_str().unwrap()]);
    assert_eq!(failed.status.code(), Some(2));
}

#[test]
fn verify_group_report_round_trip() {
    let out = run(&["group", "q8", "--action", "prop31", "--format", "structured"]);
    assert!(out.status.success());
    let report_path = write_tmp("q8_prop31.json", &stdout(&out));
    let verified = run(&["verify", report_path.to_str().unwrap()]);
    assert!(verified.status.success(), "{}", stdout(&verified));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    for args in [
        vec!["analyze", "--example", "3.2", "--format", "structured", "--trials", "300"],
        vec!["search", "--order", "3", "--format", "structured"],
        vec!["group", "q8", "--action", "series", "--format", "structured"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success());
        assert_eq!(stdout(&first), stdout(&second), "nondeterministic output for {args:?}");
    }
}

#[test]
fn magma_file_with_generators_validates() {
    let magma = "magma
order 5
elements 0 1 a b c
zero 0
one 1
table
0 0 0 0 0
0 1 a b c
0 a a a c
0 b b b c
0 c c c c
generators 0 1 a b c
";
    let path = write_tmp("base.magma", magma);
    let out = run(&["validate", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("associative: true"));
}

#[test]
fn magma_with_non_generating_set_is_flagged() {
    let magma = "magma
order 3
elements 0 e x
zero 0
one e
table
0 0 0
0 e x
0 x x
generators x
";
    let path = write_tmp("nongen.magma", magma);
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("generators_generate: false"));
}
