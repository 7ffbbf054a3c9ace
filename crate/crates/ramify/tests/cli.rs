//! End-to-end checks of the command-line interface, including byte-stable
//! JSON golden files for both worked towers.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramify"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn temp_document(name: &str, contents: &str) -> PathBuf {
    let path = std::env::temp_dir().join(name);
    std::fs::write(&path, contents).expect("temp document is writable");
    path
}

#[test]
fn from_witt_p5_json_matches_the_golden_file() {
    let out = run(&[
        "tower",
        "from-witt",
        "--p",
        "5",
        "--vector",
        "x, 0, 0",
        "--json",
        "--galois-check",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), include_str!("golden/tower_p5.json"));
}

#[test]
fn from_witt_p2_json_matches_the_golden_file() {
    let out = run(&[
        "tower",
        "from-witt",
        "--p",
        "2",
        "--vector",
        "x, 0, 0",
        "--json",
        "--galois-check",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), include_str!("golden/tower_p2.json"));
}

#[test]
fn analyze_reads_a_witt_document_and_agrees_with_from_witt() {
    let path = temp_document(
        "ramify_witt_p2.json",
        r#"{"p": 2, "witt": ["x", "0", "0"], "galois_check": true}"#,
    );
    let out = run(&["tower", "analyze", path.to_str().unwrap(), "--json"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), include_str!("golden/tower_p2.json"));
    std::fs::remove_file(path).ok();
}

#[test]
fn analyze_reads_a_levels_document() {
    let path = golden("input_p3_levels.json");
    let out = run(&["tower", "analyze", path.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("f2^3 - f2 = x*f1^2"), "{text}");
    assert!(text.contains("    F_2   -9    -3    -5"), "{text}");
    assert!(text.contains("Lower jumps: 1, 5"), "{text}");
    assert!(text.contains("Upper jumps: 1, 7/3"), "{text}");
    assert!(text.contains("Hasse-Arf:   fails"), "{text}");
    assert!(text.contains("Structural:  level 2: fail"), "{text}");
}

#[test]
fn text_is_the_default_output() {
    let out = run(&["tower", "from-witt", "--p", "2", "--vector", "x, 0, 0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("Defining equations"), "{text}");
    assert!(text.contains("  f3^2 - f3 = x^2*f2 + x^2*f1 + x*f1*f2 + x^2 + x*f2 + x*f1"), "{text}");
    assert!(text.contains("Lower jumps: 1, 3, 11"), "{text}");
    assert!(text.contains("Upper jumps: 1, 2, 4"), "{text}");
    assert!(text.contains("Hasse-Arf:   holds"), "{text}");
    assert!(!text.starts_with('{'), "text mode must not emit JSON: {text}");
}

#[test]
fn lucas_binom_prints_one_residue() {
    let out = run(&["lucas", "binom", "--p", "5", "--m", "-3", "--n", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");

    let out = run(&["lucas", "binom", "--p", "7", "--m", "10", "--n", "3"]);
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn lucas_index_prints_index_and_value() {
    let out = run(&["lucas", "index", "--p", "5", "--m", "50"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "index: 25\nvalue: 2\n");

    let out = run(&["lucas", "index", "--p", "2", "--m", "-11"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "index: 1\nvalue: 1\n");
}

#[test]
fn witt_polys_prints_the_addition_laws() {
    let out = run(&["witt", "polys", "--p", "3", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "S_0 = X0 + Y0\nS_1 = X1 + Y1 - X0^2*Y0 - X0*Y0^2\n"
    );
}

#[test]
fn galois_check_reports_images_and_jumps() {
    let out = run(&["galois", "check", "--p", "2", "--vector", "x, 0, 0", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        doc["generator_images"],
        serde_json::json!([
            "sigma(f1) = f1 + 1",
            "sigma(f2) = f2 + f1",
            "sigma(f3) = f3 + f1*f2 + x"
        ])
    );
    assert_eq!(doc["jumps_from_action"], serde_json::json!([1, 3, 11]));
    assert_eq!(doc["lower_jumps"], serde_json::json!([1, 3, 11]));
    assert_eq!(doc["relations_preserved"], serde_json::json!(true));
}

#[test]
fn invalid_inputs_exit_with_code_two() {
    let out = run(&["tower", "from-witt", "--p", "2", "--vector", "x^2, 0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not ramified"), "{}", stderr(&out));

    let out = run(&["tower", "from-witt", "--p", "4", "--vector", "x"]);
    assert_eq!(out.status.code(), Some(2), "4 is not prime");

    let out = run(&["lucas", "binom", "--p", "5", "--m", "3", "--n", "2"]);
    assert_eq!(stdout(&out), "3\n");
    let out = run(&["witt", "polys", "--p", "5", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2), "vector length is capped at 4");
}

#[test]
fn analyze_rejects_malformed_documents() {
    let both = temp_document(
        "ramify_both_sources.json",
        r#"{"p": 3, "witt": ["x"], "levels": ["x"]}"#,
    );
    let out = run(&["tower", "analyze", both.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exactly one"), "{}", stderr(&out));
    std::fs::remove_file(both).ok();

    let galois = temp_document(
        "ramify_levels_galois.json",
        r#"{"p": 3, "levels": ["x"], "galois_check": true}"#,
    );
    let out = run(&["tower", "analyze", galois.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("only available for towers built from a Witt vector"),
        "{}",
        stderr(&out)
    );
    std::fs::remove_file(galois).ok();

    let junk = temp_document("ramify_junk.json", "not json");
    let out = run(&["tower", "analyze", junk.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed input document"), "{}", stderr(&out));
    std::fs::remove_file(junk).ok();

    let out = run(&["tower", "analyze", "/nonexistent/ramify_missing.json"]);
    assert_eq!(out.status.code(), Some(2));
}
