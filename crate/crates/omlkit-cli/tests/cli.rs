//! End-to-end tests of the compiled binary: exit codes, report shapes, and
//! byte stability of the JSON output.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn omlkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(args)
        .env_remove("OMLKIT_MOORE_SCAN_MAX_N")
        .env_remove("OMLKIT_CENTER_SCAN_MAX_SUBSETS")
        .output()
        .expect("binary runs")
}

fn omlkit_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(args)
        .env_remove("OMLKIT_MOORE_SCAN_MAX_N")
        .env_remove("OMLKIT_CENTER_SCAN_MAX_SUBSETS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const O6: &str =
    r#"{"name":"O6","n":6,"covers":[[0,1],[1,2],[2,5],[0,3],[3,4],[4,5]],"ortho":[5,4,3,2,1,0]}"#;

#[test]
fn catalog_output_feeds_back_into_validate() {
    let cat = omlkit(&["catalog", "MO", "2"]);
    assert_eq!(code(&cat), 0);
    let json = stdout_json(&cat);
    assert_eq!(json["name"], "MO2");
    assert_eq!(json["n"], 6);

    let fused = omlkit(&["catalog", "mo2"]);
    assert_eq!(
        cat.stdout, fused.stdout,
        "split and fused spellings print the same bytes"
    );

    let text = String::from_utf8(cat.stdout).unwrap();
    let validated = omlkit_stdin(&["validate", "-", "--format", "json"], &text);
    assert_eq!(code(&validated), 0);
    assert_eq!(stdout_json(&validated)["result"]["passed"], true);
}

#[test]
fn validate_reports_the_orthomodular_witness_of_the_hexagon() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o6.json");
    std::fs::write(&path, O6).unwrap();

    let out = omlkit(&["validate", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code(&out), 1);
    let json = stdout_json(&out);
    assert_eq!(json["command"], "validate");
    assert_eq!(json["lattice"], "O6");
    assert_eq!(json["result"]["passed"], false);
    assert_eq!(json["result"]["violations"][0]["axiom_id"], "orthomodular");
    assert_eq!(
        json["result"]["violations"][0]["witnesses"],
        serde_json::json!([1, 2])
    );
}

#[test]
fn non_lattice_queries_refuse_the_hexagon() {
    let out = omlkit_stdin(&["center", "-"], O6);
    assert_eq!(code(&out), 2);
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("orthomodular"),
        "stderr names the failed axiom: {err}"
    );
}

#[test]
fn check_bvb_separates_closure_maps_from_the_rest() {
    let dir = tempfile::tempdir().unwrap();

    let identity = dir.path().join("identity.json");
    std::fs::write(&identity, r#"{"image":[0,1,2,3,4,5]}"#).unwrap();
    let out = omlkit(&[
        "check-bvb",
        identity.to_str().unwrap(),
        "--seed-catalog",
        "mo2",
    ]);
    assert_eq!(
        code(&out),
        1,
        "the identity is not join-compatible on a horizontal sum"
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("bvb-left-join"), "{text}");

    let cover = dir.path().join("cover.json");
    std::fs::write(&cover, r#"{"image":[0,1,10,11,10,11,10,11,10,11,10,11]}"#).unwrap();
    let out = omlkit(&[
        "check-bvb",
        cover.to_str().unwrap(),
        "--seed-catalog",
        "g12",
    ]);
    assert_eq!(code(&out), 0);

    let short = dir.path().join("short.json");
    std::fs::write(&short, r#"{"image":[0,1]}"#).unwrap();
    let out = omlkit(&[
        "check-bvb",
        short.to_str().unwrap(),
        "--seed-catalog",
        "mo2",
    ]);
    assert_eq!(code(&out), 2, "wrong image length is an input error");
}

#[test]
fn verify_correspondence_is_byte_stable() {
    let args = [
        "verify-correspondence",
        "--seed-catalog",
        "g12",
        "--format",
        "json",
    ];
    let first = omlkit(&args);
    let second = omlkit(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);

    let json = stdout_json(&first);
    assert_eq!(json["result"]["passed"], true);
    assert_eq!(json["result"]["subalgebra_count"], 2);
    assert_eq!(json["result"]["endo_count"], 2);
    assert_eq!(json["notes"][0], "G12 built as the product MO2 \u{d7} B1");
}

#[test]
fn enumerations_respect_the_configured_ceilings() {
    let out = omlkit(&["enumerate-bvb", "--seed-catalog", "g12", "--max-n", "4"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("needs 12, limit is 4"), "{err}");

    let out = Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args(["enumerate-bvb", "--seed-catalog", "g12"])
        .env("OMLKIT_MOORE_SCAN_MAX_N", "4")
        .env_remove("OMLKIT_CENTER_SCAN_MAX_SUBSETS")
        .output()
        .unwrap();
    assert_eq!(
        code(&out),
        2,
        "environment ceiling applies when no flag is given"
    );

    let out = Command::new(env!("CARGO_BIN_EXE_omlkit"))
        .args([
            "enumerate-bvb",
            "--seed-catalog",
            "g12",
            "--max-n",
            "16",
            "--format",
            "json",
        ])
        .env("OMLKIT_MOORE_SCAN_MAX_N", "4")
        .env_remove("OMLKIT_CENTER_SCAN_MAX_SUBSETS")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0, "the flag outranks the environment");
    assert_eq!(stdout_json(&out)["result"]["count"], 2);
}

#[test]
fn input_errors_exit_two_with_nothing_on_stdout() {
    let cases: &[&[&str]] = &[
        &["validate", "/nonexistent/lattice.json"],
        &["center", "--seed-catalog", "q8"],
        &["center"],
        &["cover", "99", "--seed-catalog", "mo2"],
        &["enumerate-bvb", "--seed-catalog", "mo2", "--max-n", "0"],
        &["catalog", "mo"],
    ];
    for args in cases {
        let out = omlkit(args);
        assert_eq!(code(&out), 2, "args {args:?}");
        assert!(out.stdout.is_empty(), "args {args:?} wrote to stdout");
        assert!(!out.stderr.is_empty(), "args {args:?} left stderr empty");
    }

    let out = omlkit_stdin(
        &["validate", "-"],
        r#"{"name":"X","n":1,"covers":[],"leq":[[1]],"ortho":[0]}"#,
    );
    assert_eq!(code(&out), 2, "both order encodings at once is malformed");
}

#[test]
fn center_and_cover_report_labeled_elements() {
    let out = omlkit(&["center", "--seed-catalog", "g12", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(json["result"]["members"], serde_json::json!([0, 1, 10, 11]));

    let out = omlkit(&["cover", "2", "--seed-catalog", "g12", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let json = stdout_json(&out);
    assert_eq!(
        json["result"],
        serde_json::json!({"element": 2, "cover": 10})
    );

    let text = omlkit(&["cover", "2", "--seed-catalog", "g12"]);
    let body = String::from_utf8(text.stdout).unwrap();
    assert!(
        body.contains("(a1,{})"),
        "labels appear in the text form: {body}"
    );
}
