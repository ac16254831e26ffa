//! End-to-end checks of the compiled binary: exit codes, output
//! determinism and the stability of the JSON schema.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polymap")).args(args).output().expect("binary runs")
}

fn run_on(file: &str, args: &[&str]) -> Output {
    let path = fixture(file);
    let mut all = vec![args[0], path.to_str().unwrap()];
    all.extend_from_slice(&args[1..]);
    run(&all)
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn analyze_succeeds_with_exit_zero() {
    let out = run_on("hyperbola.poly", &["analyze"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("d(F):           1"));
    assert!(text.contains("delta0:         1"));
    assert!(text.contains("non-proper at 0"));
}

#[test]
fn uncertified_maps_exit_two_with_a_diagnostic() {
    let out = run_on("uncertified.poly", &["analyze"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout_of(&out).contains("hypothesis not certified"));
    assert!(stderr_of(&out).contains("hypothesis not certified"));
}

#[test]
fn parse_and_io_errors_exit_one() {
    let out = run_on("bad_syntax.poly", &["analyze"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("error:"));

    let out = run(&["analyze", "/nonexistent/nowhere.poly"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("error:"));

    let out = run_on("forms_inhomogeneous.poly", &["resultant"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("not homogeneous"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let a = run_on("squares.poly", &["analyze", "--format", "json", "--seed", "9"]);
    let b = run_on("squares.poly", &["analyze", "--format", "json", "--seed", "9"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout, "same file and config must give identical bytes");
}

#[test]
fn json_schema_is_stable() {
    let out = run_on("squares.poly", &["analyze", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    let mut expected = vec![
        "degrees",
        "bezout",
        "d_of_F",
        "mu",
        "delta0",
        "thm11_exponent",
        "thm12_exponent",
        "kollar_exponent",
        "proper_at_0",
        "algebraically_dependent",
        "G_used",
        "certificate",
        "generic_w_draws",
    ];
    expected.sort_unstable();
    assert_eq!(keys, expected);
    // integers travel as exact decimal strings
    assert_eq!(v["d_of_F"], "4");
    assert_eq!(v["thm12_exponent"], "2");
    assert!(v["generic_w_draws"][0][0].is_string());
}

#[test]
fn resultant_command_end_to_end() {
    let out = run_on("forms_linear.poly", &["resultant"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("resultant:     -2"));

    let out = run_on("forms_common_zero.poly", &["resultant"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("resultant:     0"));

    let out = run_on("forms_axes.poly", &["resultant", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["resultant"], "1");
}

#[test]
fn pg_command_prints_the_slice() {
    let out = run_on("squares.poly", &["pg", "--w", "1,1"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("deg_T:    4"));

    let out = run_on("uncertified.poly", &["pg", "--w", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_passes_the_identity_map() {
    let out = run_on("identity.poly", &["verify", "--samples", "120"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("growth:      PASS"));
    assert!(text.contains("root growth: SKIPPED"));
    assert!(text.contains("overall:     PASS"));

    let a = run_on("identity.poly", &["verify", "--samples", "120", "--format", "json"]);
    let b = run_on("identity.poly", &["verify", "--samples", "120", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout, "verification output must be deterministic");
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&a)).unwrap();
    assert_eq!(v["overall"], "PASS");
    assert_eq!(v["root_growth"]["verdict"], "SKIPPED");
}

#[test]
fn help_and_bad_flags_behave() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));

    let out = run(&["analyze"]); // missing file argument
    assert_eq!(out.status.code(), Some(1));
}
