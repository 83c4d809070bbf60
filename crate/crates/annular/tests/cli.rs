//! End-to-end tests of the `annular` binary: output formats, exit codes,
//! and byte-for-byte determinism.

use std::process::{Command, Output};

fn annular(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_annular"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn exit_code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

#[test]
fn poly_cat_one_one() {
    let out = annular(&["poly", "--which", "cat", "--n", "1", "--m", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "(1 + q)/2\n{\"coeffs\":[[\"1\",\"2\"],[\"1\",\"2\"]]}\n"
    );
}

#[test]
fn poly_evaluations() {
    let out = annular(&[
        "poly",
        "--which",
        "cat",
        "--n",
        "2",
        "--m",
        "2",
        "--at-root",
        "2",
        "--at-one",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("at q = zeta_2^1: 2"));
    assert!(text.contains("at q = 1: 18"));
}

#[test]
fn poly_out_of_range_is_zero() {
    let out = annular(&[
        "poly", "--which", "nara3", "--n", "2", "--m", "2", "--c", "3",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "0\n{\"coeffs\":[]}\n");
}

#[test]
fn poly_kre_full_profile() {
    let out = annular(&[
        "poly", "--which", "kre", "--n", "1", "--m", "1", "--alpha", "()", "--beta", "()", "--lam",
        "(1)", "--mu", "(1)",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("(1 + q)/2\n"));
}

#[test]
fn poly_inconsistent_profile_exits_two() {
    // lam claims weight 2 on an n = 1 exterior circle
    let out = annular(&[
        "poly", "--which", "kre", "--n", "1", "--m", "1", "--alpha", "()", "--beta", "()", "--lam",
        "(2)", "--mu", "(1)",
    ]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("exterior weights"), "stderr: {err}");
}

#[test]
fn poly_contradicting_flag_exits_two() {
    let out = annular(&[
        "poly", "--which", "kre", "--n", "1", "--m", "1", "--alpha", "()", "--beta", "()", "--lam",
        "(1)", "--mu", "(1)", "--c", "2",
    ]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn count_totals_and_check() {
    let out = annular(&["count", "--n", "2", "--m", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "18\n");

    let out = annular(&["count", "--n", "2", "--m", "2", "--c", "2", "--check"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "2 (enumeration: 2, OK)\n");

    let out = annular(&["count", "--n", "1", "--m", "1", "--type-b"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "2\n");

    let out = annular(&["count", "--n", "1", "--m", "1", "--type-b", "--check"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "2 (enumeration: 2, OK)\n");
}

#[test]
fn poly_disc_kinds() {
    let out = annular(&["poly", "--which", "cat-disc", "--n", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("1 + q^2 + q^3 + q^4 + q^6\n"));

    let out = annular(&["poly", "--which", "bessis-reiner", "--lam", "(2,1)"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("1 + q + q^2\n"));

    let out = annular(&[
        "poly",
        "--which",
        "nara-disc",
        "--n",
        "4",
        "--k",
        "2",
        "--at-one",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("at q = 1: 6"));

    let out = annular(&["poly", "--which", "kre-disc", "--lam", "(1,1,1)"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).starts_with("1\n"));
}

#[test]
fn count_full_profile_granularity() {
    let out = annular(&[
        "count", "--n", "2", "--m", "2", "--alpha", "()", "--beta", "()", "--lam", "(1,1)", "--mu",
        "(1,1)", "--check",
    ]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "2 (enumeration: 2, OK)\n");
}

#[test]
fn count_incomplete_granularity_exits_two() {
    let out = annular(&["count", "--n", "2", "--m", "2", "--r", "1"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn enum_examples() {
    let out = annular(&["enum", "--n", "2", "--m", "2", "--c", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "(1,3)(2,4)\n(1,4)(2,3)\n");

    let out = annular(&["enum", "--n", "1", "--m", "1"]);
    assert_eq!(stdout(&out), "(1,2)\n");

    // parity makes this empty, but it is not an error
    let out = annular(&["enum", "--n", "2", "--m", "1", "--matchings"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "");
}

#[test]
fn enum_json_lines_parse() {
    let out = annular(&[
        "enum", "--n", "2", "--m", "2", "--c", "2", "--format", "json",
    ]);
    assert_eq!(exit_code(&out), 0);
    for line in stdout(&out).lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        assert_eq!(value["n"], 2);
        assert_eq!(value["m"], 2);
    }
}

#[test]
fn enum_fixed_by_filters() {
    let out = annular(&["enum", "--n", "2", "--m", "2", "--fixed-by", "2"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "(1,3)(2,4)\n(1,4)(2,3)\n");

    // order 3 divides neither circle: empty output, success
    let out = annular(&["enum", "--n", "2", "--m", "2", "--fixed-by", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "");
}

#[test]
fn enum_output_is_independent_of_worker_count() {
    let args = ["enum", "--n", "3", "--m", "3"];
    let parallel = annular(&args);
    let single = Command::new(env!("CARGO_BIN_EXE_annular"))
        .args(args)
        .env("ANNULAR_THREADS", "1")
        .output()
        .expect("binary runs");
    assert_eq!(exit_code(&parallel), 0);
    assert_eq!(exit_code(&single), 0);
    assert_eq!(parallel.stdout, single.stdout);
    assert!(!parallel.stdout.is_empty());
}

#[test]
fn enum_bound_violation_exits_two() {
    let out = annular(&["enum", "--n", "6", "--m", "6"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_small_sweep_passes_and_is_deterministic() {
    let args = ["verify", "--suite", "csp", "--max-total", "4"];
    let first = annular(&args);
    assert_eq!(exit_code(&first), 0);
    let second = annular(&args);
    assert_eq!(first.stdout, second.stdout);

    let text = stdout(&first);
    let mut summaries = 0;
    for line in text.lines() {
        let value: serde_json::Value = serde_json::from_str(line).expect("valid JSON");
        if value.get("ranges").is_some() {
            summaries += 1;
            assert_eq!(value["ok"], true);
        }
    }
    // one summary per sub-suite (csp + unequal-orders)
    assert_eq!(summaries, 2);
}

#[test]
fn verify_rejects_oversized_bounds() {
    let out = annular(&["verify", "--suite", "counts", "--max-total", "40"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_unknown_suite_exits_two() {
    let out = annular(&["verify", "--suite", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn render_is_deterministic() {
    let dir = std::env::temp_dir();
    let path_a = dir.join("annular_cli_render_a.svg");
    let path_b = dir.join("annular_cli_render_b.svg");
    let perm = "(1,2,3,6,15,10,11)(4,5)(7,8,9,13,14)(12)";
    for path in [&path_a, &path_b] {
        let out = annular(&[
            "render",
            "--n",
            "9",
            "--m",
            "6",
            "--perm",
            perm,
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(exit_code(&out), 0);
    }
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let svg = String::from_utf8(a).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<text").count(), 15);
}

#[test]
fn render_warns_on_disconnected_input() {
    let dir = std::env::temp_dir();
    let path = dir.join("annular_cli_render_warn.svg");
    let out = annular(&[
        "render",
        "--n",
        "2",
        "--m",
        "2",
        "--perm",
        "(1,2)",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("warning"), "stderr: {err}");

    // --force silences the warning
    let out = annular(&[
        "render",
        "--n",
        "2",
        "--m",
        "2",
        "--perm",
        "(1,2)",
        "--force",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    assert!(out.stderr.is_empty());
}

#[test]
fn render_malformed_cycles_exit_two() {
    let out = annular(&[
        "render",
        "--n",
        "2",
        "--m",
        "1",
        "--perm",
        "(1,2",
        "-o",
        "/tmp/x.svg",
    ]);
    assert_eq!(exit_code(&out), 2);
}
