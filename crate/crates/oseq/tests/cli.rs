//! End-to-end CLI tests: exit codes, output snapshots, and byte-identical
//! reruns for fixed inputs and seeds.

use std::path::PathBuf;
use std::process::{Command, Output};

fn oseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_oseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf8 output")
}

#[test]
fn level_exit_codes_follow_the_verdict() {
    let not_level = oseq(&["level", "1,3,6,10,15,21,18,17,17"]);
    assert_eq!(not_level.status.code(), Some(10));
    assert!(stdout(&not_level).contains("\"kind\": \"SmallPlateau2dPlus3\""));

    let unknown = oseq(&["level", "1,3,6,10,8,7"]);
    assert_eq!(unknown.status.code(), Some(0));
    assert!(stdout(&unknown).contains("\"status\": \"unknown\""));

    let invalid = oseq(&["level", "1,3,7"]);
    assert_eq!(invalid.status.code(), Some(2));
    assert!(stdout(&invalid).contains("\"status\": \"invalid\""));
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["level", "1,3,6,10,15,20,18,17,18"],
        vec!["betti", "1,3,6,10,8,7", "--n", "3"],
        vec!["shape", "1,3,6,10,15,14,14"],
        vec!["expand", "17", "7"],
        vec!["bound", "1,3,6,3,1"],
    ] {
        let first = oseq(&args);
        let second = oseq(&args);
        assert_eq!(first.stdout, second.stdout, "args: {args:?}");
        assert_eq!(first.status.code(), second.status.code());
    }
}

#[test]
fn betti_text_contains_diagram_rows() {
    let output = oseq(&["betti", "1,3,6,10,8,7", "--n", "3", "--format", "text"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("3: 7 9 3"), "got:\n{text}");
    assert!(text.contains("4: 2 4 2"));
}

#[test]
fn construct_commands_print_sequences() {
    let output = oseq(&["construct", "iarrobino", "--base", "1,3,5,7,9,11,13", "--r", "3"]);
    assert_eq!(stdout(&output), "1,3,6,10,15,14,14\n");

    let output = oseq(&["construct", "plateau", "--d", "5", "--k", "4"]);
    assert_eq!(stdout(&output), "1,3,6,10,15,14,14\n");

    let output = oseq(&["construct", "plateau", "--d", "4", "--k", "4"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn validate_reports_the_failing_degree() {
    let output = oseq(&["validate", "1,3,7"]);
    assert_eq!(output.status.code(), Some(2));
    let text = stdout(&output);
    assert!(text.contains("\"degree\": 1"));
    assert!(text.contains("\"bound\": 6"));

    let output = oseq(&["validate", "1,3,6,10,8,7"]);
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn gin_betti_respects_the_bound_and_the_override() {
    let refused = oseq(&["gin-betti", "1,3,6,10,8,7", "--n", "3", "--d", "4"]);
    assert_eq!(refused.status.code(), Some(2));

    let allowed = oseq(&["gin-betti", "1,3,6,10,8,7", "--n", "3", "--d", "4", "--r1", "3"]);
    assert_eq!(allowed.status.code(), Some(0));
    let text = stdout(&allowed);
    assert!(text.contains("\"row\": ["), "got:\n{text}");
    // (h_4 - h_5) * (1, 2, 1) = (1, 2, 1)
    assert!(text.contains("1,\n    2,\n    1"), "got:\n{text}");
}

fn fixture_path(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("oseq-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn oracle_round_trip_on_a_complete_intersection() {
    let path = fixture_path("ci.json");
    std::fs::write(
        &path,
        r#"{"n": 3, "generators": [[[1, 1, [2, 0, 0]]], [[1, 1, [0, 2, 0]]], [[1, 1, [0, 0, 2]]]]}"#,
    )
    .unwrap();
    let path = path.to_str().unwrap();

    let hilbert = oseq(&["oracle", "hilbert", "--ideal", path]);
    assert_eq!(hilbert.status.code(), Some(0));
    assert!(stdout(&hilbert).contains("\"socle_degree\": 3"));

    let r1 = oseq(&["oracle", "r1", "--ideal", path, "--seed", "9"]);
    assert!(stdout(&r1).contains("\"r1\": 1"));

    let first = oseq(&["oracle", "gin", "--ideal", path, "--seed", "4"]);
    let second = oseq(&["oracle", "gin", "--ideal", path, "--seed", "4"]);
    assert_eq!(first.stdout, second.stdout);

    let cancel = oseq(&["oracle", "cancel", "--ideal", path, "--seed", "4"]);
    assert_eq!(cancel.status.code(), Some(0));
    assert!(stdout(&cancel).contains("\"chain_holds\": true"));
}

#[test]
fn oracle_rejects_non_artinian_input() {
    let path = fixture_path("plane.json");
    std::fs::write(&path, r#"{"n": 3, "generators": [[[1, 1, [1, 0, 0]]]]}"#).unwrap();
    let output = oseq(&[
        "oracle",
        "hilbert",
        "--ideal",
        path.to_str().unwrap(),
        "--max-degree",
        "8",
    ]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn sweep_is_deterministic_and_sorted() {
    // parallel and single-threaded runs must produce the same bytes
    let out_a = fixture_path("sweep_a.csv");
    let out_b = fixture_path("sweep_b.csv");
    for (out, threads) in [(&out_a, None), (&out_b, Some("1"))] {
        let mut command = Command::new(env!("CARGO_BIN_EXE_oseq"));
        command.args([
            "sweep",
            "--codim",
            "3",
            "--socle-degree",
            "4",
            "--out",
            out.to_str().unwrap(),
        ]);
        if let Some(threads) = threads {
            command.env("RAYON_NUM_THREADS", threads);
        }
        let output = command.output().expect("binary runs");
        assert_eq!(output.status.code(), Some(0));
    }
    let a = std::fs::read(&out_a).unwrap();
    let b = std::fs::read(&out_b).unwrap();
    assert_eq!(a, b);

    let text = String::from_utf8(a).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("sequence,status,certificates,witness_degrees")
    );
    // the Gorenstein staircase is classified Unknown
    assert!(text.contains("\"1,3,6,3,1\",unknown,,")
        || text.contains("1,3,6,3,1,unknown,,"));
    // small plateaus are flagged
    assert!(text.contains("GHMSSmallPlateau"));
}

#[test]
fn level_text_format_cites_the_theorem() {
    let output = oseq(&["level", "1,3,6,10,15,21,18,17,17", "--format", "text"]);
    assert_eq!(output.status.code(), Some(10));
    let text = stdout(&output);
    assert!(text.starts_with("status: not_level"));
    assert!(text.contains("SmallPlateau2dPlus3 at d = 7"));
    assert!(text.contains("[codimension-3 plateau bound h_d <= 2d+3]"));
}

#[test]
fn wlp_output_names_the_clause() {
    let output = oseq(&["wlp", "1,3,6,10,8,7", "--n", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("\"clause\": \"StrictGrowthFactorExceeded\""));
    assert!(text.contains("\"d\": 4"));
}

#[test]
fn lex_gens_listing() {
    let output = oseq(&["lex", "1,3,6,10,8,7", "--n", "3", "--gens"]);
    let text = stdout(&output);
    assert!(text.starts_with("4: "));
    assert_eq!(text.lines().count(), 3);

    let json = oseq(&["lex", "1,3,6,10,8,7", "--n", "3"]);
    assert!(stdout(&json).contains("\"4\": ["));
}
