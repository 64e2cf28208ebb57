//! End-to-end tests of the command-line binary: exit codes, output
//! contents, file formats, and determinism across runs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_fusionkit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

fn temp_path(name: &str) -> PathBuf {
    let mut path = std::env::temp_dir();
    path.push(format!("fusionkit-test-{}-{name}", std::process::id()));
    path
}

#[test]
fn admissible_pair_check_exits_zero_with_certificates() {
    let output = run(&["pair", "check", "S3", "--subgroup", "(12)"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("admissible: yes"), "{text}");
    assert!(text.contains("certificates:"), "{text}");
}

#[test]
fn refused_pair_check_exits_one_with_a_witness() {
    let output = run(&["pair", "check", "S3", "--subgroup", "(123)"]);
    assert_eq!(output.status.code(), Some(1));
    let text = stdout(&output);
    assert!(text.contains("admissible: no"), "{text}");
    assert!(text.contains("witness:"), "{text}");
    assert!(text.contains("(bullet * bullet) * bullet: FAIL"), "{text}");
}

#[test]
fn usage_errors_exit_two() {
    let output = run(&["pair", "check", "Q8", "--subgroup", "x"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["definitely-not-a-command"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn fuse_prints_the_expected_equations_for_z2_over_trivial() {
    let output = run(&["pair", "fuse", "Z2"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("ρ0 ρ0 = γ0 + γ1"), "{text}");
    assert!(text.contains("γ1 ρ0 = ρ0"), "{text}");
}

#[test]
fn fuse_write_then_equations_and_normalize_round_trip() {
    let alg_path = temp_path("z3.fkalg.json");
    let output = run(&["pair", "fuse", "Z3", "-o", alg_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));

    let output = run(&["algebra", "equations", alg_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("ρ0 ρ0 = γ0 + γ1 + γ2"));

    let output = run(&["algebra", "normalize", alg_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("\"schema\": \"fusionkit/1\""), "{text}");
    assert!(text.contains("\"kind\": \"hypergroup\""), "{text}");

    std::fs::remove_file(&alg_path).ok();
}

#[test]
fn join_adjoins_an_order_two_element_to_a_serialized_algebra() {
    // The pair algebra of Z2 over itself has four basis elements, all of
    // dimension one, so the join precondition holds and Y1 Y1 expands into
    // the full basis sum.
    let alg_path = temp_path("z2-self.fkalg.json");
    let output = run(&["pair", "fuse", "Z2", "--subgroup", "1", "-o", alg_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let output = run(&["algebra", "join", alg_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("Y1 Y1 ="), "{}", stdout(&output));
    std::fs::remove_file(&alg_path).ok();
}

#[test]
fn diagram_output_is_dot_and_deterministic() {
    let first = run(&["diagram", "S4", "--subgroup", "(12)"]);
    assert_eq!(first.status.code(), Some(0));
    let second = run(&["diagram", "S4", "--subgroup", "(12)"]);
    let a = stdout(&first);
    assert_eq!(a, stdout(&second), "diagram output must be byte-stable");
    assert!(a.starts_with("graph frobenius {"), "{a}");
    assert!(a.contains("style=filled"), "{a}");
    assert!(a.contains("[label=\"2\"]"), "double edge must be labelled: {a}");
}

#[test]
fn group_export_and_table_from_file() {
    let group_path = temp_path("s3.fkgroup.json");
    let cayley_path = temp_path("s3.cayley.txt");
    let output = run(&[
        "group",
        "S3",
        "-o",
        group_path.to_str().unwrap(),
        "--cayley-out",
        cayley_path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("order 6"));

    let output = run(&["table", group_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("chi2 [deg 2]"), "{text}");
    assert!(text.contains("classes:"), "{text}");

    // The plain-text Cayley table reimports to the same group.
    let output = run(&["group", "--from-cayley", cayley_path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("order 6"));

    std::fs::remove_file(&group_path).ok();
    std::fs::remove_file(&cayley_path).ok();
}

#[test]
fn table_output_is_byte_stable_across_runs() {
    let a = run(&["table", "--spec", "S4"]);
    let b = run(&["table", "--spec", "S4"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn fixtures_run_reports_all_passing() {
    let output = run(&["fixtures", "run"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("total: 10/10 fixtures passed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn corrupt_algebra_file_exits_two() {
    let path = temp_path("corrupt.fkalg.json");
    std::fs::write(&path, "{\"schema\": \"fusionkit/1\", \"kind\": \"algebra\", oops").unwrap();
    let output = run(&["algebra", "equations", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    std::fs::remove_file(&path).ok();
}

#[test]
fn tolerance_flags_are_accepted() {
    let output = run(&["--eps-eq", "1e-7", "--eps-int", "1e-5", "pair", "check", "Z4", "--subgroup", "2"]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("admissible: yes"));
}
