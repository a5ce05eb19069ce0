//! End-to-end tests of the command-line binary: exit codes, output bytes,
//! bounds, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

const GOLDEN_EX_P2: &str = include_str!("../../core/tests/golden/ex_p2.dot");
const GOLDEN_EX_P3: &str = include_str!("../../core/tests/golden/ex_p3.dot");
const GOLDEN_MINOR_SCAN: &str = include_str!("../../core/tests/golden/minor_scan_rank4.json");

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_positroid-lab"));
    cmd.env_remove("POSITROID_LAB_MAX_N");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stdout).expect("stdout is UTF-8")
}

fn stderr_of(output: &Output) -> &str {
    std::str::from_utf8(&output.stderr).expect("stderr is UTF-8")
}

fn temp_file(name: &str, content: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("positroid-lab-test-{}-{name}", std::process::id()));
    std::fs::write(&path, content).expect("temp file is writable");
    path
}

#[test]
fn catalan_of_seven_prints_exact_json() {
    let out = run(&["catalan", "7"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "{\n  \"n\": 7,\n  \"catalan\": \"429\"\n}\n");
}

#[test]
fn enumeration_lists_the_five_rank_three_profiles() {
    let out = run(&["enumerate-uios", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["count"], 5);
    assert_eq!(
        v["profiles"],
        serde_json::json!([[0, 0, 0], [1, 0, 0], [1, 1, 0], [2, 0, 0], [2, 1, 0]])
    );
}

#[test]
fn enumeration_above_the_bound_is_a_usage_error() {
    let out = run(&["enumerate-uios", "8"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("limited to 7"));
    assert!(stderr_of(&out).contains("POSITROID_LAB_MAX_N"));
    assert!(out.stdout.is_empty());
}

#[test]
fn the_environment_variable_raises_the_bound() {
    let out = bin()
        .env("POSITROID_LAB_MAX_N", "8")
        .args(["enumerate-uios", "8"])
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["count"], 1430);
}

#[test]
fn bases_of_the_rank_three_trivial_positroid() {
    let out = run(&["bases", "--trivial", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["ground"], 6);
    assert_eq!(v["rank"], 3);
    assert_eq!(v["count"], 10);
    assert_eq!(v["bases"][0], serde_json::json!([1, 2, 3]));
    assert_eq!(v["bases"][9], serde_json::json!([2, 3, 6]));
}

#[test]
fn conflicting_sources_are_a_usage_error() {
    let out = run(&["bases", "--trivial", "3", "--profile", "0,0,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn a_missing_source_is_a_usage_error() {
    let out = run(&["bases"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn circuits_of_the_rank_two_trivial_positroid() {
    let out = run(&["circuits", "--trivial", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["count"], 3);
    assert_eq!(v["circuits"], serde_json::json!([[1, 2, 3], [1, 2, 4], [3, 4]]));
}

#[test]
fn circuits_accept_a_profile_source() {
    let out = run(&["circuits", "--profile", "1,0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["ground"], 4);
    assert_eq!(v["rank"], 2);
}

#[test]
fn external_poset_dot_outputs_match_the_golden_files() {
    let p2 = run(&["ext-poset", "--trivial", "2", "--dot"]);
    assert!(p2.status.success());
    assert_eq!(stdout_of(&p2), GOLDEN_EX_P2);
    let p3 = run(&["ext-poset", "--trivial", "3", "--dot"]);
    assert!(p3.status.success());
    assert_eq!(stdout_of(&p3), GOLDEN_EX_P3);
}

#[test]
fn external_poset_json_lists_elements_and_covers() {
    let out = run(&["ext-poset", "--trivial", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(
        v["elements"],
        serde_json::json!([[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]])
    );
    assert_eq!(
        v["covers"],
        serde_json::json!([[0, 3], [1, 2], [1, 3], [2, 4], [3, 4]])
    );
}

#[test]
fn external_poset_accepts_a_matroid_file() {
    let path = temp_file(
        "matroid.json",
        r#"{"ground":4,"rank":2,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4]]}"#,
    );
    let out = run(&["ext-poset", "--matroid", path.to_str().unwrap(), "--dot"]);
    let _ = std::fs::remove_file(&path);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), GOLDEN_EX_P2);
}

#[test]
fn a_malformed_matroid_file_is_a_usage_error_with_location() {
    let path = temp_file("broken.json", "{\"ground\": 4,\n  \"rank\": }");
    let out = run(&["bases", "--matroid", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line"));
}

#[test]
fn matrix_extension_from_a_file() {
    let path = temp_file("matrix.json", r#"{"rows":2,"cols":2,"entries":[[1,0],[1,1]]}"#);
    let out = run(&["psi", path.to_str().unwrap()]);
    let _ = std::fs::remove_file(&path);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["rows"], 2);
    assert_eq!(v["cols"], 4);
    assert_eq!(v["entries"], serde_json::json!([[1, 0, -1, -1], [0, 1, 1, 0]]));
}

#[test]
fn a_missing_matrix_file_is_a_usage_error() {
    let out = run(&["psi", "/nonexistent/matrix.json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("cannot read"));
}

#[test]
fn uip_reports_source_and_matroid() {
    let out = run(&["uip", "1,0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["source"]["profile"], serde_json::json!([1, 0]));
    assert_eq!(
        v["matroid"]["bases"],
        serde_json::json!([[1, 2], [1, 3], [2, 3], [2, 4], [3, 4]])
    );
}

#[test]
fn antiadjacency_prints_the_matrix() {
    let out = run(&["antiadjacency", "1,0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["entries"], serde_json::json!([[1, 0], [1, 1]]));
}

#[test]
fn an_invalid_profile_entry_is_a_usage_error() {
    let out = run(&["antiadjacency", "1,x"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("not a nonnegative integer"));
}

#[test]
fn a_profile_violating_the_shape_constraints_is_a_usage_error() {
    let out = run(&["antiadjacency", "0,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gamma_dot_is_step_colored_and_deterministic() {
    let first = run(&["gamma", "2", "--dot"]);
    let second = run(&["gamma", "2", "--dot"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
    let text = stdout_of(&first);
    assert_eq!(text.matches("color=blue").count(), 5);
    assert_eq!(text.matches("color=red").count(), 2);
    assert_eq!(text.matches("color=olive").count(), 3);
}

#[test]
fn gamma_json_carries_the_step_maps_and_induced_poset() {
    let out = run(&["gamma", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["step1_map"].as_array().unwrap().len(), 5);
    assert_eq!(v["step2_map"].as_array().unwrap().len(), 2);
    assert_eq!(v["step3_map"].as_array().unwrap().len(), 3);
    assert_eq!(v["induced"]["elements"].as_array().unwrap().len(), 10);
    assert_eq!(v["induced"]["covers"].as_array().unwrap().len(), 13);
}

#[test]
fn verify_recursion_reports_equality_and_exits_zero() {
    let out = run(&["verify", "--recursion", "2"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("\"equal\": true"));
}

#[test]
fn verify_recursion_above_the_bound_is_a_usage_error() {
    let out = run(&["verify", "--recursion", "6"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_runs_the_full_suite() {
    let out = run(&["verify", "--all", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout_of(&out)).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 11);
    for report in reports {
        assert_eq!(report["passed"], true, "{}", report["name"]);
    }
    assert_eq!(stderr_of(&out).matches("pass:").count(), 11);
}

#[test]
fn verify_modes_are_mutually_exclusive() {
    let out = run(&["verify", "--recursion", "2", "--counts", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn minor_scan_output_matches_the_golden_file() {
    let out = run(&["minor-scan", "4"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), GOLDEN_MINOR_SCAN);
}

#[test]
fn minor_scan_above_the_bound_is_a_usage_error() {
    let out = run(&["minor-scan", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("limited to 4"));
}

#[test]
fn json_outputs_are_byte_identical_across_runs() {
    for args in [
        vec!["ext-poset", "--trivial", "3"],
        vec!["verify", "--recursion", "1"],
        vec!["minor-scan", "3"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
