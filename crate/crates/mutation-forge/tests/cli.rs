//! End-to-end runs of the binary against fixtures and golden outputs.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutation-forge")).args(args).output().expect("binary runs")
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(fixture(&format!("golden/{name}"))).expect("golden file exists")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn kronecker_mutation_matches_golden() {
    let o = run(&["mutate", "--verify", "--input", &fixture("kronecker_sample.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("kronecker_mutate.json"));
}

#[test]
fn example_one_sweep_matches_golden() {
    let o = run(&["--format", "csv", "sweep", "--n", "2", "--m1", "1", "--m2", "1", "--n1", "4", "--steps", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text, golden("example1_sweep.csv"));
    let flagged: Vec<&str> = text
        .lines()
        .skip(2)
        .filter(|l| l.ends_with(",true") && l.split(',').nth(2) == Some("1"))
        .map(|l| l.rsplitn(5, ',').last().unwrap())
        .collect();
    assert_eq!(flagged, vec!["1,4", "1,2", "3,4"]);
}

#[test]
fn example_two_sweep_has_the_maximum_row() {
    let o = run(&["--format", "csv", "sweep", "--n", "2", "--m1", "1", "--m2", "2", "--n1", "5", "--steps", "7"]);
    assert!(stdout(&o).lines().any(|l| l.starts_with("4,5,") && l.ends_with(",true")));
}

#[test]
fn empty_window_sweep_is_all_false() {
    let o = run(&["--format", "csv", "sweep", "--n", "1", "--m1", "1", "--m2", "1", "--n1", "10", "--case", "2"]);
    let text = stdout(&o);
    assert!(text.lines().skip(2).all(|l| l.split(',').nth(3) == Some("false")));
}

#[test]
fn polarization_and_singular_values_match_golden() {
    let o = run(&["polarization", "--input", &fixture("polarization_example.json")]);
    assert_eq!(stdout(&o), golden("polarization_example.json"));
    let o = run(&["singular", "--n", "2", "--k", "2"]);
    assert_eq!(stdout(&o), golden("example2_singular.json"));
    let o = run(&["thresholds", "--n", "2", "--m1", "1", "--m2", "1", "--n1", "4", "--t", "7/10"]);
    assert_eq!(stdout(&o), golden("thresholds_p2.json"));
}

#[test]
fn validate_exit_codes() {
    assert_eq!(run(&["validate", "--input", &fixture("p2_theta0.json")]).status.code(), Some(0));
    let broken = run(&["validate", "--input", &fixture("broken_diagram.json")]);
    assert_eq!(broken.status.code(), Some(1));
    assert!(stdout(&broken).contains("\"diagram D\""));
    assert_eq!(run(&["validate", "--input", &fixture("malformed.json")]).status.code(), Some(2));
    assert_eq!(run(&["validate", "--input", &fixture("missing.json")]).status.code(), Some(2));
}

#[test]
fn mutate_outside_w0_names_it() {
    let o = run(&["mutate", "--input", &fixture("zero_psi2.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("W0"));
}

#[test]
fn dual_of_projective_space_passes() {
    let o = run(&["dual", "--input", &fixture("p2_theta0.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"double_dual\""));
}

#[test]
fn stability_needs_a_prime_field() {
    let o = run(&["stability", "--input", &fixture("p1_stability.json")]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--field", "gf:2", "stability", "--input", &fixture("p1_stability.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"exceptions\": 0"));
}

#[test]
fn budgets_are_enforced_and_recorded() {
    let o = run(&["--field", "gf:2", "--budget-subspaces", "10", "stability", "--input", &fixture("p1_stability.json")]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--seed", "5", "--budget-orbit", "77", "singular", "--n", "1"]);
    let text = stdout(&o);
    assert!(text.contains("\"seed\": 5") && text.contains("\"budget_orbit\": 77"));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["constants", "--sigma", "3", "--n", "1", "--m", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "csv", "singular", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["thresholds", "--n", "1", "--m1", "1", "--m2", "1", "--n1", "3", "--t", "1"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "gf:4", "singular", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["--seed", "9", "constants", "--sigma", "1", "--n", "2", "--m", "2", "--samples", "100"];
    let base = run(&args);
    let capped = Command::new(env!("CARGO_BIN_EXE_mutation-forge"))
        .env("MUTATION_FORGE_THREADS", "1")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(base.stdout, capped.stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_mutation-forge"))
        .env("MUTATION_FORGE_THREADS", "zero")
        .args(args)
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_file() {
    let dir = std::env::temp_dir().join(format!("mutation-forge-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("singular.json");
    let o = run(&["--out", path.to_str().unwrap(), "singular", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("\"3/4\""));
    std::fs::remove_dir_all(dir).unwrap();
}
