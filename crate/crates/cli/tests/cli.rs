use std::process::{Command, Output};

use serde_json::Value;

fn idealis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idealis")).args(args).env_remove("IDEALIS_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = idealis(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_z12_ideal_four() {
    let v = json(&["classify", "Z12", "(4)"]);
    assert_eq!(v["ring"], "Z12");
    assert_eq!(v["ringSize"], 12);
    assert_eq!(v["toolVersion"], "idealis 0.1.0");
    let ideal = &v["ideals"][0];
    assert_eq!(ideal["code"], "FFFTTT");
    assert_eq!(ideal["elements"], serde_json::json!(["0", "4", "8"]));
    assert_eq!(ideal["verdicts"]["w1ap"], true);
    assert_eq!(ideal["witnesses"]["weaklyPrime"], serde_json::json!(["2", "2"]));
}

#[test]
fn classify_z30_ideal_six() {
    let v = json(&["classify", "Z30", "(6)"]);
    let ideal = &v["ideals"][0];
    assert_eq!(ideal["verdicts"]["weakly2Absorbing"], true);
    assert_eq!(ideal["witnesses"]["w1ap"], serde_json::json!(["2", "2", "3"]));
}

#[test]
fn classify_field_has_only_the_zero_ideal() {
    let v = json(&["classify", "Z5"]);
    let ideals = v["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 1);
    assert_eq!(ideals[0]["code"], "TTTTTT");
}

#[test]
fn output_is_deterministic() {
    let a = idealis(&["classify", "Z2 x Z4"]);
    let b = idealis(&["classify", "Z2 x Z4"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn lattice_dot() {
    let o = idealis(&["lattice", "Z4", "--dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("digraph lattice {"));
    assert!(s.contains("(2)\\nTTTTTT\\nm^2=0, m^3=0"));
    assert_eq!(s.matches(" -> ").count(), 2);
}

#[test]
fn lattice_json_lists_covering_edges() {
    let v = json(&["lattice", "Z6", "--json"]);
    assert_eq!(v["latticeEdges"].as_array().unwrap().len(), 4);
}

#[test]
fn search_lists_hits_in_order() {
    let o = idealis(&["search", "--property", "w1ap AND NOT weaklyPrime", "--max-size", "12"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "Z8\t(4)\tFFTTTT");
    assert!(lines.iter().any(|l| l.starts_with("Z12\t(4)\t")));
}

#[test]
fn contradiction_finds_nothing() {
    let o = idealis(&["search", "--property", "prime AND NOT w1ap"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
}

#[test]
fn exit_codes() {
    assert_eq!(idealis(&["search", "--property", "w1ap AND"]).status.code(), Some(2));
    assert_eq!(idealis(&["classify", "Z12 x"]).status.code(), Some(2));
    assert_eq!(idealis(&["classify", "Z12", "(1)"]).status.code(), Some(2));
    assert_eq!(idealis(&["classify", "Z2000"]).status.code(), Some(3));
}

#[test]
fn cap_flag_beats_environment() {
    let env = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_idealis")).args(args).env("IDEALIS_CAP", "4").output().unwrap()
    };
    assert_eq!(env(&["classify", "Z8"]).status.code(), Some(3));
    assert_eq!(env(&["classify", "Z8", "--cap", "16"]).status.code(), Some(0));
    assert_eq!(idealis(&["classify", "Z8", "--cap", "4"]).status.code(), Some(3));
}

#[test]
fn recheck_passes() {
    let o = idealis(&["classify", "Z30", "--recheck"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn verify_empty_corpus_is_vacuous() {
    let dir = std::env::temp_dir().join(format!("idealis-empty-{}", std::process::id()));
    std::fs::write(&dir, "").unwrap();
    let o = idealis(&["verify", "--corpus", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).ok();
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("17 checks: 0 pass, 0 fail, 17 vacuous"), "{s}");
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
}

#[test]
fn injected_unit_fault_fails_verify() {
    let o = idealis(&["verify", "--default", "--inject-unit-fault", "Z8:3"]);
    assert_eq!(o.status.code(), Some(1));
    let s = stdout(&o);
    assert!(s.contains("counterexample:"));
    assert!(s.contains("rerun: idealis classify"));
}
