use qhat::harness::{self, fixtures::FIXTURE_DIR_VAR, Fixtures, Status};
use qhat::Error;

const BUILTIN: &str = include_str!("../fixtures/bondal.json");

#[test]
fn unknown_check_is_an_error() {
    let f = Fixtures::builtin().unwrap();
    match harness::verify(&f, Some("no-such-check"), None) {
        Err(Error::UnknownCheck(name)) => assert_eq!(name, "no-such-check"),
        other => panic!("expected UnknownCheck, got {:?}", other.map(|r| r.summary.passed)),
    }
}

#[test]
fn check_names_are_unique_and_numbered() {
    let names: Vec<&str> = harness::check_names().collect();
    assert_eq!(names.len(), 15);
    let mut sorted = names.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 15);
    let criteria: Vec<u8> = harness::CHECKS.iter().map(|c| c.0).collect();
    assert_eq!(criteria, (1..=15).collect::<Vec<u8>>());
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let f = Fixtures::builtin().unwrap();
    for name in ["serre-on-projectives", "spherical-object", "calabi-yau-families"] {
        let a = harness::verify(&f, Some(name), None).unwrap().to_json();
        let b = harness::verify(&f, Some(name), None).unwrap().to_json();
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn witnesses_are_written_per_check() {
    let f = Fixtures::builtin().unwrap();
    let dir = tempfile::tempdir().unwrap();
    let report = harness::verify(&f, Some("i3-to-i2-chain-suite"), Some(dir.path())).unwrap();
    let entry = &report.checks[0];
    assert_eq!(entry.status, Status::Pass);
    let path = entry.witness.as_ref().expect("witness path recorded");
    let text = std::fs::read_to_string(path).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&text).is_ok());
    assert!(path.ends_with("i3-to-i2-chain-suite.json"));
}

#[test]
fn report_carries_seed_and_fixture_hash() {
    let f = Fixtures::builtin().unwrap();
    let r = harness::verify(&f, Some("projective-hom-table"), None).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["seed"], qhat::sampling::seed());
    assert_eq!(v["fixture_hash"].as_str().unwrap().len(), 64);
    assert_eq!(v["checks"][0]["status"], "pass");
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bondal.json"), BUILTIN).unwrap();
    std::env::set_var(FIXTURE_DIR_VAR, dir.path());
    let same = Fixtures::load().unwrap();
    std::fs::write(dir.path().join("bondal.json"), BUILTIN.replacen("\"modules\"", "\"modulez\"", 1)).unwrap();
    let broken = Fixtures::load();
    std::env::remove_var(FIXTURE_DIR_VAR);
    assert_eq!(same.hash, Fixtures::builtin().unwrap().hash);
    assert!(broken.is_err());
}
