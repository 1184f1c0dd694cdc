use aoq_core::frontend::{run, Check, RunConfig, Status, REPORT_SCHEMA};
use serde_json::Value;

fn validate(json: &str) {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let instance: Value = serde_json::from_str(json).unwrap();
    let errors: Vec<String> = validator.iter_errors(&instance).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn homology_report() {
    let report = run(&RunConfig::new(2, 3, vec![Check::Homology])).unwrap();
    assert!(report.passed);
    let entry = report.entry(Check::Homology).unwrap();
    assert_eq!(entry.summary["dims"], serde_json::json!([1, 1, 1, 1]));
    validate(&report.to_json().unwrap());
}

#[test]
fn symbolic_checks_n3() {
    let config = RunConfig::new(3, 3, vec![Check::VerifyComplex, Check::Comput1, Check::Duality]);
    let report = run(&config).unwrap();
    assert!(report.passed);
    assert!(report.checks.iter().all(|e| e.status == Status::Pass));
    assert_eq!(report.checks.len(), 3);
}

#[test]
fn every_check_validates_and_is_deterministic() {
    let mut config = RunConfig::new(2, 5, Check::ALL.to_vec());
    config.samples = 10;
    config.seed = 11;
    let first = run(&config).unwrap();
    assert!(first.passed, "{}", first.to_json().unwrap());
    let json = first.to_json().unwrap();
    validate(&json);
    let second = run(&config).unwrap();
    assert_eq!(first.to_json_without_timings().unwrap(), second.to_json_without_timings().unwrap());
    let mut other_seed = config.clone();
    other_seed.seed = 12;
    let third = run(&other_seed).unwrap();
    assert_ne!(
        first.entry(Check::Preimages).unwrap().witness_sha256,
        third.entry(Check::Preimages).unwrap().witness_sha256
    );
}

#[test]
fn keys_are_sorted() {
    let report = run(&RunConfig::new(1, 3, vec![Check::Homology])).unwrap();
    let json = report.to_json().unwrap();
    let top: Vec<&str> = json
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    let mut sorted = top.clone();
    sorted.sort();
    assert_eq!(top, sorted);
}

#[test]
fn invalid_configs_are_rejected() {
    let mut config = RunConfig::new(2, 3, vec![Check::Exactness]);
    config.window = Some(3);
    assert!(run(&config).is_err());
    assert!(run(&RunConfig::new(2, 2, vec![Check::VerifyComplex])).is_err());
}
