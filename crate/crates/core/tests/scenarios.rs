use hyperval_core::scenarios::{run_scenario, ScenarioParams, SCENARIOS};
use hyperval_core::Error;

#[test]
fn every_scenario_passes() {
    for name in SCENARIOS {
        let report = run_scenario(name, &ScenarioParams::default()).unwrap();
        let failing: Vec<_> = report.claims.iter().filter(|c| !c.holds).collect();
        assert!(failing.is_empty(), "{name}: {failing:#?}");
    }
}

#[test]
fn example_last_witness() {
    let report = run_scenario("example-last", &ScenarioParams::default()).unwrap();
    let strict = report.claims.iter().find(|c| c.claim.contains("proper subset")).unwrap();
    assert_eq!(strict.detail, "witness (0,1/2)");
}

#[test]
fn unknown_scenario() {
    let err = run_scenario("nope", &ScenarioParams::default()).unwrap_err();
    assert_eq!(err, Error::UnknownScenario("nope".into()));
}
