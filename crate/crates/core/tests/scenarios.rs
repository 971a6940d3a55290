use lieherm::scenarios::{check_expectations, list_scenarios, run_scenario, Expectation, Scenario};
use lieherm::Error;

#[test]
fn catalog_is_stable() {
    let a: Vec<&str> = list_scenarios().iter().map(|s| s.name).collect();
    let b: Vec<&str> = list_scenarios().iter().map(|s| s.name).collect();
    assert_eq!(a, b);
    for n in ["sl2m1-nonregular", "su5-t2-astheno", "reductive-ddc", "sl2-product", "compact-dxi"] {
        assert!(a.contains(&n));
    }
}

#[test]
fn reports_are_byte_identical() {
    for info in list_scenarios() {
        let s = Scenario::new(info.name);
        let x = run_scenario(&s, 3).unwrap().to_json_string();
        let y = run_scenario(&s, 3).unwrap().to_json_string();
        assert_eq!(x, y, "{}", info.name);
    }
}

#[test]
fn documented_report_fields() {
    let r = run_scenario(&Scenario::new("su5-t2-astheno").with("beta1", "a1").with("beta2", "a1-a2"), 0).unwrap();
    assert!(r.to_json_string().contains("\"c2\": \"7/4\""));
    let r = run_scenario(&Scenario::new("sl2m1-balanced").with("m", "3"), 0).unwrap();
    assert!(r.to_json_string().contains("\"residual_zero\": true"));
}

#[test]
fn parameter_errors() {
    let e = run_scenario(&Scenario::new("sl2m1-nonregular").with("m", "17/2"), 0).unwrap_err();
    assert!(matches!(e, Error::BadParameter { ref key, .. } if key == "m"));
    let e = run_scenario(&Scenario::new("sl3-Ilambda").with("lambda", "1"), 0).unwrap_err();
    assert!(matches!(e, Error::BadParameter { ref key, .. } if key == "lambda"));
    let e = run_scenario(&Scenario::new("su5-t2-scan").with("beta1", "a9"), 0).unwrap_err();
    assert!(matches!(e, Error::BadParameter { ref key, .. } if key == "beta1"));
    assert!(matches!(run_scenario(&Scenario::new("sl4-anything"), 0), Err(Error::UnknownScenario(_))));
}

#[test]
fn every_default_scenario_meets_expectations() {
    for info in list_scenarios() {
        let r = run_scenario(&Scenario::new(info.name), 0).unwrap();
        assert!(r.as_expected(), "{}: {:?}", info.name, r.contradictions);
    }
}

#[test]
fn known_gap_is_reported_as_contradiction() {
    let r = run_scenario(&Scenario::new("compact-dxi").with("N", "4"), 0).unwrap();
    assert_eq!(r.contradictions, vec!["rank_equals_positive_roots".to_string()]);
    assert_eq!(r.values["rank"], "5");
}

#[test]
fn expectation_files() {
    let text = r#"[
        {"scenario": "su5-t2-astheno", "params": {"beta1": "a1-3a4", "beta2": "a2-a3"}, "values": {"c2": "7/5"}},
        {"scenario": "sl2m1-nonregular", "params": {"m": "3"}, "verdicts": {"certificate": true}},
        {"scenario": "sl2-product", "verdicts": {"kahler_infeasible": false}}
    ]"#;
    let entries: Vec<Expectation> = serde_json::from_str(text).unwrap();
    let out = check_expectations(&entries, 0).unwrap();
    assert!(out[0].mismatches.is_empty());
    assert!(out[1].mismatches.is_empty());
    assert_eq!(out[2].mismatches.len(), 1);
}
