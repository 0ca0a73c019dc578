//! Suite runs, report merging, witness replay and negative controls.

use idealtop::verifier::{
    self, replay, statement_ids, Counterexample, PropertyReport, SuiteConfig, WitnessDesc,
    WitnessKind,
};
use idealtop::Error;

fn without_timing(mut r: PropertyReport) -> PropertyReport {
    r.elapsed = Default::default();
    r
}

#[test]
fn exhaustive_run_to_three_points_passes() {
    let report = verifier::run_suite(&SuiteConfig::exhaustive(3)).unwrap();
    assert!(report.passed());
    let ids: Vec<&str> = report
        .reports
        .iter()
        .map(|r| r.statement_id.as_str())
        .collect();
    assert_eq!(ids, statement_ids());
    for r in &report.reports {
        assert!(
            r.instances_checked > 0,
            "{} checked nothing",
            r.statement_id
        );
        assert_eq!(r.violation_count, 0, "{}", r.statement_id);
    }
}

#[test]
fn runs_are_deterministic() {
    let mut config = SuiteConfig::exhaustive(3);
    config.budget.sample_count = 5;
    config.budget.sample_n = 5;
    config.budget.rng_seed = 7;
    let a = verifier::run_suite(&config).unwrap();
    let b = verifier::run_suite(&config).unwrap();
    let strip = |r: verifier::SuiteReport| {
        r.reports
            .into_iter()
            .map(without_timing)
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(a), strip(b));
}

#[test]
fn merging_is_associative_and_commutative() {
    let run = |n: usize, seed: u64| {
        let mut config = SuiteConfig::exhaustive(n);
        config.only = Some("check_A_open".into());
        config.mutate = Some("check_A_open".into());
        config.budget.sample_count = 2;
        config.budget.sample_n = 4;
        config.budget.rng_seed = seed;
        without_timing(verifier::run_suite(&config).unwrap().reports.remove(0))
    };
    let (a, b, c) = (run(1, 1), run(2, 2), run(3, 3));
    let left = a.clone().merge(b.clone()).merge(c.clone());
    let right = a.clone().merge(b.clone().merge(c.clone()));
    assert_eq!(left, right);
    assert_eq!(a.clone().merge(b.clone()), b.merge(a));
    assert!(left.violations.len() <= verifier::MAX_WITNESSES);
    assert_eq!(left.violation_count, left.instances_checked);
}

#[test]
fn mutated_witnesses_replay_after_a_json_round_trip() {
    let mut config = SuiteConfig::exhaustive(3);
    config.mutate = Some("check_A_open".into());
    let report = verifier::run_suite(&config).unwrap();
    assert!(!report.passed());
    let r = report.report("check_A_open").unwrap();
    assert!(!r.violations.is_empty());
    for w in &r.violations {
        assert_eq!(w.kind, WitnessKind::MutatedViolation);
        let text = serde_json::to_string(&w.to_json()).unwrap();
        let back = Counterexample::from_json(&serde_json::from_str::<WitnessDesc>(&text).unwrap())
            .unwrap();
        assert_eq!(&back, w);
        assert!(replay(&back).unwrap());
        // the same instance is not a genuine violation
        let genuine = Counterexample {
            kind: WitnessKind::Violation,
            ..back
        };
        assert!(!replay(&genuine).unwrap());
    }
    // everything else stayed green
    assert!(report
        .reports
        .iter()
        .filter(|r| r.statement_id != "check_A_open")
        .all(PropertyReport::passed));
}

#[test]
fn hypotheses_are_needed_at_four_points() {
    let mut config = SuiteConfig::exhaustive(4);
    config.negative_controls = true;
    let report = verifier::run_suite(&config).unwrap();
    assert!(report.passed());
    for id in [
        "check_not_preopen_disconnected",
        "check_trace_nontrivial_disconnected",
        "check_IAprime_trace_iff_preopen",
        "check_connected_iff_preopen",
        "check_union_empty_interior",
        "check_ID_submaximal",
    ] {
        let control = report
            .control(id)
            .unwrap_or_else(|| panic!("no control for {id}"));
        let w = control
            .witness
            .as_ref()
            .unwrap_or_else(|| panic!("no witness for {id}"));
        assert_eq!(w.kind, WitnessKind::NegativeControl);
        assert!(replay(w).unwrap(), "{id} control witness does not replay");
        let text = serde_json::to_string(&w.to_json()).unwrap();
        let back = Counterexample::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert!(replay(&back).unwrap());
    }
}

#[test]
fn unknown_statements_are_rejected() {
    let mut config = SuiteConfig::exhaustive(2);
    config.only = Some("no_such_check".into());
    assert!(matches!(
        verifier::run_suite(&config),
        Err(Error::UnknownStatement(_))
    ));
    let mut config = SuiteConfig::exhaustive(2);
    config.mutate = Some("no_such_check".into());
    assert!(matches!(
        verifier::run_suite(&config),
        Err(Error::UnknownStatement(_))
    ));
}

#[test]
fn prefix_selects_every_mode() {
    let checkers = verifier::select_checkers(Some("check_semireg_preserved")).unwrap();
    assert_eq!(checkers.len(), 4);
    assert_eq!(
        verifier::select_checkers(Some("check_A_open"))
            .unwrap()
            .len(),
        1
    );
    assert!(verifier::select_checkers(Some("check_A")).is_err());
}

#[test]
fn random_samples_pass() {
    let mut config = SuiteConfig::exhaustive(0);
    config.budget.sample_count = 12;
    config.budget.sample_n = 6;
    config.budget.rng_seed = 99;
    let report = verifier::run_suite(&config).unwrap();
    assert!(report.passed());
    assert!(report.report("check_A_open").unwrap().instances_checked > 0);
}
