use std::collections::BTreeMap;

use degenlab::harness::fixtures::{CD_EXAMPLE, GENERIC_4X4, NON_CM_PRIME};
use degenlab::harness::{
    emit_report, paper_fixtures, run_fixtures, Fixture, ReportFormat, SuiteOptions, Verdict, VerificationReport,
};
use degenlab::poly::Field;

/// Everything except the 16-variable gin, which dominates the runtime.
fn light(opts: &SuiteOptions) -> Vec<Fixture> {
    paper_fixtures(opts).into_iter().filter(|f| f.id != "generic-4x4").collect()
}

fn verdicts(reports: &[VerificationReport]) -> BTreeMap<(String, String), Verdict> {
    reports
        .iter()
        .flat_map(|r| r.checks.iter().map(move |c| ((r.fixture.clone(), c.name.clone()), c.verdict)))
        .collect()
}

#[test]
fn verdicts_do_not_depend_on_the_field() {
    let run = |field| {
        let opts = SuiteOptions { field, ..SuiteOptions::default() };
        verdicts(&run_fixtures(light(&opts), &opts))
    };
    let q = run(None);
    assert!(q.len() > 500);
    for p in [3, 32003] {
        let fp = run(Some(Field::prime(p).unwrap()));
        let diff: Vec<_> = q.iter().filter(|(k, v)| fp.get(*k) != Some(v)).map(|(k, _)| k).collect();
        assert!(diff.is_empty(), "F{p} differs on {diff:?}");
    }
}

#[test]
fn generic_coordinates_over_a_large_prime() {
    let opts = SuiteOptions { field: Some(Field::prime(32003).unwrap()), ..SuiteOptions::default() };
    let fx = paper_fixtures(&opts).into_iter().filter(|f| f.id == "generic-4x4").collect();
    let reps = run_fixtures(fx, &opts);
    assert!(!reps[0].has_failure(), "{:?}", reps[0].checks);
    for name in ["initial-formula", "gin-ideal-degree-2", "gin-initial-degree-2"] {
        assert_eq!(reps[0].check(name).map(|c| c.verdict), Some(Verdict::Pass), "{name}");
    }
}

#[test]
fn corrupted_fixture_does_not_leak() {
    let truncated = &GENERIC_4X4[..GENERIC_4X4.len() / 2];
    let fx = vec![
        Fixture::from_text("cd", CD_EXAMPLE, None),
        Fixture::from_text("truncated", truncated, None),
        Fixture::from_text("prime", NON_CM_PRIME, None),
        Fixture::from_text("garbage", "vars x1..x3\norder lex\nx1 +* x2\n", None),
    ];
    let reps = run_fixtures(fx, &SuiteOptions::default());
    let failed: Vec<&str> = reps.iter().filter(|r| r.has_failure()).map(|r| r.fixture.as_str()).collect();
    assert_eq!(failed, ["truncated", "garbage"]);
    assert_eq!(reps[3].check("parse").map(|c| c.verdict), Some(Verdict::Fail));
}

#[test]
fn thread_count_does_not_change_the_report() {
    let json = |threads| {
        let opts = SuiteOptions { threads, ..SuiteOptions::default() };
        emit_report(&run_fixtures(light(&opts), &opts), ReportFormat::Json)
    };
    assert_eq!(json(1), json(4));
}
