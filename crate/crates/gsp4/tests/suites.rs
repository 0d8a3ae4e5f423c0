//! Every verification suite passes, and repeated runs are identical.

use gsp4::suites::{run_suites, Suite, DEFAULT_SEED};

#[test]
fn all_suites_pass() {
    for r in run_suites(&Suite::ALL, DEFAULT_SEED, 1) {
        let failed: Vec<_> = r.cases.iter().filter(|c| !c.pass).collect();
        assert!(failed.is_empty(), "{}: {failed:#?}", r.suite);
        assert!(r.passed(), "{}", r.suite);
    }
}

#[test]
fn runs_are_deterministic_and_order_preserving() {
    let suites = [Suite::Smith, Suite::Classgroup, Suite::Case1];
    let a = run_suites(&suites, 7, 1);
    let b = run_suites(&suites, 7, 3);
    assert_eq!(a, b);
    assert_eq!(a.iter().map(|r| r.suite).collect::<Vec<_>>(), suites);
    assert_ne!(run_suites(&[Suite::Smith], 8, 1), run_suites(&[Suite::Smith], 7, 1));
}
