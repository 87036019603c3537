//! Acceptance suite: one test per checklist criterion, each printing its
//! status line (visible with `--nocapture`). Tolerances are pinned in the
//! `verify` module.

use partition_diamonds::verify::*;

fn check(outcome: CriterionOutcome) {
    println!("{}", outcome.status_line());
    assert!(outcome.passed, "{}", outcome.status_line());
}

#[test]
fn criterion_01_exact_identity_suite() {
    check(criterion_1_exact_identities());
}

#[test]
fn criterion_02_oracle_equivalence() {
    check(criterion_2_oracle_equivalence(false));
}

#[test]
fn criterion_03_known_series_reductions() {
    check(criterion_3_known_series(false));
}

#[test]
fn criterion_04_constants_dual_route() {
    check(criterion_4_constants_dual_route());
}

#[test]
fn criterion_05_ell_regular_closed_form() {
    check(criterion_5_ell_regular());
}

#[test]
fn criterion_06_hardy_ramanujan_reduction() {
    check(criterion_6_hardy_ramanujan());
}

#[test]
fn criterion_07_asymptotic_convergence() {
    check(criterion_7_asymptotic_convergence(false));
}

#[test]
fn criterion_08_euler_maclaurin_vanishing() {
    check(criterion_8_em_vanishing());
}

#[test]
fn criterion_09_product_asymptotic_check() {
    check(criterion_9_product_asymptotics());
}

#[test]
fn criterion_10_monotonicity() {
    check(criterion_10_monotonicity(false));
}
