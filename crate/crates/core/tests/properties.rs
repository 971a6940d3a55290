mod common;

use common::*;

#[test]
fn d_squared_and_leibniz() {
    prop_d_squared(CASES, 1).unwrap();
}

#[test]
fn jacobi_on_random_triples() {
    prop_jacobi(CASES, 2).unwrap();
}

#[test]
fn sigma_and_tau_are_involutions() {
    prop_sigma_involution(CASES, 3).unwrap();
}

#[test]
fn signature_invariant_under_congruence() {
    prop_signature_congruence(CASES, 4).unwrap();
}

#[test]
fn wedge_power_matches_expansion() {
    prop_wedge_power(CASES, 5).unwrap();
}

#[test]
fn metric_report_implications() {
    prop_metric_implications(CASES, 6).unwrap();
}

#[test]
fn ddc_identity_on_nilpotent_model() {
    prop_ddc_convention(CASES, 7).unwrap();
}
