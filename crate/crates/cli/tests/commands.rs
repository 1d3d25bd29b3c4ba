//! Internal consistency of the command reports: every emitted record
//! passes on well-formed inputs, and witnesses re-validate.

use srlab_cli::commands::{cmd_explore, cmd_krull, cmd_localize, cmd_survey};
use srlab_cli::ringspec::{eval, parse_ring_spec};
use srlab_core::krull::ChainReading;
use srlab_core::multset::mult_closure;
use srlab_core::sweep::{CheckId, ExecMode};
use srlab_core::Elem;

fn ring(spec: &str) -> srlab_core::FiniteRing {
    eval(&parse_ring_spec(spec).unwrap(), 32).unwrap()
}

#[test]
fn explore_reports_are_internally_consistent() {
    for (spec, gens) in [
        ("Z6", vec![2u16]),
        ("Z12", vec![3]),
        ("Z12", vec![2]),
        ("Z15", vec![3]),
        ("Z2xZ3", vec![]),
        ("Z2(+)self", vec![]),
        ("Z12/(6)", vec![2]),
        ("Z5", vec![]),
        ("Z4", vec![0]), // degenerate: closure contains 0
    ] {
        let r = ring(spec);
        let s = mult_closure(&r, &gens.iter().map(|&g| Elem(g)).collect::<Vec<_>>());
        let records = cmd_explore(&r, &s);
        for rec in &records {
            assert!(
                rec.pass,
                "{spec} {gens:?}: record {} failed: {:?}",
                rec.name, rec.detail
            );
        }
    }
}

#[test]
fn explore_matches_worked_example_on_z6() {
    let r = ring("Z6");
    let s = mult_closure(&r, &[Elem(2)]);
    let records = cmd_explore(&r, &s);
    let by_name = |n: &str| records.iter().find(|r| r.name == n).unwrap();
    assert!(by_name("s-integral-domain").verdict);
    assert!(by_name("s-field").verdict);
    assert_eq!(
        records
            .iter()
            .filter(|r| r.name.starts_with("ideal-"))
            .count(),
        4, // (0), (3), (2), and the full ring
    );
}

#[test]
fn explore_z12_pow2_matches_worked_example() {
    let r = ring("Z12");
    let s = mult_closure(&r, &[Elem(2)]);
    let records = cmd_explore(&r, &s);
    // (0), (3), (6) are the S-prime ideals; the localization has order 3
    let s_primes: Vec<&str> = records
        .iter()
        .filter(|rec| {
            rec.data
                .as_ref()
                .and_then(|d| d.get("s_prime"))
                .and_then(|v| v.as_bool())
                .unwrap_or(false)
        })
        .map(|rec| rec.name.as_str())
        .collect();
    assert_eq!(s_primes, vec!["ideal-()", "ideal-(6)", "ideal-(3)"]);
    let loc = records
        .iter()
        .find(|rec| rec.name == "localization")
        .unwrap();
    assert_eq!(
        loc.data
            .as_ref()
            .unwrap()
            .get("local_order")
            .unwrap()
            .as_u64(),
        Some(3)
    );
}

#[test]
fn localize_and_krull_reports_pass() {
    for (spec, gens, ideal) in [
        ("Z12", vec![2u16], vec![6u16]),
        ("Z12", vec![3], vec![2]),
        ("Z6", vec![2], vec![3]),
        ("Z4", vec![], vec![0]),
    ] {
        let r = ring(spec);
        let s = mult_closure(&r, &gens.iter().map(|&g| Elem(g)).collect::<Vec<_>>());
        for rec in cmd_localize(&r, &s) {
            assert!(rec.pass, "{spec}: localize record {} failed", rec.name);
        }
        let ideal_gens: Vec<Elem> = ideal.iter().map(|&g| Elem(g)).collect();
        for rec in cmd_krull(&r, &s, &ideal_gens, ChainReading::Corrected) {
            assert!(
                rec.pass,
                "{spec}: krull record {} failed: {:?}",
                rec.name, rec.detail
            );
        }
    }
}

#[test]
fn survey_command_reports_zero_counterexamples() {
    let records = cmd_survey(8, &CheckId::ALL, ExecMode::default());
    for rec in &records {
        assert!(
            rec.pass,
            "survey record {} failed: {:?}",
            rec.name, rec.detail
        );
    }
}
