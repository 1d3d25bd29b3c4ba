//! Acceptance suite. Each criterion prints one pass/fail line; run with
//! `cargo test -p srlab-cli --test acceptance -- --nocapture` to see them.
//!
//! 1. verify-paper battery matches its goldens exactly, in under a second.
//! 2. Exhaustive sweeps (Z_n ≤ 24, two-factor products / quotients /
//!    idealizations ≤ 16, every 0-free mult set) report zero
//!    counterexamples for every invariant, within the 10-minute budget.
//! 3. Localization oracle equivalence holds on every pair in the sweep.
//! 4. Every finite S-integral domain in the sweep is an S-field.
//! 5. Fault injection: corrupting one mul-table entry of Z12 fails
//!    validation and the battery.
//! 6. verify-paper reports are byte-identical across runs with
//!    --no-timestamp.

use std::process::Command;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use serde_json::json;
use srlab_cli::battery::{run_battery, BatteryOptions};
use srlab_cli::report::Report;
use srlab_core::sweep::{run_survey, CheckId, ExecMode, SurveyOutcome, SweepConfig};
use srlab_core::FiniteRing;

struct SharedSweep {
    outcome: SurveyOutcome,
}

fn acceptance_sweep() -> &'static SharedSweep {
    static SWEEP: OnceLock<SharedSweep> = OnceLock::new();
    SWEEP.get_or_init(|| {
        let outcome = run_survey(
            &SweepConfig::acceptance(),
            &CheckId::ALL,
            ExecMode::default(),
        );
        SharedSweep { outcome }
    })
}

fn report_for(outcome: &SurveyOutcome, check: CheckId) -> &srlab_core::sweep::CheckReport {
    outcome
        .reports
        .iter()
        .find(|r| r.check == check)
        .expect("check was requested")
}

fn pass(line: &str) {
    println!("ACCEPTANCE PASS: {line}");
}

#[test]
fn criterion_1_verify_paper_battery_matches_goldens() {
    let start = Instant::now();
    let records = run_battery(&BatteryOptions::default());
    let elapsed = start.elapsed();

    let failures: Vec<_> = records.iter().filter(|r| !r.pass).collect();
    assert!(failures.is_empty(), "battery failures: {failures:#?}");

    // exact-match against the frozen golden report
    let report = Report::new(
        "verify-paper",
        json!({ "inject_fault": false }),
        records,
        false,
    );
    let golden = include_str!("golden/verify_paper.json");
    assert_eq!(
        report.to_json_string(),
        golden.trim_end(),
        "verify-paper JSON diverges from the golden file"
    );

    assert!(
        elapsed < Duration::from_secs(1),
        "battery took {elapsed:?}, budget is 1s"
    );
    pass(&format!(
        "criterion 1 — verify-paper battery matches goldens exactly in {elapsed:?}"
    ));
}

#[test]
fn criterion_2_exhaustive_sweeps_find_no_counterexamples() {
    let shared = acceptance_sweep();
    let outcome = &shared.outcome;
    assert!(
        outcome.elapsed < Duration::from_secs(600),
        "sweep took {:?}, budget is 10 minutes",
        outcome.elapsed
    );
    let mut instances = 0usize;
    for rep in &outcome.reports {
        assert!(
            rep.counterexamples.is_empty(),
            "{}: {:#?}",
            rep.check.name(),
            rep.counterexamples
        );
        assert!(rep.instances > 0, "{} never ran", rep.check.name());
        instances += rep.instances;
    }
    pass(&format!(
        "criterion 2 — {} rings, {} (ring, mult-set) pairs, {} invariant instances, 0 counterexamples in {:?}",
        outcome.ring_count, outcome.pair_count, instances, outcome.elapsed
    ));
}

#[test]
fn criterion_3_localization_oracle_equivalence() {
    let shared = acceptance_sweep();
    let outcome = &shared.outcome;
    let rep = report_for(outcome, CheckId::LocalizationOracleIso);
    assert!(rep.counterexamples.is_empty(), "{:#?}", rep.counterexamples);
    assert_eq!(
        rep.instances, outcome.pair_count,
        "oracle comparison must run on every pair"
    );
    pass(&format!(
        "criterion 3 — fraction construction isomorphic to R/kernel on all {} pairs",
        rep.instances
    ));
}

#[test]
fn criterion_4_finite_s_domains_are_s_fields() {
    let shared = acceptance_sweep();
    let outcome = &shared.outcome;
    let rep = report_for(outcome, CheckId::SDomainImpliesSField);
    assert!(rep.counterexamples.is_empty(), "{:#?}", rep.counterexamples);
    assert_eq!(rep.instances, outcome.pair_count);
    pass(&format!(
        "criterion 4 — S-domain ⇒ S-field on all {} pairs",
        rep.instances
    ));
}

#[test]
fn criterion_5_fault_injection_is_detected() {
    // validating constructor rejects the corrupted tables outright
    let z12 = srlab_core::ring::make_zn(12).unwrap();
    let (add, mul) = z12.tables();
    let mut bad_mul = mul.to_vec();
    bad_mul[2 * 12 + 2] = (bad_mul[2 * 12 + 2] + 1) % 12;
    let names: Vec<String> = z12.elements().map(|e| z12.name(e).to_string()).collect();
    let rejected = FiniteRing::from_tables(12, add.to_vec(), bad_mul, names, "Z12".into());
    assert!(
        matches!(rejected, Err(srlab_core::Error::AxiomViolation(_))),
        "corrupted tables must fail ring-axiom validation"
    );

    // and the battery fails end to end
    let records = run_battery(&BatteryOptions { inject_fault: true });
    let failed: Vec<&str> = records
        .iter()
        .filter(|r| !r.pass)
        .map(|r| r.name.as_str())
        .collect();
    assert!(!failed.is_empty(), "fault injection must fail the battery");
    assert!(failed.contains(&"z12-ring-axioms"));

    // and the CLI exits nonzero
    let out = Command::new(env!("CARGO_BIN_EXE_srlab"))
        .args(["verify-paper", "--inject-fault", "--no-timestamp"])
        .output()
        .expect("run srlab");
    assert_eq!(out.status.code(), Some(1), "expected exit code 1");
    pass(&format!(
        "criterion 5 — corrupted Z12 rejected by the validator and fails {} battery records (exit 1)",
        failed.len()
    ));
}

#[test]
fn criterion_6_reports_are_byte_identical() {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_srlab"))
            .args(["verify-paper", "--no-timestamp", "--json", "-"])
            .output()
            .expect("run srlab")
    };
    let first = run();
    let second = run();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(second.status.code(), Some(0));
    assert!(!first.stdout.is_empty());
    assert_eq!(
        first.stdout, second.stdout,
        "two --no-timestamp runs must be byte-identical"
    );
    pass(&format!(
        "criterion 6 — two verify-paper runs produced byte-identical JSON ({} bytes)",
        first.stdout.len()
    ));
}
