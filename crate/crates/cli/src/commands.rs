//! Report builders behind each CLI subcommand.

use serde_json::json;
use srlab_core::classify::{self, recheck};
use srlab_core::ideal::{enumerate_ideals, jacobson_radical, radical, s_jacobson_radical};
use srlab_core::krull::{self, ChainReading};
use srlab_core::localize::check_localization_theorems;
use srlab_core::multset::MultSet;
use srlab_core::sweep::{run_survey, CheckId, ExecMode, SweepConfig};
use srlab_core::{Elem, FiniteRing};

use crate::report::{elem_json, elems_json, ideal_json, mult_set_json, RecordJson};

fn base_inputs(r: &FiniteRing, s: &MultSet) -> serde_json::Value {
    json!({
        "ring": r.recipe(),
        "order": r.order(),
        "mult_set": mult_set_json(s),
    })
}

/// Full classification of one (ring, mult set) pair: ring facts, the ideal
/// lattice with per-ideal verdicts, element classes, ring-level
/// S-properties, and a localization summary.
pub fn cmd_explore(r: &FiniteRing, s: &MultSet) -> Vec<RecordJson> {
    let mut records = Vec::new();

    records.push(
        RecordJson::new("ring-axioms", r.validate().is_ok()).with_data(json!({
            "order": r.order(),
            "units": elems_json(r, r.units()),
            "zero_divisors": elems_json(r, r.zero_divisors()),
            "boolean": r.is_boolean(),
            "plain_integral_domain": classify::is_integral_domain(r),
            "plain_field": classify::is_field(r),
            "jacobson_radical": ideal_json(&jacobson_radical(r)),
            "s_artinian": "automatic: every descending chain in a finite ring stabilizes",
        })),
    );

    let sdom = classify::is_s_integral_domain(r, s);
    let mut rec = RecordJson::info("s-integral-domain", sdom.verdict).with_witness(r, &sdom);
    if let Some(t) = sdom.uniform_s() {
        if !recheck::uniform_s_for_domain(r, s, t) {
            rec = rec.force_fail("witness failed re-validation");
        }
    }
    records.push(rec);

    let cancel = classify::has_s_cancellation(r, s);
    let mut rec = RecordJson::info("s-cancellation", cancel.verdict).with_witness(r, &cancel);
    if let Some(t) = cancel.uniform_s() {
        if !recheck::uniform_s_for_cancellation(r, s, t) {
            rec = rec.force_fail("witness failed re-validation");
        }
    }
    records.push(rec);

    if s.contains_zero() {
        records.push(RecordJson::info("s-field", false).with_flag("skipped: 0 ∈ S"));
    } else {
        let sfield = classify::is_s_field(r, s).expect("0 not in S");
        let mut rec = RecordJson::info("s-field", sfield.verdict).with_witness(r, &sfield);
        if let Some(t) = sfield.uniform_s() {
            if !recheck::uniform_s_for_maximal(r, &srlab_core::ideal::zero_ideal(r), s, t) {
                rec = rec.force_fail("witness failed re-validation");
            }
        }
        records.push(rec);
    }

    let sreduced = classify::is_s_reduced(r, s);
    records.push(RecordJson::info("s-reduced", sreduced.verdict).with_witness(r, &sreduced));

    records.push(RecordJson::info("mult-set-proper", s.is_proper()).with_data(mult_set_json(s)));

    // ideal lattice with per-ideal verdicts
    for ideal in enumerate_ideals(r) {
        let gens: Vec<usize> = ideal.generators().iter().map(|g| g.idx()).collect();
        let name = format!(
            "ideal-({})",
            gens.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        let disjoint = ideal.members() & s.members() == 0;
        let proper = classify::is_s_proper(r, &ideal, s);
        let mut data = json!({
            "members": elems_json(r, ideal.elems()),
            "proper": ideal.is_proper(),
            "radical": ideal_json(&radical(&ideal)),
            "s_proper": proper.verdict,
            "classically_prime": classify::is_prime(r, &ideal),
            "classically_maximal": classify::is_maximal(r, &ideal),
        });
        if disjoint {
            let prime = classify::is_s_prime(r, &ideal, s).expect("disjoint");
            let maximal = classify::is_s_maximal(r, &ideal, s).expect("disjoint");
            let primary = krull::is_s_primary(r, &ideal, s).expect("disjoint");
            let obj = data.as_object_mut().expect("data is an object");
            obj.insert("s_prime".into(), json!(prime.verdict));
            obj.insert("s_maximal".into(), json!(maximal.verdict));
            obj.insert("s_primary".into(), json!(primary.verdict));
            obj.insert(
                "s_primary_note".into(),
                json!("definition imported from the cited literature"),
            );
        } else {
            let obj = data.as_object_mut().expect("data is an object");
            obj.insert("meets_s".into(), json!(true));
        }
        records.push(RecordJson::new(name, true).with_data(data));
    }

    if !s.contains_zero() {
        let sjac = s_jacobson_radical(r, s).expect("same ring");
        records.push(
            RecordJson::new("s-jacobson-radical", true)
                .with_data(ideal_json(&sjac))
                .with_flag("modeled definition: intersection of S-maximal ideals disjoint from S"),
        );
    }

    // element classes
    let classes = r
        .elements()
        .map(|a| {
            json!({
                "element": elem_json(r, a),
                "s_idempotent": classify::is_s_idempotent(r, a, s).verdict,
                "s_nilpotent": classify::is_s_nilpotent(r, a, s).verdict,
                "s_zero": classify::is_s_zero(r, a, s).verdict,
                "s_non_zero": classify::is_s_non_zero(r, a, s).verdict,
            })
        })
        .collect::<Vec<_>>();
    records.push(RecordJson::new("element-classes", true).with_data(json!(classes)));

    records.extend(localization_records(r, s));
    records
}

fn localization_records(r: &FiniteRing, s: &MultSet) -> Vec<RecordJson> {
    let report = check_localization_theorems(r, s);
    let loc = &report.localization;
    let mut records = Vec::new();

    let oracle_ok = if loc.degenerate_zero_ring {
        true
    } else {
        let oracle = loc.oracle_quotient().expect("kernel proper");
        srlab_core::iso::are_isomorphic(&loc.local_ring, &oracle.quotient)
    };
    let units_ok = loc.degenerate_zero_ring
        || s.elems()
            .all(|t| loc.local_ring.units_mask() & loc.phi(t).bit() != 0);
    let kernel_elems: Vec<String> = loc.kernel.elems().map(|e| e.to_string()).collect();
    let mut rec = RecordJson::new("localization", oracle_ok && units_ok)
        .with_data(json!({
            "local_order": loc.local_ring.order(),
            "kernel": ideal_json(&loc.kernel),
            "phi_s": mult_set_json(&loc.phi_s),
            "unit_images": units_ok,
            "oracle_isomorphic": oracle_ok,
            "phi_injective": loc.phi_injective(),
        }))
        .with_detail(format!(
            "local order {}, kernel {{{}}}, unit images {}, oracle isomorphic {}",
            loc.local_ring.order(),
            kernel_elems.join(","),
            if units_ok { "ok" } else { "BROKEN" },
            oracle_ok,
        ));
    if loc.degenerate_zero_ring {
        rec = rec.with_flag("degenerate: 0 ∈ S, zero ring");
    }
    records.push(rec);

    for (name, outcome) in report.clauses() {
        let mut rec = RecordJson::new(format!("transfer-{name}"), outcome.passed());
        if name == "s-domain-iff-local-domain" {
            rec = rec.with_flag(
                "finite S: the implication is an equivalence on every instance; \
                 no finite counterexample to the converse exists",
            );
        }
        match outcome {
            srlab_core::localize::ClauseOutcome::Skipped { reason } => {
                rec = rec.with_flag(format!("skipped: {reason}"));
            }
            srlab_core::localize::ClauseOutcome::Fails { detail } => {
                rec = rec.with_detail(detail.clone());
            }
            srlab_core::localize::ClauseOutcome::Holds => {}
        }
        records.push(rec);
    }
    records
}

/// `localize` subcommand: the construction summary plus transfer clauses.
pub fn cmd_localize(r: &FiniteRing, s: &MultSet) -> Vec<RecordJson> {
    let mut records = localization_records(r, s);
    for rec in &mut records {
        if rec.inputs.is_none() {
            rec.inputs = Some(base_inputs(r, s));
        }
    }
    records
}

/// `krull` subcommand: power chain, containment and annihilator witnesses,
/// decomposition, dimension, and the Jacobson corollary search.
pub fn cmd_krull(
    r: &FiniteRing,
    s: &MultSet,
    ideal_gens: &[Elem],
    reading: ChainReading,
) -> Vec<RecordJson> {
    let ideal = srlab_core::ideal::generated_ideal(r, ideal_gens);
    let mut records = Vec::new();
    let inputs = json!({
        "ring": r.recipe(),
        "mult_set": mult_set_json(s),
        "ideal": ideal_json(&ideal),
        "chain_reading": match reading {
            ChainReading::Corrected => "corrected",
            ChainReading::Literal => "literal",
        },
    });

    match krull::power_intersection(&ideal) {
        Ok(chain) => {
            records.push(
                RecordJson::new("power-chain", true)
                    .with_inputs(inputs.clone())
                    .with_data(json!({
                        "stabilization_index": chain.stabilization_index,
                        "powers": chain.powers.iter().map(ideal_json).collect::<Vec<_>>(),
                        "intersection": ideal_json(&chain.intersection),
                    })),
            );
        }
        Err(e) => {
            records.push(
                RecordJson::new("power-chain", false)
                    .with_inputs(inputs.clone())
                    .with_detail(e.to_string()),
            );
            return records;
        }
    }

    let disjoint = ideal.members() & s.members() == 0;
    if !disjoint {
        records.push(
            RecordJson::info("krull-witnesses", false)
                .with_flag("skipped: ideal meets the mult set"),
        );
    } else {
        match krull::pmsb_witness(r, &ideal, s) {
            Ok(w) => {
                let mut rec =
                    RecordJson::new("radical-power-containment", w.verdict).with_witness(r, &w);
                if let srlab_core::classify::Evidence::PowerWitness { s: t, m } = w.evidence {
                    if !recheck::power_witness_holds(r, &ideal, t, m) {
                        rec = rec.force_fail("witness failed re-validation");
                    }
                }
                records.push(rec);
            }
            Err(e) => records.push(
                RecordJson::new("radical-power-containment", false).with_detail(e.to_string()),
            ),
        }
        match krull::krull_annihilator(r, &ideal, s) {
            Ok(k) => {
                let mut rec =
                    RecordJson::new("intersection-annihilator", true).with_witness(r, &k.shift);
                if let srlab_core::classify::Evidence::ShiftAnnihilator { t, a } = k.shift.evidence
                {
                    if !recheck::shift_annihilates(r, &ideal, s, &k.chain.intersection, t, a) {
                        rec = rec.force_fail("witness failed re-validation");
                    }
                }
                rec = rec.with_data(json!({
                    "uniform_t": k.uniform.map(|t| elem_json(r, t)),
                    "intersection": ideal_json(&k.chain.intersection),
                    "s_domain_hypothesis": classify::is_s_integral_domain(r, s).verdict,
                }));
                records.push(rec);
            }
            Err(e) => records.push(
                RecordJson::new("intersection-annihilator", false).with_detail(e.to_string()),
            ),
        }
        match krull::s_primary_decomposition(r, &ideal, s) {
            Ok(comps) => {
                let meet = comps.iter().fold(r.full_mask(), |m, q| m & q.members());
                records.push(
                    RecordJson::new("s-primary-decomposition", meet == ideal.members())
                        .with_data(json!({
                            "components": comps.iter().map(ideal_json).collect::<Vec<_>>(),
                            "radicals": comps
                                .iter()
                                .map(|q| ideal_json(&radical(q)))
                                .collect::<Vec<_>>(),
                        }))
                        .with_flag("S-primary definition imported from the cited literature"),
                );
            }
            Err(e) => records
                .push(RecordJson::new("s-primary-decomposition", false).with_detail(e.to_string())),
        }
        match krull::check_product_decomposition(r, s, &ideal, reading) {
            Ok(rep) => {
                let mut rec =
                    RecordJson::new("product-of-primaries", rep.passed()).with_data(json!({
                        "merged_components": rep.merged.iter().map(ideal_json).collect::<Vec<_>>(),
                        "radicals_comaximal": rep.radicals_comaximal,
                        "product_equals_intersection": rep.product_equals_intersection,
                        "equals_extension": rep.equals_extension,
                    }));
                if let Some(reason) = &rep.skipped {
                    rec = rec.with_flag(format!("skipped: {reason}"));
                }
                records.push(rec);
            }
            Err(e) => records
                .push(RecordJson::new("product-of-primaries", false).with_detail(e.to_string())),
        }
    }

    if !s.contains_zero() {
        let (dim, chain) = krull::s_dimension(r, s, reading).expect("0 not in S");
        records.push(RecordJson::new("s-dimension", true).with_data(json!({
            "dimension": dim,
            "longest_chain": chain.primes.iter().map(ideal_json).collect::<Vec<_>>(),
        })));
        match krull::jacobson_corollary_check(r, s) {
            Ok(rep) => records.push(
                RecordJson::new("jacobson-corollary", rep.all_found).with_data(json!({
                    "entries": rep
                        .entries
                        .iter()
                        .map(|e| {
                            json!({
                                "ideal": ideal_json(&e.ideal),
                                "is_s_jacobson_radical": e.is_s_jacobson,
                                "witness": e.witness.map(|(t, a)| json!({
                                    "t": elem_json(r, t),
                                    "a": elem_json(r, a),
                                })),
                            })
                        })
                        .collect::<Vec<_>>(),
                })),
            ),
            Err(e) => records
                .push(RecordJson::new("jacobson-corollary", false).with_detail(e.to_string())),
        }
    }

    for rec in &mut records {
        if rec.inputs.is_none() {
            rec.inputs = Some(inputs.clone());
        }
    }
    records
}

/// `survey` subcommand: run the named invariant checks over the inventory.
pub fn cmd_survey(bound: usize, checks: &[CheckId], mode: ExecMode) -> Vec<RecordJson> {
    let cfg = SweepConfig::with_bound(bound);
    let outcome = run_survey(&cfg, checks, mode);
    let mut records = Vec::new();
    records.push(
        RecordJson::new("inventory", true)
            .with_data(json!({
                "rings": outcome.ring_count,
                "pairs": outcome.pair_count,
            }))
            .with_detail(format!(
                "{} rings, {} (ring, mult-set) pairs",
                outcome.ring_count, outcome.pair_count
            )),
    );
    for rep in &outcome.reports {
        let mut rec = RecordJson::new(rep.check.name(), rep.counterexamples.is_empty())
            .with_data(json!({
                "instances": rep.instances,
                "counterexamples": rep
                    .counterexamples
                    .iter()
                    .map(|ce| {
                        json!({
                            "ring": ce.ring,
                            "mult_set_generators": ce.mult_set_gens,
                            "detail": ce.detail,
                        })
                    })
                    .collect::<Vec<_>>(),
            }))
            .expect_verdict(true);
        rec = if rep.counterexamples.is_empty() {
            rec.with_detail(format!("{} instances, 0 counterexamples", rep.instances))
        } else {
            rec.with_detail(format!(
                "{} instances, {} counterexample(s)",
                rep.instances,
                rep.counterexamples.len()
            ))
        };
        records.push(rec);
    }
    records
}
