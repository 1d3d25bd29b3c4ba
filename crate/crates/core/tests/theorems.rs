//! Mid-scale theorem sweep and property tests over the algebraic core.
//! The acceptance suite in the CLI crate runs the full-scale version.

use proptest::prelude::*;
use srlab_core::classify;
use srlab_core::ideal::{
    enumerate_ideals, generated_ideal, ideal_intersect, ideal_product, radical, s_radical,
};
use srlab_core::iso::are_isomorphic;
use srlab_core::localize::localize;
use srlab_core::multset::{closed_mult_sets, mult_closure};
use srlab_core::ring::make_zn;
use srlab_core::sweep::{run_survey, CheckId, ExecMode, SweepConfig};
use srlab_core::Elem;

#[test]
fn survey_bound_ten_is_clean() {
    let cfg = SweepConfig::with_bound(10);
    let outcome = run_survey(&cfg, &CheckId::ALL, ExecMode::default());
    let bad: Vec<_> = outcome
        .reports
        .iter()
        .flat_map(|r| r.counterexamples.iter())
        .collect();
    assert!(bad.is_empty(), "counterexamples: {bad:?}");
}

#[test]
fn localization_matches_oracle_on_cyclic_rings() {
    for n in 2..=16usize {
        let r = make_zn(n).unwrap();
        for s in closed_mult_sets(&r) {
            let loc = localize(&r, &s);
            let oracle = loc.oracle_quotient().unwrap();
            assert!(
                are_isomorphic(&loc.local_ring, &oracle.quotient),
                "Z{n} at {:?}",
                s.generators()
            );
        }
    }
}

#[test]
fn finite_s_domains_are_s_fields_on_cyclic_rings() {
    for n in 2..=16usize {
        let r = make_zn(n).unwrap();
        for s in closed_mult_sets(&r) {
            if classify::is_s_integral_domain(&r, &s).verdict {
                assert!(
                    classify::is_s_field(&r, &s).unwrap().verdict,
                    "Z{n} at {:?}",
                    s.generators()
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn mult_closure_is_idempotent(n in 2usize..24, gens in proptest::collection::vec(0u16..24, 0..4)) {
        let r = make_zn(n).unwrap();
        let gens: Vec<Elem> = gens.into_iter().map(|g| Elem(g % n as u16)).collect();
        let s = mult_closure(&r, &gens);
        let again = mult_closure(&r, &s.elems().collect::<Vec<_>>());
        prop_assert_eq!(s.members(), again.members());
    }

    #[test]
    fn radical_chain_and_trivial_s(n in 2usize..24, gens in proptest::collection::vec(0u16..24, 0..3)) {
        let r = make_zn(n).unwrap();
        let gens: Vec<Elem> = gens.into_iter().map(|g| Elem(g % n as u16)).collect();
        let i = generated_ideal(&r, &gens);
        let rad = radical(&i);
        prop_assert!(rad.contains_ideal(&i));
        let s1 = mult_closure(&r, &[]);
        let srad = s_radical(&i, &s1).unwrap();
        prop_assert_eq!(srad.members(), rad.members());
        for s in closed_mult_sets(&r).into_iter().take(6) {
            let sr = s_radical(&i, &s).unwrap();
            prop_assert!(sr.contains_ideal(&rad));
        }
    }

    #[test]
    fn product_refines_intersection(n in 2usize..17) {
        let r = make_zn(n).unwrap();
        let ideals = enumerate_ideals(&r);
        for a in &ideals {
            for b in &ideals {
                let p = ideal_product(a, b).unwrap();
                let m = ideal_intersect(a, b).unwrap();
                prop_assert!(m.contains_ideal(&p));
            }
        }
    }
}
