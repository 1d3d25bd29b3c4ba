//! Exhaustive verification sweeps over (ring, multiplicative set) pairs.
//!
//! Every invariant the theory promises is evaluated for every pair in a
//! deterministic inventory; zero counterexamples are expected, and any
//! counterexample is dumped in reproducible ring-spec syntax. Pairs fan
//! out across threads when the `parallel` feature is on; results merge in
//! input order either way.

use std::time::{Duration, Instant};

use crate::classify;
use crate::ideal::{enumerate_ideals, radical, zero_ideal, Ideal};
use crate::iso::{apply_iso_ideal, apply_iso_mult_set, are_isomorphic, permuted_copy};
use crate::krull;
use crate::localize::check_localization_theorems;
use crate::multset::{closed_mult_sets, MultSet};
use crate::ring::{direct_product, idealization, make_zn, quotient_ring, FiniteRing, ModuleSpec};

/// How to drive the per-pair fan-out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    /// Rayon when the `parallel` feature is enabled; otherwise falls back
    /// to sequential.
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Order-preserving indexed map under the chosen mode.
pub fn indexed_map<T, F>(mode: ExecMode, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode {
        ExecMode::Sequential => (0..count).map(f).collect(),
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            (0..count).into_par_iter().map(f).collect()
        }
        #[cfg(not(feature = "parallel"))]
        ExecMode::Parallel => (0..count).map(f).collect(),
    }
}

/// Bounds for the sweep inventory.
#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    /// Cyclic rings Z_n up to this order.
    pub max_zn: usize,
    /// Two-factor products (and powers of Z2) up to this order.
    pub max_product: usize,
    /// Quotients of cyclic rings with quotient order up to this bound.
    pub max_quotient: usize,
    /// Idealizations up to this order.
    pub max_idealization: usize,
    /// Isomorphism-transport checks only run on rings up to this order.
    pub iso_transport_max: usize,
}

impl SweepConfig {
    /// The full acceptance-scale sweep.
    pub fn acceptance() -> Self {
        SweepConfig {
            max_zn: 24,
            max_product: 16,
            max_quotient: 16,
            max_idealization: 16,
            iso_transport_max: 8,
        }
    }

    /// Everything bounded by one order.
    pub fn with_bound(n: usize) -> Self {
        SweepConfig {
            max_zn: n,
            max_product: n.min(16),
            max_quotient: n.min(16),
            max_idealization: n.min(16),
            iso_transport_max: n.min(8),
        }
    }
}

/// Canonical-recipe ring inventory. Duplicate isomorphic rings are
/// permitted; enumeration is by construction recipe, not isomorphism class.
pub fn ring_inventory(cfg: &SweepConfig) -> Vec<FiniteRing> {
    let mut rings = Vec::new();
    for n in 2..=cfg.max_zn {
        rings.push(make_zn(n).expect("order in range"));
    }
    for a in 2..=cfg.max_product {
        for b in a..=cfg.max_product {
            if a * b > cfg.max_product {
                continue;
            }
            let ra = make_zn(a).expect("order in range");
            let rb = make_zn(b).expect("order in range");
            rings.push(direct_product(&ra, &rb).expect("within cap"));
        }
    }
    // Boolean powers (Z2)^k beyond two factors
    let z2 = make_zn(2).expect("Z2");
    let mut boolean = direct_product(&z2, &z2).expect("Z2xZ2");
    loop {
        if boolean.order() * 2 > cfg.max_product {
            break;
        }
        boolean = direct_product(&boolean, &z2).expect("within cap");
        rings.push(boolean.clone());
    }
    for n in 4..=cfg.max_zn {
        let zn = make_zn(n).expect("order in range");
        for ideal in enumerate_ideals(&zn) {
            if ideal.is_zero() || !ideal.is_proper() {
                continue;
            }
            let q_order = n / ideal.len();
            if q_order < 2 || q_order > cfg.max_quotient {
                continue;
            }
            rings.push(quotient_ring(&zn, &ideal).expect("proper ideal").quotient);
        }
    }
    for k in 2..=cfg.max_idealization {
        if k * k > cfg.max_idealization {
            break;
        }
        let zk = make_zn(k).expect("order in range");
        rings.push(idealization(&zk, ModuleSpec::SelfModule).expect("within cap"));
    }
    for n in 4..=cfg.max_zn {
        for m in 2..n {
            if n % m != 0 || n * m > cfg.max_idealization {
                continue;
            }
            let zn = make_zn(n).expect("order in range");
            rings.push(idealization(&zn, ModuleSpec::Cyclic(m)).expect("divisor module"));
        }
    }
    rings
}

/// The named invariant checks the survey can run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckId {
    SDomainIffZeroSPrime,
    SDomainIffSCancellation,
    SPrimeIffQuotientSDomain,
    SMaximalIffQuotientSField,
    SFieldIffNoSProper,
    SFieldImpliesSDomain,
    SubsetMonotonicity,
    BooleanSPrimeImpliesSMaximal,
    SDomainImpliesSReduced,
    SIdempotentsLieInS,
    SPrimeQuotientSField,
    IsoTransport,
    LocalizationOracleIso,
    LocalizationUnits,
    SDomainIffLocalDomain,
    SFieldTransfer,
    SDomainImpliesSField,
    PowerChainDescent,
    PmsbExists,
    KrullAnnihilatorExists,
    SPrimaryDecompositionExact,
}

impl CheckId {
    pub const ALL: [CheckId; 21] = [
        CheckId::SDomainIffZeroSPrime,
        CheckId::SDomainIffSCancellation,
        CheckId::SPrimeIffQuotientSDomain,
        CheckId::SMaximalIffQuotientSField,
        CheckId::SFieldIffNoSProper,
        CheckId::SFieldImpliesSDomain,
        CheckId::SubsetMonotonicity,
        CheckId::BooleanSPrimeImpliesSMaximal,
        CheckId::SDomainImpliesSReduced,
        CheckId::SIdempotentsLieInS,
        CheckId::SPrimeQuotientSField,
        CheckId::IsoTransport,
        CheckId::LocalizationOracleIso,
        CheckId::LocalizationUnits,
        CheckId::SDomainIffLocalDomain,
        CheckId::SFieldTransfer,
        CheckId::SDomainImpliesSField,
        CheckId::PowerChainDescent,
        CheckId::PmsbExists,
        CheckId::KrullAnnihilatorExists,
        CheckId::SPrimaryDecompositionExact,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::SDomainIffZeroSPrime => "s-domain-iff-zero-s-prime",
            CheckId::SDomainIffSCancellation => "s-domain-iff-s-cancellation",
            CheckId::SPrimeIffQuotientSDomain => "s-prime-iff-quotient-s-domain",
            CheckId::SMaximalIffQuotientSField => "s-maximal-iff-quotient-s-field",
            CheckId::SFieldIffNoSProper => "s-field-iff-no-s-proper",
            CheckId::SFieldImpliesSDomain => "s-field-implies-s-domain",
            CheckId::SubsetMonotonicity => "subset-monotonicity",
            CheckId::BooleanSPrimeImpliesSMaximal => "boolean-s-prime-implies-s-maximal",
            CheckId::SDomainImpliesSReduced => "s-domain-implies-s-reduced",
            CheckId::SIdempotentsLieInS => "s-idempotents-lie-in-s",
            CheckId::SPrimeQuotientSField => "s-prime-quotient-s-field",
            CheckId::IsoTransport => "iso-transport",
            CheckId::LocalizationOracleIso => "localization-oracle-iso",
            CheckId::LocalizationUnits => "localization-units",
            CheckId::SDomainIffLocalDomain => "s-domain-iff-local-domain",
            CheckId::SFieldTransfer => "s-field-transfer",
            CheckId::SDomainImpliesSField => "s-domain-implies-s-field",
            CheckId::PowerChainDescent => "power-chain-descent",
            CheckId::PmsbExists => "pmsb-exists",
            CheckId::KrullAnnihilatorExists => "krull-annihilator-exists",
            CheckId::SPrimaryDecompositionExact => "s-primary-decomposition-exact",
        }
    }

    pub fn parse(name: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name() == name)
    }
}

/// A failed invariant instance, dumped in reproducible spec syntax.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub check: CheckId,
    pub ring: String,
    pub mult_set_gens: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct CheckReport {
    pub check: CheckId,
    pub instances: usize,
    pub counterexamples: Vec<Counterexample>,
}

pub struct SurveyOutcome {
    pub reports: Vec<CheckReport>,
    pub ring_count: usize,
    pub pair_count: usize,
    pub elapsed: Duration,
}

impl SurveyOutcome {
    pub fn total_counterexamples(&self) -> usize {
        self.reports.iter().map(|r| r.counterexamples.len()).sum()
    }
}

struct PairOutcome {
    s_domain: bool,
    instances: Vec<(CheckId, usize)>,
    counterexamples: Vec<Counterexample>,
}

struct PairRunner<'a> {
    ring: &'a FiniteRing,
    set: &'a MultSet,
    checks: &'a [CheckId],
    iso_transport_max: usize,
    outcome: PairOutcome,
}

impl<'a> PairRunner<'a> {
    fn enabled(&self, id: CheckId) -> bool {
        self.checks.contains(&id)
    }

    fn count(&mut self, id: CheckId) {
        match self.outcome.instances.iter_mut().find(|(c, _)| *c == id) {
            Some((_, n)) => *n += 1,
            None => self.outcome.instances.push((id, 1)),
        }
    }

    fn fail(&mut self, id: CheckId, detail: String) {
        self.outcome.counterexamples.push(Counterexample {
            check: id,
            ring: self.ring.recipe().to_string(),
            mult_set_gens: self.set.generators().iter().map(|g| g.idx()).collect(),
            detail,
        });
    }

    fn check(&mut self, id: CheckId, ok: bool, detail: impl FnOnce() -> String) {
        self.count(id);
        if !ok {
            self.fail(id, detail());
        }
    }

    fn run(mut self) -> PairOutcome {
        let (r, s) = (self.ring, self.set);
        let ideals = enumerate_ideals(r);
        let disjoint: Vec<&Ideal> = ideals
            .iter()
            .filter(|i| i.members() & s.members() == 0)
            .collect();

        let s_domain = classify::is_s_integral_domain(r, s);
        self.outcome.s_domain = s_domain.verdict;
        let s_field = classify::is_s_field(r, s).expect("0 not in S");

        if self.enabled(CheckId::SDomainIffZeroSPrime) {
            let zp = classify::is_s_prime(r, &zero_ideal(r), s).expect("(0) is disjoint from S");
            self.check(
                CheckId::SDomainIffZeroSPrime,
                s_domain.verdict == zp.verdict,
                || {
                    format!(
                        "S-domain={} but (0) S-prime={}",
                        s_domain.verdict, zp.verdict
                    )
                },
            );
        }

        if self.enabled(CheckId::SDomainIffSCancellation) {
            let cancel = classify::has_s_cancellation(r, s);
            self.check(
                CheckId::SDomainIffSCancellation,
                s_domain.verdict == cancel.verdict,
                || {
                    format!(
                        "S-domain={} but S-cancellation={}",
                        s_domain.verdict, cancel.verdict
                    )
                },
            );
        }

        if self.enabled(CheckId::SPrimeIffQuotientSDomain) {
            for p in &disjoint {
                let prime = classify::is_s_prime(r, p, s).expect("disjoint");
                let qm = quotient_ring(r, p).expect("disjoint ideals are proper");
                let sbar = qm.image_mult_set(s);
                let qdom = classify::is_s_integral_domain(&qm.quotient, &sbar);
                self.check(
                    CheckId::SPrimeIffQuotientSDomain,
                    prime.verdict == qdom.verdict,
                    || {
                        format!(
                            "P={p:?}: S-prime={} but R/P S̄-domain={}",
                            prime.verdict, qdom.verdict
                        )
                    },
                );
            }
        }

        if self.enabled(CheckId::SMaximalIffQuotientSField) {
            for m in &disjoint {
                let maximal = classify::is_s_maximal(r, m, s).expect("disjoint");
                let qm = quotient_ring(r, m).expect("proper");
                let sbar = qm.image_mult_set(s);
                let qfield = classify::is_s_field(&qm.quotient, &sbar)
                    .expect("0 in S̄ would need M to meet S");
                self.check(
                    CheckId::SMaximalIffQuotientSField,
                    maximal.verdict == qfield.verdict,
                    || {
                        format!(
                            "M={m:?}: S-maximal={} but R/M S̄-field={}",
                            maximal.verdict, qfield.verdict
                        )
                    },
                );
            }
        }

        if self.enabled(CheckId::SFieldIffNoSProper) {
            let proper_exists = ideals
                .iter()
                .find(|i| classify::is_s_proper(r, i, s).verdict);
            self.check(
                CheckId::SFieldIffNoSProper,
                s_field.verdict == proper_exists.is_none(),
                || {
                    format!(
                        "S-field={} but S-proper ideal {proper_exists:?}",
                        s_field.verdict
                    )
                },
            );
        }

        if self.enabled(CheckId::SFieldImpliesSDomain) {
            self.check(
                CheckId::SFieldImpliesSDomain,
                !s_field.verdict || s_domain.verdict,
                || "S-field that is not an S-integral domain".to_string(),
            );
        }

        if self.enabled(CheckId::BooleanSPrimeImpliesSMaximal) && r.is_boolean() {
            for p in &disjoint {
                if !classify::is_s_prime(r, p, s).expect("disjoint").verdict {
                    continue;
                }
                let maximal = classify::is_s_maximal(r, p, s).expect("disjoint");
                self.check(
                    CheckId::BooleanSPrimeImpliesSMaximal,
                    maximal.verdict,
                    || format!("Boolean ring: S-prime {p:?} is not S-maximal"),
                );
            }
        }

        if self.enabled(CheckId::SDomainImpliesSReduced) && s_domain.verdict {
            let reduced = classify::is_s_reduced(r, s);
            self.check(CheckId::SDomainImpliesSReduced, reduced.verdict, || {
                format!("S-domain that is not S-reduced: {:?}", reduced.evidence)
            });
            for a in r.elements() {
                let bad = classify::is_s_non_zero(r, a, s).verdict
                    && classify::is_s_nilpotent(r, a, s).verdict;
                self.check(CheckId::SDomainImpliesSReduced, !bad, || {
                    format!("element {a} is both S-non-zero and S-nilpotent")
                });
            }
        }

        if self.enabled(CheckId::SIdempotentsLieInS) && s_domain.verdict && s.is_proper() {
            for a in r.elements().skip(1) {
                if classify::is_s_idempotent(r, a, s).verdict {
                    self.check(CheckId::SIdempotentsLieInS, s.contains(a), || {
                        format!("nonzero S-idempotent {a} outside S")
                    });
                }
            }
        }

        if self.enabled(CheckId::SPrimeQuotientSField) {
            for p in &disjoint {
                if !classify::is_s_prime(r, p, s).expect("disjoint").verdict {
                    continue;
                }
                let qm = quotient_ring(r, p).expect("proper");
                let sbar = qm.image_mult_set(s);
                let qfield = classify::is_s_field(&qm.quotient, &sbar).expect("S̄ avoids 0");
                self.check(CheckId::SPrimeQuotientSField, qfield.verdict, || {
                    format!("S-prime {p:?} with R/P not an S̄-field")
                });
            }
        }

        if self.enabled(CheckId::IsoTransport) && r.order() <= self.iso_transport_max {
            self.iso_transport(&ideals);
        }

        let localization_checks = [
            CheckId::LocalizationOracleIso,
            CheckId::LocalizationUnits,
            CheckId::SDomainIffLocalDomain,
            CheckId::SFieldTransfer,
            CheckId::SDomainImpliesSField,
        ];
        if localization_checks.iter().any(|&c| self.enabled(c)) {
            let report = check_localization_theorems(r, s);
            let loc = &report.localization;
            if self.enabled(CheckId::LocalizationOracleIso) {
                let oracle = loc.oracle_quotient().expect("kernel is proper");
                self.check(
                    CheckId::LocalizationOracleIso,
                    are_isomorphic(&loc.local_ring, &oracle.quotient),
                    || {
                        format!(
                            "fraction ring (order {}) not isomorphic to R/kernel (order {})",
                            loc.local_ring.order(),
                            oracle.quotient.order()
                        )
                    },
                );
            }
            if self.enabled(CheckId::LocalizationUnits) {
                let units = loc.local_ring.units_mask();
                let all_units = s.elems().all(|t| units & loc.phi(t).bit() != 0);
                self.check(CheckId::LocalizationUnits, all_units, || {
                    "some φ(s) is not a unit in the localization".to_string()
                });
                if s.is_proper() {
                    self.check(
                        CheckId::LocalizationUnits,
                        loc.phi_injective() && loc.phi_s.is_proper(),
                        || "S proper but φ not injective or φ(S) not proper".to_string(),
                    );
                }
            }
            if self.enabled(CheckId::SDomainIffLocalDomain) {
                self.check(
                    CheckId::SDomainIffLocalDomain,
                    report.domain_equivalence.passed(),
                    || format!("{:?}", report.domain_equivalence),
                );
            }
            if self.enabled(CheckId::SFieldTransfer) {
                self.check(
                    CheckId::SFieldTransfer,
                    report.field_forward.passed(),
                    || format!("{:?}", report.field_forward),
                );
                self.check(
                    CheckId::SFieldTransfer,
                    report.field_converse.passed(),
                    || format!("{:?}", report.field_converse),
                );
            }
            if self.enabled(CheckId::SDomainImpliesSField) {
                self.check(
                    CheckId::SDomainImpliesSField,
                    report.finite_domain_is_field.passed(),
                    || format!("{:?}", report.finite_domain_is_field),
                );
            }
        }

        if self.enabled(CheckId::PowerChainDescent) {
            for i in ideals.iter().filter(|i| i.is_proper()) {
                match krull::power_intersection(i) {
                    Ok(chain) => {
                        let descends = chain.powers.windows(2).all(|w| w[0].contains_ideal(&w[1]));
                        let bounded = chain.stabilization_index <= r.order();
                        self.check(CheckId::PowerChainDescent, descends && bounded, || {
                            format!("power chain of {i:?} fails descent or bound")
                        });
                    }
                    Err(e) => self.fail(CheckId::PowerChainDescent, e.to_string()),
                }
            }
        }

        if self.enabled(CheckId::PmsbExists) {
            for i in &disjoint {
                let ok = krull::pmsb_witness(r, i, s);
                self.check(CheckId::PmsbExists, ok.is_ok(), || {
                    format!("pmsb witness missing for {i:?}: {:?}", ok.as_ref().err())
                });
            }
        }

        if self.enabled(CheckId::KrullAnnihilatorExists) {
            for i in &disjoint {
                let ok = krull::krull_annihilator(r, i, s);
                self.check(CheckId::KrullAnnihilatorExists, ok.is_ok(), || {
                    format!(
                        "annihilator witness missing for {i:?}: {:?}",
                        ok.as_ref().err()
                    )
                });
            }
        }

        if self.enabled(CheckId::SPrimaryDecompositionExact) {
            for i in &disjoint {
                self.count(CheckId::SPrimaryDecompositionExact);
                match krull::s_primary_decomposition(r, i, s) {
                    Ok(comps) => self.verify_decomposition(r, s, i, &comps),
                    Err(e) => self.fail(
                        CheckId::SPrimaryDecompositionExact,
                        format!("decomposition of {i:?} failed: {e}"),
                    ),
                }
            }
        }

        self.outcome
    }

    fn verify_decomposition(&mut self, r: &FiniteRing, s: &MultSet, i: &Ideal, comps: &[Ideal]) {
        let meet = comps.iter().fold(r.full_mask(), |m, q| m & q.members());
        if meet != i.members() {
            self.fail(
                CheckId::SPrimaryDecompositionExact,
                format!("components of {i:?} intersect to {meet:#x}"),
            );
            return;
        }
        for q in comps {
            let w = krull::is_s_primary(r, q, s).expect("disjoint");
            if !w.verdict {
                self.fail(
                    CheckId::SPrimaryDecompositionExact,
                    format!("component {q:?} is not S-primary"),
                );
            }
            // rad(Q) never meets S, and must be S-prime
            let rad = radical(q);
            match classify::is_s_prime(r, &rad, s) {
                Ok(w) if w.verdict => {}
                other => self.fail(
                    CheckId::SPrimaryDecompositionExact,
                    format!("radical of component {q:?} is not S-prime: {other:?}"),
                ),
            }
        }
        for skip in 0..comps.len() {
            let rest = comps
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != skip)
                .fold(r.full_mask(), |m, (_, q)| m & q.members());
            if rest == i.members() {
                self.fail(
                    CheckId::SPrimaryDecompositionExact,
                    format!("component {skip} of {i:?} is redundant"),
                );
            }
        }
    }

    fn iso_transport(&mut self, ideals: &[Ideal]) {
        let (r, s) = (self.ring, self.set);
        let (copy, iso) = permuted_copy(r);
        let s2 = apply_iso_mult_set(&iso, s).expect("same ring");
        let pairs = [
            (
                classify::is_s_integral_domain(r, s).verdict,
                classify::is_s_integral_domain(&copy, &s2).verdict,
                "s-domain",
            ),
            (
                classify::has_s_cancellation(r, s).verdict,
                classify::has_s_cancellation(&copy, &s2).verdict,
                "s-cancellation",
            ),
            (
                classify::is_s_field(r, s).expect("0 not in S").verdict,
                classify::is_s_field(&copy, &s2)
                    .expect("0 not in f(S)")
                    .verdict,
                "s-field",
            ),
            (
                classify::is_s_reduced(r, s).verdict,
                classify::is_s_reduced(&copy, &s2).verdict,
                "s-reduced",
            ),
        ];
        for (before, after, what) in pairs {
            self.check(CheckId::IsoTransport, before == after, || {
                format!("{what} verdict changes under isomorphism: {before} vs {after}")
            });
        }
        for i in ideals {
            if i.members() & s.members() != 0 {
                continue;
            }
            let i2 = apply_iso_ideal(&iso, i).expect("same ring");
            let prime = classify::is_s_prime(r, i, s).expect("disjoint").verdict;
            let prime2 = classify::is_s_prime(&copy, &i2, &s2)
                .expect("disjoint")
                .verdict;
            let maximal = classify::is_s_maximal(r, i, s).expect("disjoint").verdict;
            let maximal2 = classify::is_s_maximal(&copy, &i2, &s2)
                .expect("disjoint")
                .verdict;
            let proper = classify::is_s_proper(r, i, s).verdict;
            let proper2 = classify::is_s_proper(&copy, &i2, &s2).verdict;
            self.check(
                CheckId::IsoTransport,
                prime == prime2 && maximal == maximal2 && proper == proper2,
                || format!("ideal {i:?} verdicts change under isomorphism"),
            );
        }
        for a in r.elements() {
            let fa = iso.apply(a);
            let same = classify::is_s_idempotent(r, a, s).verdict
                == classify::is_s_idempotent(&copy, fa, &s2).verdict
                && classify::is_s_nilpotent(r, a, s).verdict
                    == classify::is_s_nilpotent(&copy, fa, &s2).verdict
                && classify::is_s_zero(r, a, s).verdict
                    == classify::is_s_zero(&copy, fa, &s2).verdict
                && classify::is_s_non_zero(r, a, s).verdict
                    == classify::is_s_non_zero(&copy, fa, &s2).verdict;
            self.check(CheckId::IsoTransport, same, || {
                format!("element {a} classification changes under isomorphism")
            });
        }
    }
}

/// Run the requested checks over the whole inventory. Results are merged
/// in (ring, mult set) input order regardless of scheduling.
pub fn run_survey(cfg: &SweepConfig, checks: &[CheckId], mode: ExecMode) -> SurveyOutcome {
    let start = Instant::now();
    let rings = ring_inventory(cfg);
    let ring_sets: Vec<Vec<MultSet>> =
        indexed_map(mode, rings.len(), |i| closed_mult_sets(&rings[i]));
    let pairs: Vec<(usize, usize)> = ring_sets
        .iter()
        .enumerate()
        .flat_map(|(ri, sets)| (0..sets.len()).map(move |si| (ri, si)))
        .collect();

    let outcomes: Vec<PairOutcome> = indexed_map(mode, pairs.len(), |k| {
        let (ri, si) = pairs[k];
        PairRunner {
            ring: &rings[ri],
            set: &ring_sets[ri][si],
            checks,
            iso_transport_max: cfg.iso_transport_max,
            outcome: PairOutcome {
                s_domain: false,
                instances: Vec::new(),
                counterexamples: Vec::new(),
            },
        }
        .run()
    });

    let mut reports: Vec<CheckReport> = checks
        .iter()
        .map(|&check| CheckReport {
            check,
            instances: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    let mut add = |check: CheckId, instances: usize, ce: Option<Counterexample>| {
        if let Some(rep) = reports.iter_mut().find(|r| r.check == check) {
            rep.instances += instances;
            if let Some(ce) = ce {
                rep.counterexamples.push(ce);
            }
        }
    };
    for outcome in &outcomes {
        for &(check, n) in &outcome.instances {
            add(check, n, None);
        }
        for ce in &outcome.counterexamples {
            add(ce.check, 0, Some(ce.clone()));
        }
    }

    // subset monotonicity needs the per-ring verdict table
    if checks.contains(&CheckId::SubsetMonotonicity) {
        let mut offset = 0;
        for (ri, sets) in ring_sets.iter().enumerate() {
            let verdicts: Vec<bool> = (0..sets.len())
                .map(|si| outcomes[offset + si].s_domain)
                .collect();
            for (a, sa) in sets.iter().enumerate() {
                for (b, sb) in sets.iter().enumerate() {
                    if a == b || sa.members() & sb.members() != sa.members() {
                        continue; // need S_a ⊆ S_b
                    }
                    add(CheckId::SubsetMonotonicity, 1, None);
                    if verdicts[a] && !verdicts[b] {
                        add(
                            CheckId::SubsetMonotonicity,
                            0,
                            Some(Counterexample {
                                check: CheckId::SubsetMonotonicity,
                                ring: rings[ri].recipe().to_string(),
                                mult_set_gens: sa.generators().iter().map(|g| g.idx()).collect(),
                                detail: format!(
                                    "S1-domain but not S2-domain for S2 gens {:?}",
                                    sb.generators().iter().map(|g| g.idx()).collect::<Vec<_>>()
                                ),
                            }),
                        );
                    }
                }
            }
            offset += sets.len();
        }
    }

    SurveyOutcome {
        reports,
        ring_count: rings.len(),
        pair_count: pairs.len(),
        elapsed: start.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inventory_is_deterministic_and_valid() {
        let cfg = SweepConfig::with_bound(8);
        let rings = ring_inventory(&cfg);
        assert!(!rings.is_empty());
        for r in &rings {
            r.validate().unwrap();
        }
        let second: Vec<String> = ring_inventory(&cfg)
            .iter()
            .map(|r| r.recipe().into())
            .collect();
        let first: Vec<String> = rings.iter().map(|r| r.recipe().into()).collect();
        assert_eq!(first, second);
        // boolean powers present up to the bound
        assert!(first.iter().any(|r| r == "Z2xZ2xZ2"));
    }

    #[test]
    fn small_survey_is_clean() {
        let cfg = SweepConfig::with_bound(6);
        let outcome = run_survey(&cfg, &CheckId::ALL, ExecMode::default());
        assert_eq!(outcome.total_counterexamples(), 0, "{:?}", outcome.reports);
        assert!(outcome.pair_count > 0);
        for rep in &outcome.reports {
            assert!(rep.instances > 0, "check {:?} never ran", rep.check);
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let cfg = SweepConfig::with_bound(5);
        let seq = run_survey(&cfg, &CheckId::ALL, ExecMode::Sequential);
        let par = run_survey(&cfg, &CheckId::ALL, ExecMode::Parallel);
        assert_eq!(seq.pair_count, par.pair_count);
        for (a, b) in seq.reports.iter().zip(par.reports.iter()) {
            assert_eq!(a.check, b.check);
            assert_eq!(a.instances, b.instances);
            assert_eq!(a.counterexamples.len(), b.counterexamples.len());
        }
    }
}
