//! Decision procedures with witnesses for the S-variant properties of
//! elements, ideals, and rings.
//!
//! Every verdict comes with certifying data: the smallest uniform `s` that
//! serves the defining condition (existence follows from closure of `S`
//! under products — per-instance witnesses multiply into a uniform one on a
//! finite set), or the lexicographically first counterexample. The
//! `recheck` module re-validates witnesses straight from the definitions,
//! independently of the scan that produced them.

use crate::error::{Error, Result};
use crate::ideal::{enumerate_ideals, zero_ideal, Ideal};
use crate::multset::MultSet;
use crate::ring::{mask_min, Elem, FiniteRing};

/// Certifying data attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// Nothing to certify beyond re-running the scan.
    None,
    /// One `s` serves every instance of the defining condition.
    UniformS { s: Elem },
    /// `(s, n)` with `s * x^n` in the target (nilpotency-style witnesses).
    Exponent { s: Elem, n: usize },
    /// `(s, m)` with `s * rad(I)^m` inside `I`.
    PowerWitness { s: Elem, m: usize },
    /// `(t, a)` with `(t + a) * B = 0`.
    ShiftAnnihilator { t: Elem, a: Elem },
    /// A zero-product or bad pair.
    Pair { a: Elem, b: Elem },
    /// A cancellation-violating triple.
    Triple { a: Elem, b: Elem, c: Elem },
    /// An offending ideal.
    IdealCounterexample { ideal: Ideal },
    /// An element of the ideal that lies in `S`.
    MeetsS { elem: Elem },
    /// An `s` that annihilates the whole ideal (or element).
    Annihilator { s: Elem },
    /// A single violating element.
    Element { r: Elem },
    /// S-finiteness data: `s` and the finitely generated middle ideal.
    SFinite { s: Elem, ideal: Ideal },
}

/// Verdict plus evidence. `degenerate_zero_in_s` marks verdicts that are
/// only true because `0 ∈ S`; `finite_trivial` marks conditions that hold
/// automatically on finite rings.
#[derive(Debug, Clone)]
pub struct Witness {
    pub verdict: bool,
    pub evidence: Evidence,
    pub degenerate_zero_in_s: bool,
    pub finite_trivial: bool,
}

impl Witness {
    fn yes(evidence: Evidence) -> Self {
        Witness {
            verdict: true,
            evidence,
            degenerate_zero_in_s: false,
            finite_trivial: false,
        }
    }

    fn no(evidence: Evidence) -> Self {
        Witness {
            verdict: false,
            evidence,
            degenerate_zero_in_s: false,
            finite_trivial: false,
        }
    }

    fn degenerate(mut self, flag: bool) -> Self {
        self.degenerate_zero_in_s = flag;
        self
    }

    pub fn uniform_s(&self) -> Option<Elem> {
        match self.evidence {
            Evidence::UniformS { s } => Some(s),
            _ => None,
        }
    }
}

fn check_disjoint(i: &Ideal, s: &MultSet) -> Result<()> {
    if let Some(e) = mask_min(i.members() & s.members()) {
        Err(Error::DisjointnessViolation { elem: e.idx() })
    } else {
        Ok(())
    }
}

fn check_same_ring(r: &FiniteRing, s: &MultSet) -> Result<()> {
    if r.same_ring(s.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Smallest element of `mask ∩ S`, which the closure argument guarantees
/// to exist whenever every instance has some per-instance witness.
fn smallest_uniform(s: &MultSet, candidates: u128) -> Elem {
    mask_min(candidates & s.members())
        .expect("per-instance witnesses multiply into a uniform one on a closed finite set")
}

/// Is `R` an S-integral domain: one `s` with `sa = 0` or `sb = 0` for
/// every zero product `ab = 0`.
pub fn is_s_integral_domain(r: &FiniteRing, s: &MultSet) -> Witness {
    debug_assert!(r.same_ring(s.ring()));
    let ann = r.ann_masks();
    let mut candidates = u128::MAX;
    for a in r.elements() {
        for b in r.elements() {
            if r.mul(a, b) != r.zero() {
                continue;
            }
            let killers = ann[a.idx()] | ann[b.idx()];
            if killers & s.members() == 0 {
                return Witness::no(Evidence::Pair { a, b });
            }
            candidates &= killers;
        }
    }
    let s_min = smallest_uniform(s, candidates);
    Witness::yes(Evidence::UniformS { s: s_min }).degenerate(s.contains_zero())
}

/// S-cancellation: for every `a` with `sa != 0` for all `s`, `ab = ac`
/// forces `sb = sc` for some `s`. Uniform witness returned.
pub fn has_s_cancellation(r: &FiniteRing, s: &MultSet) -> Witness {
    debug_assert!(r.same_ring(s.ring()));
    let ann = r.ann_masks();
    let s_nonzero = |a: Elem| ann[a.idx()] & s.members() == 0;
    let mut candidates = u128::MAX;
    for a in r.elements().filter(|&a| s_nonzero(a)) {
        // counterexample scan in (b, c) order for this a; the first failing
        // a yields the lexicographically first triple overall
        for b in r.elements() {
            for c in r.elements() {
                if r.mul(a, b) == r.mul(a, c) {
                    let d = r.sub(b, c);
                    if ann[d.idx()] & s.members() == 0 {
                        return Witness::no(Evidence::Triple { a, b, c });
                    }
                }
            }
        }
        for d in r.elements() {
            if r.mul(a, d) == r.zero() {
                candidates &= ann[d.idx()];
            }
        }
    }
    let s_min = smallest_uniform(s, candidates);
    Witness::yes(Evidence::UniformS { s: s_min }).degenerate(s.contains_zero())
}

/// S-prime: `P` disjoint from `S` and one `s` with `sa ∈ P` or `sb ∈ P`
/// whenever `ab ∈ P`.
pub fn is_s_prime(r: &FiniteRing, p: &Ideal, s: &MultSet) -> Result<Witness> {
    check_same_ring(r, s)?;
    if !p.ring().same_ring(r) {
        return Err(Error::RingMismatch);
    }
    check_disjoint(p, s)?;
    let n = r.order();
    // push[a] = { x : x*a in P }
    let push: Vec<u128> = (0..n)
        .map(|a| {
            let mut m = 0u128;
            for x in r.elements() {
                if p.contains(r.mul(x, Elem(a as u16))) {
                    m |= x.bit();
                }
            }
            m
        })
        .collect();
    let mut candidates = u128::MAX;
    for a in r.elements() {
        for b in r.elements() {
            if !p.contains(r.mul(a, b)) {
                continue;
            }
            let k = push[a.idx()] | push[b.idx()];
            if k & s.members() == 0 {
                return Ok(Witness::no(Evidence::Pair { a, b }));
            }
            candidates &= k;
        }
    }
    Ok(Witness::yes(Evidence::UniformS {
        s: smallest_uniform(s, candidates),
    }))
}

/// S-maximal: `M` disjoint from `S` and one `s` such that every ideal
/// `J ⊇ M` has `sJ ⊆ M` or meets `S`.
pub fn is_s_maximal(r: &FiniteRing, m: &Ideal, s: &MultSet) -> Result<Witness> {
    check_same_ring(r, s)?;
    if !m.ring().same_ring(r) {
        return Err(Error::RingMismatch);
    }
    check_disjoint(m, s)?;
    let mut candidates = u128::MAX;
    for j in enumerate_ideals(r) {
        if !j.contains_ideal(m) {
            continue;
        }
        if j.members() & s.members() != 0 {
            continue;
        }
        // { x : x*J ⊆ M }
        let mut into_m = u128::MAX;
        for je in j.elems() {
            let mut pushers = 0u128;
            for x in r.elements() {
                if m.contains(r.mul(x, je)) {
                    pushers |= x.bit();
                }
            }
            into_m &= pushers;
        }
        if into_m & s.members() == 0 {
            return Ok(Witness::no(Evidence::IdealCounterexample { ideal: j }));
        }
        candidates &= into_m;
    }
    Ok(Witness::yes(Evidence::UniformS {
        s: smallest_uniform(s, candidates),
    }))
}

/// S-field: the zero ideal is S-maximal. Rejects `0 ∈ S`.
pub fn is_s_field(r: &FiniteRing, s: &MultSet) -> Result<Witness> {
    check_same_ring(r, s)?;
    if s.contains_zero() {
        return Err(Error::ZeroInMultSet);
    }
    is_s_maximal(r, &zero_ideal(r), s)
}

/// S-proper: disjoint from `S` and annihilated by no element of `S`.
pub fn is_s_proper(r: &FiniteRing, i: &Ideal, s: &MultSet) -> Witness {
    debug_assert!(r.same_ring(s.ring()) && i.ring().same_ring(r));
    if let Some(e) = mask_min(i.members() & s.members()) {
        return Witness::no(Evidence::MeetsS { elem: e });
    }
    for t in s.elems() {
        if i.elems().all(|j| r.mul(t, j) == r.zero()) {
            return Witness::no(Evidence::Annihilator { s: t });
        }
    }
    Witness::yes(Evidence::None)
}

/// `a^2 = s*a` for some `s ∈ S`.
pub fn is_s_idempotent(r: &FiniteRing, a: Elem, s: &MultSet) -> Witness {
    let sq = r.mul(a, a);
    for t in s.elems() {
        if r.mul(t, a) == sq {
            return Witness::yes(Evidence::UniformS { s: t });
        }
    }
    Witness::no(Evidence::None)
}

/// `s * a^n = 0` for some `s ∈ S`, `n >= 1`. Powers cycle within `|R|`
/// steps, so the exponent search is bounded by the order.
pub fn is_s_nilpotent(r: &FiniteRing, a: Elem, s: &MultSet) -> Witness {
    let powers = &r.power_lists()[a.idx()];
    for (k, &p) in powers.iter().enumerate() {
        for t in s.elems() {
            if r.mul(t, Elem(p)) == r.zero() {
                return Witness::yes(Evidence::Exponent { s: t, n: k + 1 });
            }
        }
    }
    Witness::no(Evidence::None)
}

/// `s * a = 0` for some `s ∈ S`.
pub fn is_s_zero(r: &FiniteRing, a: Elem, s: &MultSet) -> Witness {
    match mask_min(r.ann_masks()[a.idx()] & s.members()) {
        Some(t) => Witness::yes(Evidence::UniformS { s: t }),
        None => Witness::no(Evidence::None),
    }
}

/// `s * a != 0` for every `s ∈ S`.
pub fn is_s_non_zero(r: &FiniteRing, a: Elem, s: &MultSet) -> Witness {
    match mask_min(r.ann_masks()[a.idx()] & s.members()) {
        Some(t) => Witness::no(Evidence::Annihilator { s: t }),
        None => Witness::yes(Evidence::None),
    }
}

/// S-reduced: every nilpotent is S-zero. Uniform witness returned.
pub fn is_s_reduced(r: &FiniteRing, s: &MultSet) -> Witness {
    let ann = r.ann_masks();
    let mut candidates = u128::MAX;
    for x in crate::ring::mask_elems(r.nilpotents_mask()) {
        if ann[x.idx()] & s.members() == 0 {
            return Witness::no(Evidence::Element { r: x });
        }
        candidates &= ann[x.idx()];
    }
    Witness::yes(Evidence::UniformS {
        s: smallest_uniform(s, candidates),
    })
    .degenerate(s.contains_zero())
}

/// S-finiteness of an ideal: trivially true on a finite ring with `s = 1`
/// and `J = I` generated by all of its members.
pub fn s_finite_witness(r: &FiniteRing, i: &Ideal, _s: &MultSet) -> Witness {
    let full_gen = crate::ideal::generated_ideal(r, &i.elems().collect::<Vec<_>>());
    let mut w = Witness::yes(Evidence::SFinite {
        s: r.one(),
        ideal: full_gen,
    });
    w.finite_trivial = true;
    w
}

// Classical baselines, by exhaustive scan.

pub fn is_integral_domain(r: &FiniteRing) -> bool {
    !r.is_trivial() && r.zero_divisors_mask() == 0
}

pub fn is_field(r: &FiniteRing) -> bool {
    !r.is_trivial() && r.units_mask() == r.full_mask() & !1u128
}

pub fn is_prime(r: &FiniteRing, p: &Ideal) -> bool {
    p.is_proper()
        && r.elements().all(|a| {
            r.elements()
                .all(|b| !p.contains(r.mul(a, b)) || p.contains(a) || p.contains(b))
        })
}

pub fn is_maximal(r: &FiniteRing, m: &Ideal) -> bool {
    m.is_proper()
        && !enumerate_ideals(r)
            .iter()
            .any(|j| j.is_proper() && j.contains_ideal(m) && j.members() != m.members())
}

/// Definitional re-validation of witnesses, independent of the scans that
/// produce them. Every report feeds its witnesses back through these.
pub mod recheck {
    use super::*;

    /// `s` explains every zero product.
    pub fn uniform_s_for_domain(r: &FiniteRing, s: &MultSet, t: Elem) -> bool {
        s.contains(t)
            && r.elements().all(|a| {
                r.elements().all(|b| {
                    r.mul(a, b) != r.zero() || r.mul(t, a) == r.zero() || r.mul(t, b) == r.zero()
                })
            })
    }

    /// `ab = 0` with no `s ∈ S` killing either factor.
    pub fn pair_breaks_domain(r: &FiniteRing, s: &MultSet, a: Elem, b: Elem) -> bool {
        r.mul(a, b) == r.zero()
            && s.elems()
                .all(|t| r.mul(t, a) != r.zero() && r.mul(t, b) != r.zero())
    }

    /// The triple violates S-cancellation: `a` is S-non-zero, `ab = ac`,
    /// and no `s` gives `sb = sc`.
    pub fn triple_breaks_cancellation(
        r: &FiniteRing,
        s: &MultSet,
        a: Elem,
        b: Elem,
        c: Elem,
    ) -> bool {
        s.elems().all(|t| r.mul(t, a) != r.zero())
            && r.mul(a, b) == r.mul(a, c)
            && s.elems().all(|t| r.mul(t, b) != r.mul(t, c))
    }

    /// `s` serves the S-cancellation conclusion for every instance.
    pub fn uniform_s_for_cancellation(r: &FiniteRing, s: &MultSet, t: Elem) -> bool {
        s.contains(t)
            && r.elements().all(|a| {
                if s.elems().any(|u| r.mul(u, a) == r.zero()) {
                    return true;
                }
                r.elements().all(|b| {
                    r.elements()
                        .all(|c| r.mul(a, b) != r.mul(a, c) || r.mul(t, b) == r.mul(t, c))
                })
            })
    }

    pub fn uniform_s_for_prime(r: &FiniteRing, p: &Ideal, s: &MultSet, t: Elem) -> bool {
        s.contains(t)
            && p.members() & s.members() == 0
            && r.elements().all(|a| {
                r.elements().all(|b| {
                    !p.contains(r.mul(a, b)) || p.contains(r.mul(t, a)) || p.contains(r.mul(t, b))
                })
            })
    }

    pub fn pair_breaks_prime(r: &FiniteRing, p: &Ideal, s: &MultSet, a: Elem, b: Elem) -> bool {
        p.contains(r.mul(a, b))
            && s.elems()
                .all(|t| !p.contains(r.mul(t, a)) && !p.contains(r.mul(t, b)))
    }

    pub fn uniform_s_for_maximal(r: &FiniteRing, m: &Ideal, s: &MultSet, t: Elem) -> bool {
        s.contains(t)
            && m.members() & s.members() == 0
            && enumerate_ideals(r).iter().all(|j| {
                !j.contains_ideal(m)
                    || j.members() & s.members() != 0
                    || j.elems().all(|je| m.contains(r.mul(t, je)))
            })
    }

    pub fn ideal_breaks_maximal(r: &FiniteRing, m: &Ideal, s: &MultSet, j: &Ideal) -> bool {
        j.contains_ideal(m)
            && j.members() & s.members() == 0
            && s.elems()
                .all(|t| j.elems().any(|je| !m.contains(r.mul(t, je))))
    }

    /// `(s, m)` with `s * rad(I)^m ⊆ I`.
    pub fn power_witness_holds(r: &FiniteRing, i: &Ideal, s: Elem, m: usize) -> bool {
        let rad = crate::ideal::radical(i);
        let pw = crate::ideal::ideal_power(&rad, m);
        pw.elems().all(|x| i.contains(r.mul(s, x)))
    }

    /// `(t + a) * B = 0` with `t ∈ S`, `a ∈ I`.
    pub fn shift_annihilates(
        r: &FiniteRing,
        i: &Ideal,
        s: &MultSet,
        b: &Ideal,
        t: Elem,
        a: Elem,
    ) -> bool {
        s.contains(t) && i.contains(a) && {
            let shift = r.add(t, a);
            b.elems().all(|x| r.mul(shift, x) == r.zero())
        }
    }

    pub fn uniform_s_for_primary(r: &FiniteRing, q: &Ideal, s: &MultSet, t: Elem) -> bool {
        s.contains(t)
            && q.members() & s.members() == 0
            && r.elements().all(|a| {
                r.elements().all(|b| {
                    !q.contains(r.mul(a, b))
                        || q.contains(r.mul(t, a))
                        || r.power_lists()[b.idx()]
                            .iter()
                            .any(|&p| q.contains(r.mul(t, Elem(p))))
                })
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::generated_ideal;
    use crate::multset::mult_closure;
    use crate::ring::{direct_product, make_zn};

    fn set_of(r: &FiniteRing, gens: &[u16]) -> MultSet {
        mult_closure(r, &gens.iter().map(|&g| Elem(g)).collect::<Vec<_>>())
    }

    fn ideal_of(r: &FiniteRing, gens: &[u16]) -> Ideal {
        generated_ideal(r, &gens.iter().map(|&g| Elem(g)).collect::<Vec<_>>())
    }

    #[test]
    fn s_domain_z6() {
        let z6 = make_zn(6).unwrap();
        let s = set_of(&z6, &[2]);
        let w = is_s_integral_domain(&z6, &s);
        assert!(w.verdict);
        assert_eq!(w.uniform_s(), Some(Elem(2)));
        assert!(!is_integral_domain(&z6));
        assert!(recheck::uniform_s_for_domain(&z6, &s, Elem(2)));
    }

    #[test]
    fn s_domain_z30_fails() {
        let z30 = make_zn(30).unwrap();
        let s = set_of(&z30, &[2]);
        assert_eq!(
            s.elems().collect::<Vec<_>>(),
            vec![Elem(1), Elem(2), Elem(4), Elem(8), Elem(16)]
        );
        let w = is_s_integral_domain(&z30, &s);
        assert!(!w.verdict);
        // first unexplained pair in lexicographic scan order
        assert_eq!(
            w.evidence,
            Evidence::Pair {
                a: Elem(3),
                b: Elem(10)
            }
        );
        // (5, 6) is another valid counterexample
        assert!(recheck::pair_breaks_domain(&z30, &s, Elem(5), Elem(6)));
    }

    #[test]
    fn s_domain_field_trivial() {
        let z5 = make_zn(5).unwrap();
        let s = set_of(&z5, &[]);
        let w = is_s_integral_domain(&z5, &s);
        assert!(w.verdict);
        assert_eq!(w.uniform_s(), Some(Elem(1)));
    }

    #[test]
    fn cancellation_z12_fails_z15_holds() {
        let z12 = make_zn(12).unwrap();
        let s39 = set_of(&z12, &[3]);
        let w = has_s_cancellation(&z12, &s39);
        assert!(!w.verdict);
        assert_eq!(
            w.evidence,
            Evidence::Triple {
                a: Elem(2),
                b: Elem(0),
                c: Elem(6)
            }
        );
        // (2, 4, 10) is another violating triple
        assert!(recheck::triple_breaks_cancellation(
            &z12,
            &s39,
            Elem(2),
            Elem(4),
            Elem(10)
        ));

        let z15 = make_zn(15).unwrap();
        let s = set_of(&z15, &[6]);
        assert_eq!(s.elems().collect::<Vec<_>>(), vec![Elem(1), Elem(6)]);
        let w = has_s_cancellation(&z15, &s);
        assert!(w.verdict);
        assert_eq!(w.uniform_s(), Some(Elem(6)));
        assert!(recheck::uniform_s_for_cancellation(&z15, &s, Elem(6)));
    }

    #[test]
    fn s_prime_examples() {
        let z12 = make_zn(12).unwrap();
        let s = set_of(&z12, &[2]);
        let w6 = is_s_prime(&z12, &ideal_of(&z12, &[6]), &s).unwrap();
        assert!(w6.verdict);
        assert_eq!(w6.uniform_s(), Some(Elem(2)));
        assert!(recheck::uniform_s_for_prime(
            &z12,
            &ideal_of(&z12, &[6]),
            &s,
            Elem(4)
        ));
        let w3 = is_s_prime(&z12, &ideal_of(&z12, &[3]), &s).unwrap();
        assert!(w3.verdict);
        let s39 = set_of(&z12, &[3]);
        let w4 = is_s_prime(&z12, &ideal_of(&z12, &[4]), &s39).unwrap();
        assert!(!w4.verdict);
        assert_eq!(
            w4.evidence,
            Evidence::Pair {
                a: Elem(2),
                b: Elem(2)
            }
        );
    }

    #[test]
    fn s_prime_rejects_meeting_s() {
        let z12 = make_zn(12).unwrap();
        let s = set_of(&z12, &[2]);
        let err = is_s_prime(&z12, &ideal_of(&z12, &[2]), &s).unwrap_err();
        assert!(matches!(err, Error::DisjointnessViolation { .. }));
    }

    #[test]
    fn s_maximal_examples() {
        let z6 = make_zn(6).unwrap();
        let s = set_of(&z6, &[2]);
        let w = is_s_maximal(&z6, &zero_ideal(&z6), &s).unwrap();
        assert!(w.verdict);
        assert_eq!(w.uniform_s(), Some(Elem(2)));

        let z12 = make_zn(12).unwrap();
        let s39 = set_of(&z12, &[3]);
        let w = is_s_maximal(&z12, &ideal_of(&z12, &[4]), &s39).unwrap();
        assert!(!w.verdict);
        match &w.evidence {
            Evidence::IdealCounterexample { ideal } => {
                assert_eq!(ideal.members(), ideal_of(&z12, &[2]).members());
            }
            other => panic!("expected ideal counterexample, got {other:?}"),
        }
        // every classically maximal ideal is S-maximal
        let m2 = ideal_of(&z12, &[2]);
        assert!(is_maximal(&z12, &m2));
        assert!(is_s_maximal(&z12, &m2, &s39).unwrap().verdict);
    }

    #[test]
    fn s_field_examples() {
        let z6 = make_zn(6).unwrap();
        assert!(is_s_field(&z6, &set_of(&z6, &[2])).unwrap().verdict);
        let z12 = make_zn(12).unwrap();
        let w = is_s_field(&z12, &set_of(&z12, &[3])).unwrap();
        assert!(!w.verdict);
        match &w.evidence {
            Evidence::IdealCounterexample { ideal } => {
                assert_eq!(ideal.members(), ideal_of(&z12, &[6]).members());
            }
            other => panic!("unexpected evidence {other:?}"),
        }
        let z5 = make_zn(5).unwrap();
        assert!(is_s_field(&z5, &set_of(&z5, &[])).unwrap().verdict);
        // 0 in S is rejected outright
        let bad = set_of(&z6, &[0]);
        assert_eq!(is_s_field(&z6, &bad).unwrap_err(), Error::ZeroInMultSet);
    }

    #[test]
    fn s_proper_examples() {
        let z12 = make_zn(12).unwrap();
        let s39 = set_of(&z12, &[3]);
        assert!(is_s_proper(&z12, &ideal_of(&z12, &[6]), &s39).verdict);
        let z6 = make_zn(6).unwrap();
        let s = set_of(&z6, &[2]);
        let meets = is_s_proper(&z6, &ideal_of(&z6, &[2]), &s);
        assert!(!meets.verdict);
        assert_eq!(meets.evidence, Evidence::MeetsS { elem: Elem(2) });
        let killed = is_s_proper(&z6, &ideal_of(&z6, &[3]), &s);
        assert!(!killed.verdict);
        assert_eq!(killed.evidence, Evidence::Annihilator { s: Elem(2) });
    }

    #[test]
    fn element_predicates() {
        let z12 = make_zn(12).unwrap();
        let s = set_of(&z12, &[2]);
        let idem = is_s_idempotent(&z12, Elem(8), &s);
        assert!(idem.verdict);
        assert_eq!(idem.uniform_s(), Some(Elem(2))); // 8*8 = 4 = 2*8
        assert_ne!(z12.mul(Elem(8), Elem(8)), Elem(8)); // not plainly idempotent

        let zero3 = is_s_zero(&z12, Elem(3), &s);
        assert!(zero3.verdict);
        assert_eq!(zero3.uniform_s(), Some(Elem(4)));

        let s1 = set_of(&z12, &[]);
        let nil6 = is_s_nilpotent(&z12, Elem(6), &s1);
        assert!(nil6.verdict);
        assert_eq!(nil6.evidence, Evidence::Exponent { s: Elem(1), n: 2 });

        let z6 = make_zn(6).unwrap();
        let s6 = set_of(&z6, &[2]);
        assert!(is_s_non_zero(&z6, Elem(1), &s6).verdict);
    }

    #[test]
    fn s_reduced_examples() {
        let z6 = make_zn(6).unwrap();
        assert!(is_s_reduced(&z6, &set_of(&z6, &[])).verdict);
        let z4 = make_zn(4).unwrap();
        let w = is_s_reduced(&z4, &set_of(&z4, &[]));
        assert!(!w.verdict);
        assert_eq!(w.evidence, Evidence::Element { r: Elem(2) });
        // closure of {2} in Z4 picks up 0 (2*2 = 0): verdict is true but
        // flagged degenerate; 2 itself kills the only nonzero nilpotent
        let s02 = set_of(&z4, &[2]);
        assert!(s02.contains_zero());
        let w2 = is_s_reduced(&z4, &s02);
        assert!(w2.verdict && w2.degenerate_zero_in_s);
        assert_eq!(z4.mul(Elem(2), Elem(2)), Elem(0));
    }

    #[test]
    fn classical_checks() {
        let z5 = make_zn(5).unwrap();
        assert!(is_field(&z5));
        assert!(is_integral_domain(&z5));
        let z12 = make_zn(12).unwrap();
        assert!(is_maximal(&z12, &ideal_of(&z12, &[2])));
        assert!(!is_maximal(&z12, &ideal_of(&z12, &[4])));
        assert!(is_prime(&z12, &ideal_of(&z12, &[3])));
        assert!(!is_prime(&z12, &ideal_of(&z12, &[6])));
        let z2 = make_zn(2).unwrap();
        let b4 = direct_product(&z2, &z2).unwrap();
        assert!(!is_integral_domain(&b4));
    }

    #[test]
    fn s_finite_is_trivially_true() {
        let z12 = make_zn(12).unwrap();
        let s = set_of(&z12, &[3]);
        let w = s_finite_witness(&z12, &ideal_of(&z12, &[2]), &s);
        assert!(w.verdict && w.finite_trivial);
        match &w.evidence {
            Evidence::SFinite { s, ideal } => {
                assert_eq!(*s, Elem(1));
                assert_eq!(ideal.members(), ideal_of(&z12, &[2]).members());
            }
            other => panic!("unexpected evidence {other:?}"),
        }
    }
}
