//! Localization of a finite ring at a multiplicatively closed set, built
//! from first principles: fractions `(a, s)` are materialized and collapsed
//! by union-find over `(a,s) ~ (b,t) iff u(at - bs) = 0 for some u in S`.
//!
//! The quotient `R / {a : sa = 0 for some s}` is the *independent* oracle
//! for this construction — `localize` never takes that shortcut itself.

use crate::classify::{self, Witness};
use crate::error::{Error, Result};
use crate::ideal::{generated_ideal, Ideal};
use crate::multset::{mult_closure, MultSet};
use crate::ring::{Elem, FiniteRing};

/// Output of [`localize`]: the fraction ring, the canonical map, the image
/// of `S`, and the kernel of the map.
#[derive(Debug)]
pub struct Localization {
    pub local_ring: FiniteRing,
    pub kernel: Ideal,
    pub phi_s: MultSet,
    /// True when `0 ∈ S` collapsed everything to the one-element ring.
    pub degenerate_zero_ring: bool,
    source: FiniteRing,
    s: MultSet,
    s_list: Vec<Elem>,
    /// `(a_idx * |S| + s_pos) -> local element`.
    class_table: Vec<u16>,
    /// `a -> class of a/1`.
    phi: Vec<u16>,
}

impl Localization {
    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn mult_set(&self) -> &MultSet {
        &self.s
    }

    /// The canonical map `φ(a) = a/1`.
    pub fn phi(&self, a: Elem) -> Elem {
        Elem(self.phi[a.idx()])
    }

    /// Class of the fraction `a/s`; `None` when `s ∉ S`.
    pub fn class(&self, a: Elem, s: Elem) -> Option<Elem> {
        let pos = self.s_list.iter().position(|&t| t == s)?;
        Some(Elem(self.class_table[a.idx() * self.s_list.len() + pos]))
    }

    /// `φ` is injective exactly when the kernel is zero.
    pub fn phi_injective(&self) -> bool {
        self.kernel.is_zero()
    }

    /// Extension `S⁻¹I`: the ideal of the local ring generated by `φ(I)`.
    pub fn extend_ideal(&self, i: &Ideal) -> Result<Ideal> {
        if !i.ring().same_ring(&self.source) {
            return Err(Error::RingMismatch);
        }
        let gens: Vec<Elem> = i.generators().iter().map(|&g| self.phi(g)).collect();
        Ok(generated_ideal(&self.local_ring, &gens))
    }

    /// Independent oracle: `R / {a : ∃s∈S, sa = 0}` built with the coset
    /// construction. The invariant suite checks `local_ring` against it by
    /// isomorphism search.
    pub fn oracle_quotient(&self) -> Result<crate::ring::QuotientMap> {
        crate::ring::quotient_ring(&self.source, &self.kernel)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (ra, rb) = (find(parent, a), find(parent, b));
    if ra != rb {
        parent[ra.max(rb)] = ra.min(rb);
    }
}

/// Construct `S⁻¹R` for a finite ring. Never fails: `0 ∈ S` produces the
/// one-element ring, flagged degenerate.
pub fn localize(r: &FiniteRing, s: &MultSet) -> Localization {
    assert!(r.same_ring(s.ring()), "mult set belongs to another ring");
    let n = r.order();
    let s_list: Vec<Elem> = s.elems().collect();
    let k = s_list.len();
    let pair_id = |a: Elem, pos: usize| a.idx() * k + pos;

    // relation test: (a,s) ~ (b,t) iff some u in S kills at - bs
    let related = |a: Elem, sd: Elem, b: Elem, td: Elem| {
        let diff = r.sub(r.mul(a, td), r.mul(b, sd));
        r.ann_masks()[diff.idx()] & s.members() != 0
    };

    let mut parent: Vec<usize> = (0..n * k).collect();
    for ai in 0..n {
        for (pa, &sa) in s_list.iter().enumerate() {
            let p = pair_id(Elem(ai as u16), pa);
            if parent[p] != p {
                continue; // already merged into an earlier class
            }
            for bi in ai..n {
                for (pb, &sb) in s_list.iter().enumerate() {
                    let q = pair_id(Elem(bi as u16), pb);
                    if q <= p {
                        continue;
                    }
                    if related(Elem(ai as u16), sa, Elem(bi as u16), sb) {
                        union(&mut parent, p, q);
                    }
                }
            }
        }
    }

    // classes, each represented by its lexicographically least (a, s) pair
    let mut roots: Vec<usize> = Vec::new();
    let mut class_of_root = vec![u16::MAX; n * k];
    for p in 0..n * k {
        let root = find(&mut parent, p);
        if class_of_root[root] == u16::MAX {
            class_of_root[root] = roots.len() as u16;
            roots.push(root);
        }
    }
    // roots are discovered in pair-id order, which is (numerator, denominator
    // position) lexicographic: the zero class (numerator 0) comes first and,
    // when 0 ∉ S, the class of 1/1 second.
    let order = roots.len();
    let class_table: Vec<u16> = (0..n * k)
        .map(|p| class_of_root[find(&mut parent, p)])
        .collect();

    let degenerate = order == 1;
    let rep = |c: usize| {
        let root = roots[c];
        (Elem((root / k) as u16), s_list[root % k])
    };

    let recipe = format!("S^-1 {}", r.recipe());
    let local_ring = if degenerate {
        FiniteRing::trivial(recipe)
    } else {
        debug_assert_eq!(rep(0).0, r.zero());
        debug_assert_eq!(rep(1), (r.one(), r.one()));
        let mut add = vec![0u16; order * order];
        let mut mul = vec![0u16; order * order];
        let mut names = vec![String::new(); order];
        for i in 0..order {
            let (a, sa) = rep(i);
            names[i] = format!("({})/({})", r.name(a), r.name(sa));
            for j in 0..order {
                let (b, sb) = rep(j);
                let den = r.mul(sa, sb);
                let den_pos = s_list.iter().position(|&t| t == den).expect("S is closed");
                let num_add = r.add(r.mul(a, sb), r.mul(b, sa));
                add[i * order + j] = class_table[num_add.idx() * k + den_pos];
                let num_mul = r.mul(a, b);
                mul[i * order + j] = class_table[num_mul.idx() * k + den_pos];
            }
        }
        let ring = FiniteRing::from_tables_unchecked(order, add, mul, names, recipe);
        ring.validate()
            .expect("fraction tables always satisfy the ring axioms");
        ring
    };

    let one_pos = s_list
        .iter()
        .position(|&t| t == r.one())
        .expect("1 is in every mult set");
    let phi: Vec<u16> = (0..n).map(|a| class_table[a * k + one_pos]).collect();

    let kernel_gens: Vec<Elem> = r.elements().filter(|a| phi[a.idx()] == 0).collect();
    let kernel = generated_ideal(r, &kernel_gens);
    debug_assert_eq!(
        kernel.members(),
        r.elements()
            .filter(|&a| r.ann_masks()[a.idx()] & s.members() != 0)
            .fold(0u128, |m, a| m | a.bit()),
        "kernel is exactly the S-torsion"
    );

    let phi_s_gens: Vec<Elem> = s_list.iter().map(|&t| Elem(phi[t.idx()])).collect();
    let phi_s = mult_closure(&local_ring, &phi_s_gens);
    debug_assert_eq!(
        phi_s.members(),
        phi_s_gens.iter().fold(0u128, |m, e| m | e.bit()),
        "φ(S) is already closed"
    );

    Localization {
        local_ring,
        kernel,
        phi_s,
        degenerate_zero_ring: degenerate,
        source: r.clone(),
        s: s.clone(),
        s_list,
        class_table,
        phi,
    }
}

/// Outcome of one clause of the localization transfer theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClauseOutcome {
    Holds,
    Fails { detail: String },
    Skipped { reason: String },
}

impl ClauseOutcome {
    pub fn passed(&self) -> bool {
        !matches!(self, ClauseOutcome::Fails { .. })
    }
}

/// The four transfer checks between `(R, S)` and `S⁻¹R`.
#[derive(Debug)]
pub struct LocalizationTheoremReport {
    pub localization: Localization,
    pub s_domain: Witness,
    pub local_is_domain: bool,
    /// (a) S-domain(R) ⟺ domain(S⁻¹R) — an equivalence on every instance
    /// because S is finite.
    pub domain_equivalence: ClauseOutcome,
    /// (b) S-field(R) ⇒ φ(S)-field(S⁻¹R).
    pub field_forward: ClauseOutcome,
    /// (c) φ(S)-field(S⁻¹R) ⇒ S-field(R), when S is proper.
    pub field_converse: ClauseOutcome,
    /// (d) S-domain(R) ⇒ S-field(R) — the finite case.
    pub finite_domain_is_field: ClauseOutcome,
}

impl LocalizationTheoremReport {
    pub fn all_pass(&self) -> bool {
        self.domain_equivalence.passed()
            && self.field_forward.passed()
            && self.field_converse.passed()
            && self.finite_domain_is_field.passed()
    }

    pub fn clauses(&self) -> [(&'static str, &ClauseOutcome); 4] {
        [
            ("s-domain-iff-local-domain", &self.domain_equivalence),
            ("s-field-implies-local-s-field", &self.field_forward),
            ("local-s-field-implies-s-field", &self.field_converse),
            ("s-domain-implies-s-field", &self.finite_domain_is_field),
        ]
    }
}

/// Evaluate the transfer theorems on one `(R, S)` instance.
pub fn check_localization_theorems(r: &FiniteRing, s: &MultSet) -> LocalizationTheoremReport {
    let localization = localize(r, s);
    let s_domain = classify::is_s_integral_domain(r, s);
    let local_is_domain = classify::is_integral_domain(&localization.local_ring);

    if s.contains_zero() {
        let skip = |why: &str| ClauseOutcome::Skipped { reason: why.into() };
        return LocalizationTheoremReport {
            localization,
            s_domain,
            local_is_domain,
            domain_equivalence: skip("0 ∈ S: localization is the zero ring"),
            field_forward: skip("0 ∈ S"),
            field_converse: skip("0 ∈ S"),
            finite_domain_is_field: skip("0 ∈ S"),
        };
    }

    let domain_equivalence = if s_domain.verdict == local_is_domain {
        ClauseOutcome::Holds
    } else {
        ClauseOutcome::Fails {
            detail: format!(
                "S-domain={} but localization domain={}",
                s_domain.verdict, local_is_domain
            ),
        }
    };

    let s_field = classify::is_s_field(r, s).expect("0 ∉ S checked above");
    let local_s_field = classify::is_s_field(&localization.local_ring, &localization.phi_s)
        .expect("0 ∉ φ(S) since S is closed and 0 ∉ S");

    let field_forward = if !s_field.verdict || local_s_field.verdict {
        ClauseOutcome::Holds
    } else {
        ClauseOutcome::Fails {
            detail: "R is an S-field but S⁻¹R is not a φ(S)-field".into(),
        }
    };

    let field_converse = if !s.is_proper() {
        ClauseOutcome::Skipped {
            reason: "S contains a zero divisor, converse needs S proper".into(),
        }
    } else if !local_s_field.verdict || s_field.verdict {
        ClauseOutcome::Holds
    } else {
        ClauseOutcome::Fails {
            detail: "S⁻¹R is a φ(S)-field but R is not an S-field".into(),
        }
    };

    let finite_domain_is_field = if !s_domain.verdict || s_field.verdict {
        ClauseOutcome::Holds
    } else {
        ClauseOutcome::Fails {
            detail: "finite S-integral domain that is not an S-field".into(),
        }
    };

    LocalizationTheoremReport {
        localization,
        s_domain,
        local_is_domain,
        domain_equivalence,
        field_forward,
        field_converse,
        finite_domain_is_field,
    }
}
