//! Multiplicatively closed subsets, stored as the closure of their generators.

use crate::ring::{mask_elems, Elem, FiniteRing};

/// A multiplicatively closed subset of a ring. Always contains 1; may
/// contain 0 (property checks that need disjointness reject that case
/// themselves).
#[derive(Clone)]
pub struct MultSet {
    ring: FiniteRing,
    members: u128,
    generators: Vec<Elem>,
}

impl std::fmt::Debug for MultSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let elems: Vec<String> = self.elems().map(|e| e.to_string()).collect();
        write!(f, "S{{{}}} in {}", elems.join(","), self.ring.recipe())
    }
}

impl MultSet {
    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn members(&self) -> u128 {
        self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, e: Elem) -> bool {
        self.members & e.bit() != 0
    }

    pub fn contains_zero(&self) -> bool {
        self.members & 1 != 0
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false // 1 is always a member
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        mask_elems(self.members)
    }

    /// Proper per the definition: contains neither zero nor zero divisors.
    pub fn is_proper(&self) -> bool {
        !self.contains_zero() && self.members & self.ring.zero_divisors_mask() == 0
    }
}

fn close_mask(r: &FiniteRing, start: u128) -> u128 {
    let mut members = start | r.one().bit();
    loop {
        let mut next = members;
        for a in mask_elems(members) {
            for b in mask_elems(members) {
                next |= r.mul(a, b).bit();
            }
        }
        if next == members {
            return members;
        }
        members = next;
    }
}

/// Smallest multiplicatively closed superset of `gens ∪ {1}`.
pub fn mult_closure(r: &FiniteRing, gens: &[Elem]) -> MultSet {
    let start = gens.iter().fold(0u128, |m, g| m | g.bit());
    MultSet {
        ring: r.clone(),
        members: close_mask(r, start),
        generators: gens.to_vec(),
    }
}

/// True iff `0 ∉ S` and `S` avoids every zero divisor.
pub fn is_proper_mult_set(s: &MultSet) -> bool {
    s.is_proper()
}

/// All multiplicatively closed subsets containing 1 and avoiding 0,
/// sorted by (size, mask). Every 0-free closed set is the closure of a
/// 0-free chain of generator extensions, so BFS that skips 0-containing
/// closures is exhaustive.
pub(crate) fn closed_mult_set_masks(r: &FiniteRing) -> Vec<u128> {
    let base = close_mask(r, 0);
    if base & 1 != 0 {
        return Vec::new();
    }
    let mut found = std::collections::HashSet::from([base]);
    let mut queue = vec![base];
    while let Some(cur) = queue.pop() {
        for x in r.elements() {
            if cur & x.bit() != 0 {
                continue;
            }
            let next = close_mask(r, cur | x.bit());
            if next & 1 != 0 {
                continue;
            }
            if found.insert(next) {
                queue.push(next);
            }
        }
    }
    let mut masks: Vec<u128> = found.into_iter().collect();
    masks.sort_unstable_by_key(|m| (m.count_ones(), *m));
    masks
}

/// Every 0-free multiplicatively closed subset of the ring, with a greedy
/// minimal generator list attached to each.
pub fn closed_mult_sets(r: &FiniteRing) -> Vec<MultSet> {
    r.mult_sets_cache()
        .iter()
        .map(|&members| {
            let mut gens = Vec::new();
            let mut cur = close_mask(r, 0);
            for x in mask_elems(members) {
                if cur & x.bit() == 0 {
                    gens.push(x);
                    cur = close_mask(r, cur | x.bit());
                }
            }
            debug_assert_eq!(cur, members);
            MultSet {
                ring: r.clone(),
                members,
                generators: gens,
            }
        })
        .collect()
}
