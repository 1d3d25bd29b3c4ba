//! Ideals of a finite ring and their arithmetic: sums, products,
//! intersections, powers, colons, radicals and S-radicals, Jacobson and
//! S-Jacobson radicals, and full lattice enumeration.

use crate::error::{Error, Result};
use crate::multset::MultSet;
use crate::ring::{mask_elems, Elem, FiniteRing};

/// An ideal, stored as a membership bitmask plus a generator list.
/// The full ring is representable (e.g. as an empty-intersection
/// convention); `is_proper` distinguishes it.
#[derive(Clone)]
pub struct Ideal {
    ring: FiniteRing,
    members: u128,
    generators: Vec<Elem>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({}) in {}", gens.join(","), self.ring.recipe())
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.members == other.members
    }
}
impl Eq for Ideal {}

impl Ideal {
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

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        false // 0 is always a member
    }

    pub fn is_zero(&self) -> bool {
        self.members == 1
    }

    pub fn is_proper(&self) -> bool {
        self.members != self.ring.full_mask()
    }

    pub fn elems(&self) -> impl Iterator<Item = Elem> {
        mask_elems(self.members)
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        self.members | other.members == self.members
    }

    /// Rebuild from a raw mask, recomputing a greedy minimal generator list.
    pub(crate) fn from_mask(ring: &FiniteRing, members: u128) -> Ideal {
        let generators = greedy_generators(ring, members);
        Ideal {
            ring: ring.clone(),
            members,
            generators,
        }
    }
}

/// `{ r*g : r in R }` as a mask; principal ideals are already closed
/// under addition.
fn principal_mask(r: &FiniteRing, g: Elem) -> u128 {
    let mut m = 0u128;
    for x in r.elements() {
        m |= r.mul(x, g).bit();
    }
    m
}

/// Sum of two ideal masks: `{ a + b }` pairwise (already an ideal).
fn sum_mask(r: &FiniteRing, a: u128, b: u128) -> u128 {
    let mut m = 0u128;
    for x in mask_elems(a) {
        for y in mask_elems(b) {
            m |= r.add(x, y).bit();
        }
    }
    m
}

fn generated_mask(r: &FiniteRing, gens: &[Elem]) -> u128 {
    let mut m = 1u128; // the zero ideal
    for &g in gens {
        m = sum_mask(r, m, principal_mask(r, g));
    }
    m
}

fn greedy_generators(r: &FiniteRing, members: u128) -> Vec<Elem> {
    let mut gens = Vec::new();
    let mut cur = 1u128;
    for x in mask_elems(members) {
        if cur & x.bit() == 0 {
            gens.push(x);
            cur = sum_mask(r, cur, principal_mask(r, x));
        }
    }
    debug_assert_eq!(cur, members);
    gens
}

/// Ideal generated by a set of elements.
pub fn generated_ideal(r: &FiniteRing, gens: &[Elem]) -> Ideal {
    Ideal {
        ring: r.clone(),
        members: generated_mask(r, gens),
        generators: gens.to_vec(),
    }
}

pub fn zero_ideal(r: &FiniteRing) -> Ideal {
    Ideal {
        ring: r.clone(),
        members: 1,
        generators: Vec::new(),
    }
}

pub fn unit_ideal(r: &FiniteRing) -> Ideal {
    Ideal::from_mask(r, r.full_mask())
}

/// All ideal masks, found by closing `{(0)}` under joins with principal
/// ideals until fixpoint, sorted by (size, mask).
pub(crate) fn enumerate_ideal_masks(r: &FiniteRing) -> Vec<(u128, Vec<u16>)> {
    let principals: Vec<u128> = r.elements().map(|g| principal_mask(r, g)).collect();
    let mut found: Vec<u128> = vec![1u128];
    let mut queue: Vec<u128> = vec![1u128];
    while let Some(cur) = queue.pop() {
        for p in &principals {
            let joined = sum_mask(r, cur, *p);
            if !found.contains(&joined) {
                found.push(joined);
                queue.push(joined);
            }
        }
    }
    found.sort_unstable_by_key(|m| (m.count_ones(), *m));
    found
        .into_iter()
        .map(|m| {
            let gens = greedy_generators(r, m).iter().map(|g| g.0).collect();
            (m, gens)
        })
        .collect()
}

/// Every ideal of the ring (the full ring included), deterministically
/// ordered by (size, bitmask).
pub fn enumerate_ideals(r: &FiniteRing) -> Vec<Ideal> {
    r.ideals_cache()
        .iter()
        .map(|(members, gens)| Ideal {
            ring: r.clone(),
            members: *members,
            generators: gens.iter().map(|&g| Elem(g)).collect(),
        })
        .collect()
}

fn check_same(a: &Ideal, b: &Ideal) -> Result<()> {
    if a.ring.same_ring(&b.ring) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

pub fn ideal_sum(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same(a, b)?;
    Ok(Ideal::from_mask(
        &a.ring,
        sum_mask(&a.ring, a.members, b.members),
    ))
}

/// Ideal generated by pairwise products.
pub fn ideal_product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same(a, b)?;
    let r = &a.ring;
    let mut m = 1u128;
    for x in mask_elems(a.members) {
        for y in mask_elems(b.members) {
            let p = r.mul(x, y);
            if m & p.bit() == 0 {
                m = sum_mask(r, m, principal_mask(r, p));
            }
        }
    }
    Ok(Ideal::from_mask(r, m))
}

pub fn ideal_intersect(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    check_same(a, b)?;
    Ok(Ideal::from_mask(&a.ring, a.members & b.members))
}

pub fn ideal_power(i: &Ideal, k: usize) -> Ideal {
    assert!(k >= 1, "ideal powers start at 1");
    let mut acc = i.clone();
    for _ in 1..k {
        acc = ideal_product(&acc, i).expect("same ring");
    }
    acc
}

/// `(I : s) = { a : s*a in I }`.
pub fn colon(i: &Ideal, s: Elem) -> Ideal {
    let r = &i.ring;
    let mut m = 0u128;
    for a in r.elements() {
        if i.contains(r.mul(s, a)) {
            m |= a.bit();
        }
    }
    Ideal::from_mask(r, m)
}

fn is_ideal_mask(r: &FiniteRing, m: u128) -> bool {
    if m & 1 == 0 {
        return false;
    }
    for a in mask_elems(m) {
        for b in mask_elems(m) {
            if m & r.add(a, b).bit() == 0 {
                return false;
            }
        }
        for x in r.elements() {
            if m & r.mul(x, a).bit() == 0 {
                return false;
            }
        }
    }
    true
}

/// `rad(I) = { x : x^n in I for some n }`. Always an ideal containing `I`.
pub fn radical(i: &Ideal) -> Ideal {
    let r = &i.ring;
    let mut m = 0u128;
    for (a, powers) in r.power_masks().iter().enumerate() {
        if powers & i.members != 0 {
            m |= 1u128 << a;
        }
    }
    debug_assert!(is_ideal_mask(r, m));
    Ideal::from_mask(r, m)
}

/// `S-rad(I) = { a : s*a^n in I for some s in S, n >= 1 }`. The set is an
/// ideal for every multiplicatively closed `S`; the closure check guards
/// against implementation bugs, not mathematical possibilities.
pub fn s_radical(i: &Ideal, s: &MultSet) -> Result<Ideal> {
    if !s.ring().same_ring(&i.ring) {
        return Err(Error::RingMismatch);
    }
    let r = &i.ring;
    let mut m = 0u128;
    for a in r.elements() {
        let hit = r.power_lists()[a.idx()]
            .iter()
            .any(|&p| s.elems().any(|t| i.contains(r.mul(t, Elem(p)))));
        if hit {
            m |= a.bit();
        }
    }
    if !is_ideal_mask(r, m) {
        return Err(Error::SRadicalNotIdeal(format!(
            "mask {m:#x} for ({:?}, {:?})",
            i, s
        )));
    }
    Ok(Ideal::from_mask(r, m))
}

fn maximal_ideal_masks(r: &FiniteRing) -> Vec<u128> {
    let all: Vec<u128> = r.ideals_cache().iter().map(|(m, _)| *m).collect();
    let full = r.full_mask();
    all.iter()
        .copied()
        .filter(|&m| m != full && !all.iter().any(|&j| j != full && j != m && j | m == j))
        .collect()
}

/// Intersection of all maximal ideals.
pub fn jacobson_radical(r: &FiniteRing) -> Ideal {
    let mut m = r.full_mask();
    for mm in maximal_ideal_masks(r) {
        m &= mm;
    }
    Ideal::from_mask(r, m)
}

/// Intersection of all S-maximal ideals disjoint from S; the empty
/// intersection is the full ring. This is a modeled definition — reports
/// flag it as such.
pub fn s_jacobson_radical(r: &FiniteRing, s: &MultSet) -> Result<Ideal> {
    if !s.ring().same_ring(r) {
        return Err(Error::RingMismatch);
    }
    let mut m = r.full_mask();
    for i in enumerate_ideals(r) {
        if i.members & s.members() != 0 {
            continue;
        }
        if crate::classify::is_s_maximal(r, &i, s)?.verdict {
            m &= i.members;
        }
    }
    Ok(Ideal::from_mask(r, m))
}
