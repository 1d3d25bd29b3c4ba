//! Ring isomorphisms: verification, transport of sets and ideals, and a
//! backtracking search seeded on images of additive generators.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::multset::MultSet;
use crate::ring::{Elem, FiniteRing};

/// A verified isomorphism between two rings of equal order.
#[derive(Clone)]
pub struct RingIso {
    source: FiniteRing,
    target: FiniteRing,
    map: Vec<u16>,
}

impl std::fmt::Debug for RingIso {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "RingIso({} -> {}, {:?})",
            self.source.recipe(),
            self.target.recipe(),
            self.map
        )
    }
}

impl RingIso {
    /// Verify the map is a bijective ring homomorphism with `1 -> 1`.
    pub fn new(source: FiniteRing, target: FiniteRing, map: Vec<u16>) -> Result<Self> {
        let n = source.order();
        if target.order() != n || map.len() != n {
            return Err(Error::NotAnIsomorphism("size mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &img in &map {
            if (img as usize) >= n || std::mem::replace(&mut seen[img as usize], true) {
                return Err(Error::NotAnIsomorphism("map is not a bijection".into()));
            }
        }
        if map[source.one().idx()] != target.one().0 {
            return Err(Error::NotAnIsomorphism("1 is not mapped to 1".into()));
        }
        for a in source.elements() {
            for b in source.elements() {
                let fa = Elem(map[a.idx()]);
                let fb = Elem(map[b.idx()]);
                if map[source.add(a, b).idx()] != target.add(fa, fb).0 {
                    return Err(Error::NotAnIsomorphism(format!(
                        "f({a}+{b}) != f({a})+f({b})"
                    )));
                }
                if map[source.mul(a, b).idx()] != target.mul(fa, fb).0 {
                    return Err(Error::NotAnIsomorphism(format!(
                        "f({a}*{b}) != f({a})*f({b})"
                    )));
                }
            }
        }
        Ok(RingIso {
            source,
            target,
            map,
        })
    }

    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn target(&self) -> &FiniteRing {
        &self.target
    }

    pub fn apply(&self, e: Elem) -> Elem {
        Elem(self.map[e.idx()])
    }

    pub fn inverse(&self) -> RingIso {
        let mut inv = vec![0u16; self.map.len()];
        for (i, &img) in self.map.iter().enumerate() {
            inv[img as usize] = i as u16;
        }
        RingIso {
            source: self.target.clone(),
            target: self.source.clone(),
            map: inv,
        }
    }
}

/// Transport a multiplicative set along an isomorphism; closure is
/// preserved by construction.
pub fn apply_iso_mult_set(f: &RingIso, s: &MultSet) -> Result<MultSet> {
    if !s.ring().same_ring(&f.source) {
        return Err(Error::RingMismatch);
    }
    let gens: Vec<Elem> = s.elems().map(|e| f.apply(e)).collect();
    Ok(crate::multset::mult_closure(&f.target, &gens))
}

/// Transport an ideal along an isomorphism.
pub fn apply_iso_ideal(f: &RingIso, i: &Ideal) -> Result<Ideal> {
    if !i.ring().same_ring(&f.source) {
        return Err(Error::RingMismatch);
    }
    let gens: Vec<Elem> = i.elems().map(|e| f.apply(e)).collect();
    Ok(crate::ideal::generated_ideal(&f.target, &gens))
}

fn profile(r: &FiniteRing) -> (Vec<u16>, u32, u32, u32, bool) {
    let mut add_orders = r.add_orders().to_vec();
    add_orders.sort_unstable();
    (
        add_orders,
        r.units_mask().count_ones(),
        r.nilpotents_mask().count_ones(),
        r.elements().filter(|&x| r.mul(x, x) == x).count() as u32,
        r.is_boolean(),
    )
}

/// Greedy additive generating set: repeatedly adjoin the smallest element
/// outside the subgroup generated so far.
fn additive_generators(r: &FiniteRing) -> Vec<Elem> {
    let n = r.order();
    let mut gens = Vec::new();
    let mut span = 1u128; // {0}
    while span.count_ones() as usize != n {
        let g = r
            .elements()
            .find(|e| span & e.bit() == 0)
            .expect("span is proper");
        gens.push(g);
        // new span = old span + <g>: walk base + k*g around the cycle
        let mut new_span = 0u128;
        for base in crate::ring::mask_elems(span) {
            let mut acc = base;
            loop {
                new_span |= acc.bit();
                acc = r.add(acc, g);
                if acc == base {
                    break;
                }
            }
        }
        span = new_span;
    }
    gens
}

struct Search<'a> {
    a: &'a FiniteRing,
    b: &'a FiniteRing,
    gens: Vec<Elem>,
}

impl Search<'_> {
    /// Extend a partial additive-hom map with `g -> t`, closing the span.
    /// `map[a] == u16::MAX` means unassigned; returns the list of newly
    /// assigned sources on success for rollback.
    fn extend(&self, map: &mut [u16], used: &mut u128, g: Elem, t: Elem) -> Option<Vec<u16>> {
        let mut assigned = Vec::new();
        let mut frontier: Vec<(Elem, Elem)> = vec![(g, t)];
        while let Some((x, y)) = frontier.pop() {
            let cur = map[x.idx()];
            if cur != u16::MAX {
                if cur != y.0 {
                    for &s in &assigned {
                        *used &= !(1u128 << map[s as usize]);
                        map[s as usize] = u16::MAX;
                    }
                    return None;
                }
                continue;
            }
            if *used & y.bit() != 0 {
                for &s in &assigned {
                    *used &= !(1u128 << map[s as usize]);
                    map[s as usize] = u16::MAX;
                }
                return None;
            }
            map[x.idx()] = y.0;
            *used |= y.bit();
            assigned.push(x.0);
            // propagate sums with every already-mapped element
            for z in self.a.elements() {
                if map[z.idx()] != u16::MAX {
                    let src = self.a.add(x, z);
                    let dst = self.b.add(y, Elem(map[z.idx()]));
                    frontier.push((src, dst));
                }
            }
        }
        Some(assigned)
    }

    fn rollback(&self, map: &mut [u16], used: &mut u128, assigned: &[u16]) {
        for &s in assigned {
            *used &= !(1u128 << map[s as usize]);
            map[s as usize] = u16::MAX;
        }
    }

    fn solve(&self, depth: usize, map: &mut [u16], used: &mut u128) -> Option<Vec<u16>> {
        if depth == self.gens.len() {
            if map.contains(&u16::MAX) {
                return None;
            }
            // additive hom by construction; check multiplicativity and 1 -> 1
            if map[self.a.one().idx()] != self.b.one().0 {
                return None;
            }
            for x in self.a.elements() {
                for y in self.a.elements() {
                    let fx = Elem(map[x.idx()]);
                    let fy = Elem(map[y.idx()]);
                    if map[self.a.mul(x, y).idx()] != self.b.mul(fx, fy).0 {
                        return None;
                    }
                }
            }
            return Some(map.to_vec());
        }
        let g = self.gens[depth];
        let g_order = self.a.add_orders()[g.idx()];
        for t in self.b.elements() {
            if *used & t.bit() != 0 {
                continue;
            }
            if self.b.add_orders()[t.idx()] != g_order {
                continue;
            }
            if let Some(assigned) = self.extend(map, used, g, t) {
                if let Some(found) = self.solve(depth + 1, map, used) {
                    return Some(found);
                }
                self.rollback(map, used, &assigned);
            }
        }
        None
    }
}

/// Backtracking isomorphism search. Cheap invariant profiles reject most
/// non-isomorphic pairs before the search starts.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing) -> Option<RingIso> {
    if a.order() != b.order() {
        return None;
    }
    if a.order() == 1 {
        return Some(RingIso {
            source: a.clone(),
            target: b.clone(),
            map: vec![0],
        });
    }
    if profile(a) != profile(b) {
        return None;
    }
    let search = Search {
        a,
        b,
        gens: additive_generators(a),
    };
    let mut map = vec![u16::MAX; a.order()];
    let mut used = 0u128;
    // 0 -> 0 is forced for any additive hom
    map[0] = 0;
    used |= 1;
    let found = search.solve(0, &mut map, &mut used)?;
    Some(RingIso {
        source: a.clone(),
        target: b.clone(),
        map: found,
    })
}

pub fn are_isomorphic(a: &FiniteRing, b: &FiniteRing) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Deterministically scrambled copy of a ring (elements other than 0 and 1
/// reversed), together with the witnessing isomorphism. Used to exercise
/// transport of verdicts.
pub fn permuted_copy(r: &FiniteRing) -> (FiniteRing, RingIso) {
    let n = r.order();
    let mut perm: Vec<u16> = vec![0, 1];
    perm.extend((2..n as u16).rev());
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    let mut names = vec![String::new(); n];
    for a in 0..n {
        for b in 0..n {
            let (pa, pb) = (perm[a] as usize, perm[b] as usize);
            add[pa * n + pb] = perm[r.add(Elem(a as u16), Elem(b as u16)).idx()];
            mul[pa * n + pb] = perm[r.mul(Elem(a as u16), Elem(b as u16)).idx()];
        }
    }
    for a in 0..n {
        names[perm[a] as usize] = r.name(Elem(a as u16)).to_string();
    }
    let copy = FiniteRing::from_tables_unchecked(n, add, mul, names, r.recipe().to_string());
    debug_assert!(copy.validate().is_ok());
    let iso = RingIso::new(r.clone(), copy.clone(), perm).expect("permutation is an isomorphism");
    (copy, iso)
}
