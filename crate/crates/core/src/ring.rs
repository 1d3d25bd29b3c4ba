//! Finite commutative rings with identity, stored as explicit operation tables.
//!
//! Every element is an index in `[0, order)`. Index 0 is always the zero
//! element and index 1 the identity, so witnesses and golden outputs are
//! reproducible across constructions.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};

/// Hard ceiling on ring order: element subsets are `u128` bitmasks.
pub const MAX_ORDER: usize = 128;

/// An element of a [`FiniteRing`], identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(pub u16);

impl Elem {
    #[inline]
    pub fn idx(self) -> usize {
        self.0 as usize
    }

    #[inline]
    pub fn bit(self) -> u128 {
        1u128 << self.0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bitmask with one bit per ring element, for orders up to [`MAX_ORDER`].
pub fn full_mask(order: usize) -> u128 {
    if order >= 128 {
        u128::MAX
    } else {
        (1u128 << order) - 1
    }
}

/// Iterate the elements of a mask in ascending index order.
pub fn mask_elems(mask: u128) -> impl Iterator<Item = Elem> {
    let mut rest = mask;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as u16;
            rest &= rest - 1;
            Some(Elem(i))
        }
    })
}

/// Smallest element of a nonempty mask.
pub fn mask_min(mask: u128) -> Option<Elem> {
    if mask == 0 {
        None
    } else {
        Some(Elem(mask.trailing_zeros() as u16))
    }
}

struct RingData {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    names: Vec<String>,
    recipe: String,
    // Lazy per-ring caches. Raw indices/masks only, so no Arc cycles.
    ann: OnceLock<Vec<u128>>,
    power_lists: OnceLock<Vec<Vec<u16>>>,
    power_masks: OnceLock<Vec<u128>>,
    ideals: OnceLock<Vec<(u128, Vec<u16>)>>,
    units: OnceLock<u128>,
    zero_divisors: OnceLock<u128>,
    mult_sets: OnceLock<Vec<u128>>,
    add_orders: OnceLock<Vec<u16>>,
}

/// A finite commutative ring with 1. Cheap to clone; immutable after
/// construction, so it can be shared freely across threads.
#[derive(Clone)]
pub struct FiniteRing {
    data: Arc<RingData>,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteRing({}, order {})", self.recipe(), self.order())
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other)
    }
}
impl Eq for FiniteRing {}

impl FiniteRing {
    /// Build a ring from raw tables, validating every axiom by exhaustive
    /// triple loops. `add[i*order+j]` is `i+j`, likewise `mul`.
    pub fn from_tables(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        names: Vec<String>,
        recipe: String,
    ) -> Result<Self> {
        if order < 2 {
            return Err(Error::InvalidOrder(order));
        }
        if order > MAX_ORDER {
            return Err(Error::SizeCap {
                order,
                cap: MAX_ORDER,
            });
        }
        let ring = Self::from_tables_unchecked(order, add, mul, names, recipe);
        ring.validate()?;
        Ok(ring)
    }

    /// Build without validation. The caller asserts the tables form a
    /// commutative ring with zero at index 0 and one at index 1; use
    /// [`FiniteRing::validate`] to check later (fault-injection tests rely
    /// on this split).
    pub fn from_tables_unchecked(
        order: usize,
        add: Vec<u16>,
        mul: Vec<u16>,
        names: Vec<String>,
        recipe: String,
    ) -> Self {
        let mut neg = vec![0u16; order];
        for (a, slot) in neg.iter_mut().enumerate() {
            for b in 0..order {
                if add.get(a * order + b).copied() == Some(0) {
                    *slot = b as u16;
                    break;
                }
            }
        }
        FiniteRing {
            data: Arc::new(RingData {
                order,
                add,
                mul,
                neg,
                names,
                recipe,
                ann: OnceLock::new(),
                power_lists: OnceLock::new(),
                power_masks: OnceLock::new(),
                ideals: OnceLock::new(),
                units: OnceLock::new(),
                zero_divisors: OnceLock::new(),
                mult_sets: OnceLock::new(),
                add_orders: OnceLock::new(),
            }),
        }
    }

    /// The one-element ring. Only reachable as a degenerate localization
    /// output; it never validates as a standalone ring.
    pub(crate) fn trivial(recipe: String) -> Self {
        Self::from_tables_unchecked(1, vec![0], vec![0], vec!["0".into()], recipe)
    }

    /// Re-run the full ring-axiom check on the stored tables.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        let d = &self.data;
        if d.add.len() != n * n || d.mul.len() != n * n || d.names.len() != n {
            return Err(Error::AxiomViolation("table dimensions are wrong".into()));
        }
        if d.add.iter().chain(d.mul.iter()).any(|&x| (x as usize) >= n) {
            return Err(Error::AxiomViolation("table entry out of range".into()));
        }
        let add = |a: usize, b: usize| d.add[a * n + b] as usize;
        let mul = |a: usize, b: usize| d.mul[a * n + b] as usize;
        for a in 0..n {
            if add(0, a) != a {
                return Err(Error::AxiomViolation(format!("0 + {a} != {a}")));
            }
            if mul(1, a) != a {
                return Err(Error::AxiomViolation(format!("1 * {a} != {a}")));
            }
            if (0..n).all(|b| add(a, b) != 0) {
                return Err(Error::AxiomViolation(format!(
                    "{a} has no additive inverse"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if add(a, b) != add(b, a) {
                    return Err(Error::AxiomViolation(format!("{a} + {b} not commutative")));
                }
                if mul(a, b) != mul(b, a) {
                    return Err(Error::AxiomViolation(format!("{a} * {b} not commutative")));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if add(add(a, b), c) != add(a, add(b, c)) {
                        return Err(Error::AxiomViolation(format!(
                            "addition not associative at ({a},{b},{c})"
                        )));
                    }
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(Error::AxiomViolation(format!(
                            "multiplication not associative at ({a},{b},{c})"
                        )));
                    }
                    if mul(a, add(b, c)) != add(mul(a, b), mul(a, c)) {
                        return Err(Error::AxiomViolation(format!(
                            "distributivity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.data.order
    }

    pub fn is_trivial(&self) -> bool {
        self.data.order == 1
    }

    pub fn recipe(&self) -> &str {
        &self.data.recipe
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.data.names[e.idx()]
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    #[inline]
    pub fn one(&self) -> Elem {
        Elem(if self.data.order == 1 { 0 } else { 1 })
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.data.add[a.idx() * self.data.order + b.idx()])
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        Elem(self.data.mul[a.idx() * self.data.order + b.idx()])
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.data.neg[a.idx()])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.data.order as u16).map(Elem)
    }

    pub fn full_mask(&self) -> u128 {
        full_mask(self.data.order)
    }

    /// Same ring: pointer-identical or table-identical.
    pub fn same_ring(&self, other: &FiniteRing) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.order == other.data.order
                && self.data.add == other.data.add
                && self.data.mul == other.data.mul)
    }

    /// Raw addition and multiplication tables (row-major, `a*order + b`).
    /// Useful for fault injection and for constructions that permute or
    /// embed this ring.
    pub fn tables(&self) -> (&[u16], &[u16]) {
        (&self.data.add, &self.data.mul)
    }

    /// `ann[a] = { x : x*a = 0 }` as a mask, for every `a`.
    pub(crate) fn ann_masks(&self) -> &[u128] {
        self.data.ann.get_or_init(|| {
            let n = self.order();
            (0..n)
                .map(|a| {
                    let mut m = 0u128;
                    for x in 0..n {
                        if self.data.mul[x * n + a] == 0 {
                            m |= 1 << x;
                        }
                    }
                    m
                })
                .collect()
        })
    }

    /// Distinct powers `a, a^2, ...` of each element, up to the first repeat.
    pub(crate) fn power_lists(&self) -> &[Vec<u16>] {
        self.data.power_lists.get_or_init(|| {
            let n = self.order();
            (0..n)
                .map(|a| {
                    let mut seen = 0u128;
                    let mut list = Vec::new();
                    let mut p = a as u16;
                    loop {
                        if seen & (1u128 << p) != 0 {
                            break;
                        }
                        seen |= 1u128 << p;
                        list.push(p);
                        p = self.data.mul[p as usize * n + a];
                    }
                    list
                })
                .collect()
        })
    }

    /// `{ a^n : n >= 1 }` as a mask, for every `a`.
    pub(crate) fn power_masks(&self) -> &[u128] {
        self.data.power_masks.get_or_init(|| {
            self.power_lists()
                .iter()
                .map(|l| l.iter().fold(0u128, |m, &p| m | (1 << p)))
                .collect()
        })
    }

    pub(crate) fn ideals_cache(&self) -> &[(u128, Vec<u16>)] {
        self.data
            .ideals
            .get_or_init(|| crate::ideal::enumerate_ideal_masks(self))
    }

    pub(crate) fn mult_sets_cache(&self) -> &[u128] {
        self.data
            .mult_sets
            .get_or_init(|| crate::multset::closed_mult_set_masks(self))
    }

    /// Additive order of every element.
    pub(crate) fn add_orders(&self) -> &[u16] {
        self.data.add_orders.get_or_init(|| {
            let n = self.order();
            (0..n as u16)
                .map(|a| {
                    let mut k = 1u16;
                    let mut acc = a;
                    while acc != 0 {
                        acc = self.data.add[acc as usize * n + a as usize];
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    /// Mask of invertible elements.
    pub fn units_mask(&self) -> u128 {
        *self.data.units.get_or_init(|| {
            let n = self.order();
            let one = self.one().0;
            let mut m = 0u128;
            for a in 0..n {
                if (0..n).any(|b| self.data.mul[a * n + b] == one) {
                    m |= 1 << a;
                }
            }
            m
        })
    }

    /// Mask of nonzero elements that kill some nonzero element.
    pub fn zero_divisors_mask(&self) -> u128 {
        *self.data.zero_divisors.get_or_init(|| {
            let mut m = 0u128;
            for a in self.elements().skip(1) {
                if self.ann_masks()[a.idx()] & !1u128 != 0 {
                    m |= a.bit();
                }
            }
            m
        })
    }

    pub fn units(&self) -> Vec<Elem> {
        mask_elems(self.units_mask()).collect()
    }

    pub fn zero_divisors(&self) -> Vec<Elem> {
        mask_elems(self.zero_divisors_mask()).collect()
    }

    /// `x^2 = x` for every element.
    pub fn is_boolean(&self) -> bool {
        self.elements().all(|x| self.mul(x, x) == x)
    }

    /// Nilpotent elements: some power is 0.
    pub fn nilpotents_mask(&self) -> u128 {
        let mut m = 0u128;
        for a in self.elements() {
            if self.power_masks()[a.idx()] & 1 != 0 {
                m |= a.bit();
            }
        }
        m
    }

    /// If the additive subgroup generated by 1 is the whole ring, the index
    /// `k` with `k*1 = a` for each `a`; otherwise `None`.
    pub(crate) fn index_as_multiple_of_one(&self) -> Option<Vec<u16>> {
        let n = self.order();
        let mut idx = vec![u16::MAX; n];
        let mut acc = self.zero();
        for k in 0..n as u16 {
            if idx[acc.idx()] != u16::MAX {
                return None;
            }
            idx[acc.idx()] = k;
            acc = self.add(acc, self.one());
        }
        Some(idx)
    }
}

/// Reorder tables so that `zero_nat` lands at index 0 and `one_nat` at
/// index 1, all other elements keeping their relative order.
fn reindex_zero_one(
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    names: Vec<String>,
    zero_nat: usize,
    one_nat: usize,
) -> (Vec<u16>, Vec<u16>, Vec<String>) {
    assert_ne!(zero_nat, one_nat);
    let mut perm: Vec<usize> = Vec::with_capacity(order); // new index -> old index
    perm.push(zero_nat);
    perm.push(one_nat);
    perm.extend((0..order).filter(|&i| i != zero_nat && i != one_nat));
    let mut inv = vec![0u16; order]; // old index -> new index
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new as u16;
    }
    let mut new_add = vec![0u16; order * order];
    let mut new_mul = vec![0u16; order * order];
    for i in 0..order {
        for j in 0..order {
            new_add[i * order + j] = inv[add[perm[i] * order + perm[j]] as usize];
            new_mul[i * order + j] = inv[mul[perm[i] * order + perm[j]] as usize];
        }
    }
    let new_names = perm.iter().map(|&old| names[old].clone()).collect();
    (new_add, new_mul, new_names)
}

/// The ring of integers modulo `n`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    if n > MAX_ORDER {
        return Err(Error::SizeCap {
            order: n,
            cap: MAX_ORDER,
        });
    }
    let mut add = vec![0u16; n * n];
    let mut mul = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            add[a * n + b] = ((a + b) % n) as u16;
            mul[a * n + b] = ((a * b) % n) as u16;
        }
    }
    let names = (0..n).map(|k| format!("{k} mod {n}")).collect();
    FiniteRing::from_tables(n, add, mul, names, format!("Z{n}"))
}

/// Componentwise product ring. Pairs `(a, b)` are enumerated with `a`
/// outermost (natural index `a*|B| + b`) and then reindexed so 0 and 1
/// sit at indices 0 and 1.
pub fn direct_product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
    let (na, nb) = (a.order(), b.order());
    let order = na * nb;
    if order > MAX_ORDER {
        return Err(Error::SizeCap {
            order,
            cap: MAX_ORDER,
        });
    }
    let pair = |x: usize, y: usize| x * nb + y;
    let mut add = vec![0u16; order * order];
    let mut mul = vec![0u16; order * order];
    let mut names = vec![String::new(); order];
    for xa in 0..na {
        for ya in 0..nb {
            let i = pair(xa, ya);
            names[i] = format!("({}, {})", a.name(Elem(xa as u16)), b.name(Elem(ya as u16)));
            for xb in 0..na {
                for yb in 0..nb {
                    let j = pair(xb, yb);
                    add[i * order + j] = pair(
                        a.add(Elem(xa as u16), Elem(xb as u16)).idx(),
                        b.add(Elem(ya as u16), Elem(yb as u16)).idx(),
                    ) as u16;
                    mul[i * order + j] = pair(
                        a.mul(Elem(xa as u16), Elem(xb as u16)).idx(),
                        b.mul(Elem(ya as u16), Elem(yb as u16)).idx(),
                    ) as u16;
                }
            }
        }
    }
    let one_nat = pair(a.one().idx(), b.one().idx());
    let (add, mul, names) = reindex_zero_one(order, add, mul, names, 0, one_nat);
    FiniteRing::from_tables(
        order,
        add,
        mul,
        names,
        format!("{}x{}", a.recipe(), b.recipe()),
    )
}

/// Quotient ring together with the canonical surjection and its kernel.
pub struct QuotientMap {
    pub quotient: FiniteRing,
    pub kernel: crate::ideal::Ideal,
    source: FiniteRing,
    map: Vec<u16>,
}

impl QuotientMap {
    pub fn source(&self) -> &FiniteRing {
        &self.source
    }

    pub fn apply(&self, a: Elem) -> Elem {
        Elem(self.map[a.idx()])
    }

    /// Image of a multiplicative set under the surjection.
    pub fn image_mult_set(&self, s: &crate::multset::MultSet) -> crate::multset::MultSet {
        let gens: Vec<Elem> = s.elems().map(|e| self.apply(e)).collect();
        crate::multset::mult_closure(&self.quotient, &gens)
    }
}

/// Coset ring `R/I`. Cosets are ordered by their smallest representative,
/// which puts the zero coset first and the coset of 1 second.
pub fn quotient_ring(r: &FiniteRing, ideal: &crate::ideal::Ideal) -> Result<QuotientMap> {
    if !ideal.ring().same_ring(r) {
        return Err(Error::RingMismatch);
    }
    if ideal.members() == r.full_mask() {
        return Err(Error::ImproperQuotient);
    }
    let n = r.order();
    let mut coset_rep = vec![u16::MAX; n]; // element -> smallest member of its coset
    for a in r.elements() {
        if coset_rep[a.idx()] != u16::MAX {
            continue;
        }
        let mut members: Vec<u16> = mask_elems(ideal.members()).map(|i| r.add(a, i).0).collect();
        members.sort_unstable();
        let rep = members[0];
        for m in members {
            coset_rep[m as usize] = rep;
        }
    }
    let mut reps: Vec<u16> = coset_rep.to_vec();
    reps.sort_unstable();
    reps.dedup();
    debug_assert_eq!(reps[0], 0);
    debug_assert_eq!(reps[1], 1, "1 is always the second-smallest coset rep");
    let q = reps.len();
    let coset_index = |e: u16| reps.binary_search(&coset_rep[e as usize]).unwrap();
    let mut add = vec![0u16; q * q];
    let mut mul = vec![0u16; q * q];
    for (i, &ri) in reps.iter().enumerate() {
        for (j, &rj) in reps.iter().enumerate() {
            add[i * q + j] = coset_index(r.add(Elem(ri), Elem(rj)).0) as u16;
            mul[i * q + j] = coset_index(r.mul(Elem(ri), Elem(rj)).0) as u16;
        }
    }
    let names = reps
        .iter()
        .map(|&rep| format!("[{}]", r.name(Elem(rep))))
        .collect();
    let gen_list = ideal
        .generators()
        .iter()
        .map(|g| g.idx().to_string())
        .collect::<Vec<_>>()
        .join(",");
    let recipe = format!("{}/({})", r.recipe(), gen_list);
    let quotient = FiniteRing::from_tables(q, add, mul, names, recipe)?;
    let map: Vec<u16> = (0..n as u16).map(|e| coset_index(e) as u16).collect();
    Ok(QuotientMap {
        quotient,
        kernel: ideal.clone(),
        source: r.clone(),
        map,
    })
}

/// Module half of an idealization `R(+)M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleSpec {
    /// `M = R` with the ring multiplication as scalar action.
    SelfModule,
    /// `M = Z_m`; requires `R` to be additively generated by 1 (so `R` is
    /// a copy of `Z_n`) and `m | n`.
    Cyclic(usize),
}

/// Idealization `R(+)M`: pairs with componentwise addition and
/// `(a, m)(b, n) = (ab, an + bm)`. Identity is `(1, 0)`.
pub fn idealization(r: &FiniteRing, module: ModuleSpec) -> Result<FiniteRing> {
    let n = r.order();
    match module {
        ModuleSpec::SelfModule => {
            let order = n * n;
            if order > MAX_ORDER {
                return Err(Error::SizeCap {
                    order,
                    cap: MAX_ORDER,
                });
            }
            let pair = |x: usize, y: usize| x * n + y;
            let mut add = vec![0u16; order * order];
            let mut mul = vec![0u16; order * order];
            let mut names = vec![String::new(); order];
            for x1 in 0..n {
                for m1 in 0..n {
                    let i = pair(x1, m1);
                    names[i] =
                        format!("({}, {})", r.name(Elem(x1 as u16)), r.name(Elem(m1 as u16)));
                    for x2 in 0..n {
                        for m2 in 0..n {
                            let j = pair(x2, m2);
                            let (e1, e2) = (Elem(x1 as u16), Elem(x2 as u16));
                            let (f1, f2) = (Elem(m1 as u16), Elem(m2 as u16));
                            add[i * order + j] =
                                pair(r.add(e1, e2).idx(), r.add(f1, f2).idx()) as u16;
                            let cross = r.add(r.mul(e1, f2), r.mul(e2, f1));
                            mul[i * order + j] = pair(r.mul(e1, e2).idx(), cross.idx()) as u16;
                        }
                    }
                }
            }
            let one_nat = pair(r.one().idx(), 0);
            let (add, mul, names) = reindex_zero_one(order, add, mul, names, 0, one_nat);
            FiniteRing::from_tables(order, add, mul, names, format!("{}(+)self", r.recipe()))
        }
        ModuleSpec::Cyclic(m) => {
            if m == 0 {
                return Err(Error::ModuleAction("module Z_0 is not finite".into()));
            }
            let scalar = r.index_as_multiple_of_one().ok_or_else(|| {
                Error::ModuleAction(format!(
                    "{} is not additively generated by 1, so Z_{m} has no canonical action",
                    r.recipe()
                ))
            })?;
            if !n.is_multiple_of(m) {
                return Err(Error::ModuleAction(format!(
                    "module order {m} does not divide ring order {n}"
                )));
            }
            let order = n * m;
            if order > MAX_ORDER {
                return Err(Error::SizeCap {
                    order,
                    cap: MAX_ORDER,
                });
            }
            let pair = |x: usize, y: usize| x * m + y;
            let mut add = vec![0u16; order * order];
            let mut mul = vec![0u16; order * order];
            let mut names = vec![String::new(); order];
            for x1 in 0..n {
                let k1 = scalar[x1] as usize;
                for m1 in 0..m {
                    let i = pair(x1, m1);
                    names[i] = format!("({}, {} mod {})", r.name(Elem(x1 as u16)), m1, m);
                    for (x2, &s2) in scalar.iter().enumerate().take(n) {
                        let k2 = s2 as usize;
                        for m2 in 0..m {
                            let j = pair(x2, m2);
                            let (e1, e2) = (Elem(x1 as u16), Elem(x2 as u16));
                            add[i * order + j] = pair(r.add(e1, e2).idx(), (m1 + m2) % m) as u16;
                            mul[i * order + j] =
                                pair(r.mul(e1, e2).idx(), (k1 * m2 + k2 * m1) % m) as u16;
                        }
                    }
                }
            }
            let one_nat = pair(r.one().idx(), 0);
            let (add, mul, names) = reindex_zero_one(order, add, mul, names, 0, one_nat);
            FiniteRing::from_tables(order, add, mul, names, format!("{}(+)Z{m}", r.recipe()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zn_small_products() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.one(), Elem(1));
        assert_eq!(z6.mul(Elem(2), Elem(3)), Elem(0));
        let z12 = make_zn(12).unwrap();
        assert_eq!(z12.mul(Elem(3), Elem(4)), Elem(0));
        assert_eq!(z12.mul(Elem(5), Elem(5)), Elem(1));
        let z2 = make_zn(2).unwrap();
        assert_eq!(z2.order(), 2);
        assert!(z2.units_mask() == 0b10);
    }

    #[test]
    fn zn_rejects_small_orders() {
        assert_eq!(make_zn(0).unwrap_err(), Error::InvalidOrder(0));
        assert_eq!(make_zn(1).unwrap_err(), Error::InvalidOrder(1));
        assert!(matches!(make_zn(500).unwrap_err(), Error::SizeCap { .. }));
    }

    #[test]
    fn product_zero_divisors_and_boolean() {
        let z2 = make_zn(2).unwrap();
        let z3 = make_zn(3).unwrap();
        let b4 = direct_product(&z2, &z2).unwrap();
        assert!(b4.is_boolean());
        assert!(!make_zn(4).unwrap().is_boolean());
        let z3xz3 = direct_product(&z3, &z3).unwrap();
        assert!(z3xz3.zero_divisors_mask() != 0);
        let z6 = direct_product(&z2, &z3).unwrap();
        assert_eq!(z6.order(), 6);
        assert_eq!(z6.zero(), Elem(0));
        assert_eq!(z6.one(), Elem(1));
        z6.validate().unwrap();
    }

    #[test]
    fn units_and_zero_divisors_of_z6() {
        let z6 = make_zn(6).unwrap();
        assert_eq!(z6.units(), vec![Elem(1), Elem(5)]);
        assert_eq!(z6.zero_divisors(), vec![Elem(2), Elem(3), Elem(4)]);
        let z5 = make_zn(5).unwrap();
        assert_eq!(z5.zero_divisors(), vec![]);
    }

    #[test]
    fn idealization_square_zero() {
        let z2 = make_zn(2).unwrap();
        let r = idealization(&z2, ModuleSpec::Cyclic(2)).unwrap();
        assert_eq!(r.order(), 4);
        assert_eq!(r.one(), Elem(1));
        // (0,1) squares to (0,0)
        let e = r
            .elements()
            .find(|&e| r.name(e).starts_with("(0 mod 2, 1"))
            .unwrap();
        assert_eq!(r.mul(e, e), r.zero());
        let z3 = make_zn(3).unwrap();
        let r3 = idealization(&z3, ModuleSpec::SelfModule).unwrap();
        let a = r3
            .elements()
            .find(|&e| r3.name(e) == "(0 mod 3, 1 mod 3)")
            .unwrap();
        let b = r3
            .elements()
            .find(|&e| r3.name(e) == "(0 mod 3, 2 mod 3)")
            .unwrap();
        assert_eq!(r3.mul(a, b), r3.zero());
    }

    #[test]
    fn idealization_rejects_bad_module() {
        let z6 = make_zn(6).unwrap();
        assert!(matches!(
            idealization(&z6, ModuleSpec::Cyclic(4)),
            Err(Error::ModuleAction(_))
        ));
        let z2 = make_zn(2).unwrap();
        let b4 = direct_product(&z2, &z2).unwrap();
        assert!(matches!(
            idealization(&b4, ModuleSpec::Cyclic(2)),
            Err(Error::ModuleAction(_))
        ));
    }

    #[test]
    fn quotient_surjection_and_kernel() {
        let z12 = make_zn(12).unwrap();
        for ideal in crate::ideal::enumerate_ideals(&z12) {
            if !ideal.is_proper() {
                assert!(matches!(
                    quotient_ring(&z12, &ideal),
                    Err(Error::ImproperQuotient)
                ));
                continue;
            }
            let qm = quotient_ring(&z12, &ideal).unwrap();
            assert_eq!(qm.quotient.order() * ideal.len(), z12.order());
            assert_eq!(qm.kernel.members(), ideal.members());
            // the map is a surjective homomorphism with the ideal as kernel
            for a in z12.elements() {
                assert_eq!(qm.apply(a) == qm.quotient.zero(), ideal.contains(a));
                for b in z12.elements() {
                    assert_eq!(
                        qm.apply(z12.add(a, b)),
                        qm.quotient.add(qm.apply(a), qm.apply(b))
                    );
                    assert_eq!(
                        qm.apply(z12.mul(a, b)),
                        qm.quotient.mul(qm.apply(a), qm.apply(b))
                    );
                }
            }
        }
        // Z12/(6) ~ Z6, Z12/(4) ~ Z4, Z6/(0) ~ Z6
        let six = crate::ideal::generated_ideal(&z12, &[Elem(6)]);
        let q6 = quotient_ring(&z12, &six).unwrap().quotient;
        assert!(crate::iso::are_isomorphic(&q6, &make_zn(6).unwrap()));
        let four = crate::ideal::generated_ideal(&z12, &[Elem(4)]);
        let q4 = quotient_ring(&z12, &four).unwrap().quotient;
        assert!(crate::iso::are_isomorphic(&q4, &make_zn(4).unwrap()));
        let z6 = make_zn(6).unwrap();
        let q0 = quotient_ring(&z6, &crate::ideal::zero_ideal(&z6))
            .unwrap()
            .quotient;
        assert!(crate::iso::are_isomorphic(&q0, &z6));
    }

    #[test]
    fn product_order_cap() {
        let z12 = make_zn(12).unwrap();
        assert!(matches!(
            direct_product(&z12, &z12),
            Err(Error::SizeCap { order: 144, .. })
        ));
    }

    #[test]
    fn validator_catches_corruption() {
        let z12 = make_zn(12).unwrap();
        let (add, mul) = z12.tables();
        let mut bad_mul = mul.to_vec();
        bad_mul[2 * 12 + 2] = (bad_mul[2 * 12 + 2] + 1) % 12;
        let names = z12.elements().map(|e| z12.name(e).to_string()).collect();
        let corrupted =
            FiniteRing::from_tables_unchecked(12, add.to_vec(), bad_mul, names, "Z12".into());
        assert!(matches!(
            corrupted.validate(),
            Err(Error::AxiomViolation(_))
        ));
    }
}
