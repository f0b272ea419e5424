//! A closure operator on subsets of an abstract system and the quasi-order
//! derived from it.
//!
//! The one-step operator [`closure_step`] collects every element `z` reachable
//! by the guarded schema
//!
//! ```text
//! (u⋏v⋏w)x ⊡ y ≤ z·t   with   u⋏v ∈ H   and   (v⋏w)x ∈ H,
//! ```
//!
//! where `u,v,w,z` range over the system, `x,y,t` over the system extended by
//! the adjoined identity `e`, and `a ⊡ b ≤ c` abbreviates `a ⊢ b ∧ a·b ≤ c`
//! (with `≤` the natural order of the meet).  Iterating the step to a fixpoint
//! yields [`f_closure`]; an independent route via four closure rules
//! ([`f_closure_by_rules`]) and a bounded-depth unrolled membership oracle
//! ([`unrolled_membership`]) exist for cross-checking.  Rows of
//! [`chi0`] are the closures of singletons.

use crate::algebra::{
    record_chi_meet_extend, record_left_regular, record_quasi_order, record_right_negative,
    record_zeta_in_rel, require_structure, AbstractSystem, CheckRecord, CheckReport, Relation,
    Star,
};
use crate::{Error, Result};

/// Largest system size accepted by [`check_chi0_minimality`]; the check
/// enumerates all `2^(m²)` binary relations.
pub const MAX_MINIMALITY_SIZE: usize = 4;

/// Largest unroll depth accepted by [`unrolled_membership`]; the tuple space
/// grows doubly exponentially with the depth.
pub const MAX_UNROLL_DEPTH: usize = 2;

/// A subset of the elements of a fixed abstract system, as a bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn full(size: usize) -> ElementSet {
        debug_assert!(size <= 64);
        if size == 64 {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << size) - 1)
        }
    }

    pub fn singleton(index: usize) -> ElementSet {
        debug_assert!(index < 64);
        ElementSet(1 << index)
    }

    /// Builds a set from raw bits, rejecting bits at or beyond `size`.
    pub fn from_bits(size: usize, bits: u64) -> Result<ElementSet> {
        let mask = ElementSet::full(size).0;
        if bits & !mask != 0 {
            return Err(Error::ElementOutOfRange {
                index: (bits & !mask).trailing_zeros() as usize,
                size,
            });
        }
        Ok(ElementSet(bits))
    }

    pub fn from_indices(size: usize, indices: &[usize]) -> Result<ElementSet> {
        let mut set = ElementSet::EMPTY;
        for &index in indices {
            if index >= size {
                return Err(Error::ElementOutOfRange { index, size });
            }
            set.insert(index);
        }
        Ok(set)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 >> index & 1 == 1
    }

    pub fn insert(&mut self, index: usize) {
        debug_assert!(index < 64);
        self.0 |= 1 << index;
    }

    pub fn union(self, other: ElementSet) -> ElementSet {
        ElementSet(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: ElementSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let index = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(index)
            }
        })
    }

    pub fn indices(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// How the depth-2 unrolled schema is read.
///
/// `PerTuple` (the default) is the exact unrolling of the iterated step:
/// every membership guard uses its own tuple's `u`, and the two inner
/// targets are the outer tuple's guard values `u₁⋏v₁` and `(v₁⋏w₁)x₁`.
/// `FirstTuple` is the alternative reading in which the guards share the
/// first tuple's `u` and the second inner target is `v₁x₁`, without the
/// meet; it can strictly overshoot the iterated step and exists only for
/// logged comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum UnrollReading {
    #[default]
    PerTuple,
    FirstTuple,
}

/// Operations over `G ∪ {e}` relative to a fixed system, plus the lookup
/// tables shared by the closure scans.
///
/// Construction validates the semigroup and semilattice laws and fixes the
/// natural order `x ≤ y ⟺ x⋏y = x`.
pub struct StarOps<'a> {
    sys: &'a AbstractSystem,
    leq: Relation,
    stars: Vec<Star>,
    /// `below_translates[q]`: all `a` with `a ≤ q·t` for some `t ∈ G*`.
    below_translates: Vec<u64>,
    /// `covers[a]`: all `z` with `a ≤ z·t` for some `t ∈ G*` (the transpose).
    covers: Vec<u64>,
}

impl<'a> StarOps<'a> {
    pub fn new(sys: &'a AbstractSystem) -> Result<StarOps<'a>> {
        let leq = require_structure(sys)?;
        let m = sys.size();
        let mut stars: Vec<Star> = (0..m).map(Star::Elem).collect();
        stars.push(Star::E);

        let mut below_translates = vec![0u64; m];
        let mut covers = vec![0u64; m];
        for (z, below) in below_translates.iter_mut().enumerate() {
            for &t in &stars {
                let q = emul(sys, z, t);
                for (a, cover) in covers.iter_mut().enumerate() {
                    if leq.contains(a, q) {
                        *below |= 1 << a;
                        *cover |= 1 << z;
                    }
                }
            }
        }
        Ok(StarOps {
            sys,
            leq,
            stars,
            below_translates,
            covers,
        })
    }

    pub fn system(&self) -> &AbstractSystem {
        self.sys
    }

    /// The natural order of the meet.
    pub fn natural_order(&self) -> &Relation {
        &self.leq
    }

    pub fn mul(&self, a: Star, b: Star) -> Star {
        self.sys.star_mul(a, b)
    }

    /// `a ≤ b` over `G ∪ {e}`: the natural order between elements, `e ≤ e`,
    /// and nothing else involving `e`.
    pub fn leq(&self, a: Star, b: Star) -> bool {
        match (a, b) {
            (Star::E, Star::E) => true,
            (Star::E, Star::Elem(_)) | (Star::Elem(_), Star::E) => false,
            (Star::Elem(x), Star::Elem(y)) => self.leq.contains(x, y),
        }
    }

    pub fn delta(&self, a: Star, b: Star) -> bool {
        self.sys.star_delta(a, b)
    }

    /// `x ⊡ y ≤ z`: semiadjacency of `x` and `y` together with `x·y ≤ z`.
    pub fn boxdot_leq(&self, x: Star, y: Star, z: Star) -> bool {
        self.delta(x, y) && self.leq(self.mul(x, y), z)
    }

    fn size(&self) -> usize {
        self.sys.size()
    }

    /// `p ⊢ y` for an element `p` and a star `y`.
    fn delta_elem(&self, p: usize, y: Star) -> bool {
        match y {
            Star::E => true,
            Star::Elem(b) => self.sys.delta(p, b),
        }
    }

    fn step(&self, h: u64) -> u64 {
        let sys = self.sys;
        let m = self.size();
        let mut result = 0u64;
        for u in 0..m {
            for v in 0..m {
                if h >> sys.meet(u, v) & 1 == 0 {
                    continue;
                }
                for w in 0..m {
                    let vw = sys.meet(v, w);
                    let uvw = sys.meet(sys.meet(u, v), w);
                    for &x in &self.stars {
                        if h >> emul(sys, vw, x) & 1 == 0 {
                            continue;
                        }
                        let p = emul(sys, uvw, x);
                        for &y in &self.stars {
                            if self.delta_elem(p, y) {
                                result |= self.covers[emul(sys, p, y)];
                            }
                        }
                    }
                }
            }
        }
        result
    }

    fn closure(&self, h: u64) -> (u64, usize) {
        let mut current = h;
        let mut iterations = 0;
        loop {
            let next = self.step(current);
            if next == current {
                return (current, iterations);
            }
            debug_assert!(current & !next == 0, "step chain must be monotone");
            current = next;
            iterations += 1;
            debug_assert!(iterations <= self.size() + 1);
        }
    }

    /// One membership tuple of the unrolled schema against `target`:
    /// `∃ u,v,w ∈ G, x,y,t ∈ G*` with the two guards in `h` and
    /// `(u⋏v⋏w)x ⊡ y ≤ target·t`.  With `guard_u` set, the first guard reads
    /// `guard_u ⋏ v ∈ h` instead of `u ⋏ v ∈ h`.
    fn tuple_sat(&self, h: u64, target: usize, guard_u: Option<usize>) -> bool {
        let sys = self.sys;
        let m = self.size();
        let reach = self.below_translates[target];
        for u in 0..m {
            for v in 0..m {
                let guard = sys.meet(guard_u.unwrap_or(u), v);
                if h >> guard & 1 == 0 {
                    continue;
                }
                for w in 0..m {
                    let vw = sys.meet(v, w);
                    let uvw = sys.meet(sys.meet(u, v), w);
                    for &x in &self.stars {
                        if h >> emul(sys, vw, x) & 1 == 0 {
                            continue;
                        }
                        let p = emul(sys, uvw, x);
                        for &y in &self.stars {
                            if self.delta_elem(p, y) && reach >> emul(sys, p, y) & 1 == 1 {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }
}

/// The element `g·s` for `g ∈ G` and a star `s`; always lands in `G`.
fn emul(sys: &AbstractSystem, g: usize, s: Star) -> usize {
    match s {
        Star::E => g,
        Star::Elem(y) => sys.mul(g, y),
    }
}

fn check_members(sys: &AbstractSystem, h: ElementSet) -> Result<()> {
    let mask = ElementSet::full(sys.size()).0;
    if h.0 & !mask != 0 {
        return Err(Error::ElementOutOfRange {
            index: (h.0 & !mask).trailing_zeros() as usize,
            size: sys.size(),
        });
    }
    Ok(())
}

/// One application of the closure schema to `h`.
pub fn closure_step(sys: &AbstractSystem, h: ElementSet) -> Result<ElementSet> {
    check_members(sys, h)?;
    let ops = StarOps::new(sys)?;
    Ok(ElementSet(ops.step(h.0)))
}

/// The least fixpoint of [`closure_step`] containing `h`.
pub fn f_closure(sys: &AbstractSystem, h: ElementSet) -> Result<ElementSet> {
    Ok(f_closure_with_iterations(sys, h)?.0)
}

/// As [`f_closure`], also reporting how many step applications were needed
/// before the chain stabilized (`0` when `h` is already a fixpoint).
pub fn f_closure_with_iterations(
    sys: &AbstractSystem,
    h: ElementSet,
) -> Result<(ElementSet, usize)> {
    check_members(sys, h)?;
    let ops = StarOps::new(sys)?;
    let (closed, iterations) = ops.closure(h.0);
    Ok((ElementSet(closed), iterations))
}

/// Evaluates the closing implication directly: no guarded tuple may reach an
/// element outside `h`.  This deliberately re-scans the raw `z, t`
/// quantifiers instead of reusing [`closure_step`]'s tables, so the two
/// routes stay independent.
pub fn is_f_closed(sys: &AbstractSystem, h: ElementSet) -> Result<bool> {
    check_members(sys, h)?;
    let ops = StarOps::new(sys)?;
    let m = sys.size();
    for u in 0..m {
        for v in 0..m {
            if !h.contains(sys.meet(u, v)) {
                continue;
            }
            for w in 0..m {
                let vw = sys.meet(v, w);
                let uvw = sys.meet(sys.meet(u, v), w);
                for &x in &ops.stars {
                    if !h.contains(emul(sys, vw, x)) {
                        continue;
                    }
                    let p = emul(sys, uvw, x);
                    for &y in &ops.stars {
                        if !ops.delta_elem(p, y) {
                            continue;
                        }
                        let a = emul(sys, p, y);
                        for z in 0..m {
                            if h.contains(z) {
                                continue;
                            }
                            for &t in &ops.stars {
                                if ops.leq.contains(a, emul(sys, z, t)) {
                                    return Ok(false);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(true)
}

/// The four rule instances characterizing closed sets:
/// membership of a product pulls in its left factor; a member pushes out
/// along `δ`; a member pulls in everything above it; and the meet-guard rule
/// `x⋏y ∈ H ∧ (y⋏z)t ∈ H → (x⋏y⋏z)t ∈ H` with `t ∈ G ∪ {e}`.
fn rules_step(sys: &AbstractSystem, stars: &[Star], h: u64) -> u64 {
    let m = sys.size();
    let mut next = h;
    for x in 0..m {
        for y in 0..m {
            if h >> sys.mul(x, y) & 1 == 1 {
                next |= 1 << x;
            }
            if h >> x & 1 == 1 && sys.delta(x, y) {
                next |= 1 << sys.mul(x, y);
            }
            if h >> x & 1 == 1 && sys.meet(x, y) == x {
                next |= 1 << y;
            }
            if h >> sys.meet(x, y) & 1 == 0 {
                continue;
            }
            for z in 0..m {
                let yz = sys.meet(y, z);
                let xyz = sys.meet(sys.meet(x, y), z);
                for &t in stars {
                    if h >> emul(sys, yz, t) & 1 == 1 {
                        next |= 1 << emul(sys, xyz, t);
                    }
                }
            }
        }
    }
    next
}

/// Whether `h` is closed under the four rules; agrees with [`is_f_closed`].
pub fn is_f_closed_by_rules(sys: &AbstractSystem, h: ElementSet) -> Result<bool> {
    check_members(sys, h)?;
    let ops = StarOps::new(sys)?;
    Ok(rules_step(sys, &ops.stars, h.0) == h.0)
}

/// Saturates `h` under the four rules; agrees with [`f_closure`].
pub fn f_closure_by_rules(sys: &AbstractSystem, h: ElementSet) -> Result<ElementSet> {
    check_members(sys, h)?;
    let ops = StarOps::new(sys)?;
    let mut current = h.0;
    loop {
        let next = rules_step(sys, &ops.stars, current);
        if next == current {
            return Ok(ElementSet(current));
        }
        current = next;
    }
}

/// The derived quasi-order: `(x, y) ∈ χ₀` iff `y` lies in the closure of
/// `{x}`.
pub fn chi0(sys: &AbstractSystem) -> Result<Relation> {
    let ops = StarOps::new(sys)?;
    let m = sys.size();
    let rows = (0..m).map(|x| ops.closure(1 << x).0).collect();
    Ok(Relation::from_rows(m, rows).expect("closure stays inside the element range"))
}

/// The conditions the derived quasi-order is minimal for, checked against an
/// arbitrary candidate relation: quasi-order, left regularity, right
/// negativity, containment of the natural order, `x ⊢ y → x ⊏ xy`, and the
/// meet-extension rule with translations over `G ∪ {e}`.
pub fn check_chi_conditions(sys: &AbstractSystem, chi: &Relation) -> Result<CheckReport> {
    if chi.size() != sys.size() {
        return Err(Error::RelationSizeMismatch {
            relation: chi.size(),
            system: sys.size(),
        });
    }
    require_structure(sys)?;
    let m = sys.size();
    let mut stars: Vec<Star> = (0..m).map(Star::Elem).collect();
    stars.push(Star::E);

    let mut report = CheckReport::new();
    report.push(record_quasi_order(chi, "chi-quasi-order"));
    report.push(record_left_regular(sys, chi, "chi-left-regular"));
    report.push(record_right_negative(sys, chi, "chi-right-negative"));
    report.push(record_zeta_in_rel(sys, chi, "zeta-in-chi"));

    let mut product = CheckRecord::pass("delta-product-chi");
    'scan: for x in 0..m {
        for y in 0..m {
            if sys.delta(x, y) && !chi.contains(x, sys.mul(x, y)) {
                product = CheckRecord::fail_at("delta-product-chi", &[x, y]);
                break 'scan;
            }
        }
    }
    report.push(product);

    report.push(record_chi_meet_extend(sys, chi, &stars, "chi-meet-extend"));
    Ok(report)
}

/// Checks that the derived quasi-order satisfies [`check_chi_conditions`] and
/// is contained in every relation that does, by enumerating all `2^(m²)`
/// relations.  Bounded to `m ≤ `[`MAX_MINIMALITY_SIZE`].
pub fn check_chi0_minimality(sys: &AbstractSystem) -> Result<CheckReport> {
    let m = sys.size();
    if m > MAX_MINIMALITY_SIZE {
        return Err(Error::BoundExceeded {
            what: "system size for relation enumeration",
            value: m,
            max: MAX_MINIMALITY_SIZE,
        });
    }
    let chi0 = chi0(sys)?;
    minimality_of(sys, &chi0)
}

/// Minimality machinery with an injectable candidate, so tests can exercise
/// the failure path with relations other than the computed one.
pub(crate) fn minimality_of(sys: &AbstractSystem, candidate: &Relation) -> Result<CheckReport> {
    let m = sys.size();
    let mut report = CheckReport::new();

    let own = check_chi_conditions(sys, candidate)?;
    report.push(match own.first_failure() {
        None => CheckRecord::pass("chi0-conditions"),
        Some(failure) => CheckRecord::fail(
            "chi0-conditions",
            failure
                .witness()
                .expect("failing records carry witnesses")
                .to_vec(),
        ),
    });

    // pairs every passing relation must contain: reflexivity, the natural
    // order, and the product pairs forced by δ — cheap rejection before the
    // full condition scan
    let mut required = vec![0u64; m];
    for (x, row) in required.iter_mut().enumerate() {
        *row |= 1 << x;
        for y in 0..m {
            if sys.meet(x, y) == x {
                *row |= 1 << y;
            }
            if sys.delta(x, y) {
                *row |= 1 << sys.mul(x, y);
            }
        }
    }

    let mut minimal = CheckRecord::pass("chi0-minimal");
    'masks: for mask in 0u64..1u64 << (m * m) {
        let mut rows = vec![0u64; m];
        let mut contains_candidate = true;
        let mut contains_required = true;
        for (x, row) in rows.iter_mut().enumerate() {
            *row = mask >> (x * m) & ((1 << m) - 1);
            contains_candidate &= candidate.row(x) & !*row == 0;
            contains_required &= required[x] & !*row == 0;
        }
        if contains_candidate || !contains_required {
            continue;
        }
        let rel = Relation::from_rows(m, rows).expect("mask rows fit the size");
        if check_chi_conditions(sys, &rel)?.all_pass() {
            let bits = (0..m * m)
                .map(|k| Star::Elem((mask >> k & 1) as usize))
                .collect();
            minimal = CheckRecord::fail("chi0-minimal", bits);
            break 'masks;
        }
    }
    report.push(minimal);
    Ok(report)
}

/// Membership of `z` in the `depth`-fold step image of `seed`, evaluated by
/// the unrolled existential schema rather than by iterating
/// [`closure_step`].  Depth is bounded by [`MAX_UNROLL_DEPTH`].
///
/// At depth 2 the schema reads: some guarded tuple reaches `z` while two
/// further guarded tuples reach the first tuple's guard values; see
/// [`UnrollReading`] for the two ways those inner targets and guards are
/// spelled out.
pub fn unrolled_membership(
    sys: &AbstractSystem,
    z: usize,
    seed: ElementSet,
    depth: usize,
    reading: UnrollReading,
) -> Result<bool> {
    let m = sys.size();
    if z >= m {
        return Err(Error::ElementOutOfRange { index: z, size: m });
    }
    check_members(sys, seed)?;
    if !(1..=MAX_UNROLL_DEPTH).contains(&depth) {
        return Err(Error::BoundExceeded {
            what: "unroll depth",
            value: depth,
            max: MAX_UNROLL_DEPTH,
        });
    }
    let ops = StarOps::new(sys)?;
    let h = seed.0;

    if depth == 1 {
        return Ok(ops.tuple_sat(h, z, None));
    }

    // depth 2: memoized inner-tuple verdicts per target (and per shared
    // guard element under the literal reading)
    let mut per_target: Vec<Option<bool>> = vec![None; m];
    let mut per_target_u: Vec<Option<bool>> = vec![None; m * m];
    let mut sat = |target: usize, u1: usize| -> bool {
        match reading {
            UnrollReading::PerTuple => {
                *per_target[target].get_or_insert_with(|| ops.tuple_sat(h, target, None))
            }
            UnrollReading::FirstTuple => *per_target_u[target * m + u1]
                .get_or_insert_with(|| ops.tuple_sat(h, target, Some(u1))),
        }
    };

    let reach_z = ops.below_translates[z];
    for u1 in 0..m {
        for v1 in 0..m {
            let uv = sys.meet(u1, v1);
            for w1 in 0..m {
                let vw = sys.meet(v1, w1);
                let uvw = sys.meet(uv, w1);
                for &x1 in &ops.stars {
                    let p1 = emul(sys, uvw, x1);
                    let head = ops
                        .stars
                        .iter()
                        .any(|&y1| ops.delta_elem(p1, y1) && reach_z >> emul(sys, p1, y1) & 1 == 1);
                    if !head {
                        continue;
                    }
                    let second_target = match reading {
                        UnrollReading::PerTuple => emul(sys, vw, x1),
                        UnrollReading::FirstTuple => emul(sys, v1, x1),
                    };
                    if sat(uv, u1) && sat(second_target, u1) {
                        return Ok(true);
                    }
                }
            }
        }
    }
    Ok(false)
}
