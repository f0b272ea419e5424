//! Semigroups of partial transformations on a finite base set.
//!
//! A [`TransSemigroup`] is a finite, duplicate-free collection of
//! [`PartialMap`]s on a common base, closed under composition and — when
//! `with_meet` is set — under the meet (graph intersection).  This module
//! builds such collections from generators, enumerates every one on a small
//! base, and converts them into [`AbstractSystem`] tables so the condition
//! checkers and the closure machinery can run on them.
//!
//! Elements are always kept in canonical order (lexicographic on the map
//! table, with undefined entries sorting before defined ones), so the index
//! assigned to each map — and therefore every extracted table — is
//! deterministic.

use std::collections::BTreeSet;

use crate::algebra::{AbstractSystem, Relation};
use crate::closure::{f_closure, ElementSet};
use crate::pfun::{
    all_invertible_maps, all_maps, compose, meet, rel_chi, rel_delta, PartialMap, PointSet,
};
use crate::{Error, Result};

/// Largest base size accepted by [`enumerate_all`].
///
/// Base 1 and 2 are enumerated exhaustively over the powerset of all maps;
/// base 3 is covered by closing every generator set of size at most two.
/// Larger bases would need a smarter search and are rejected.
pub const MAX_ENUMERATION_BASE: usize = 3;

/// A composition-closed (and optionally meet-closed) set of partial maps on
/// a common base.
///
/// Invariants, maintained by every constructor in this module:
/// - all elements share `base_size`,
/// - `elements` is sorted in canonical map order and duplicate-free,
/// - the set is closed under composition, and under meet when `with_meet`,
/// - `invertible_only` holds exactly when every element is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransSemigroup {
    base_size: usize,
    elements: Vec<PartialMap>,
    with_meet: bool,
    invertible_only: bool,
}

impl TransSemigroup {
    /// Builds directly from an already sorted, duplicate-free, closed
    /// element list.  Callers are responsible for the closure property.
    fn from_sorted(base_size: usize, elements: Vec<PartialMap>, with_meet: bool) -> TransSemigroup {
        debug_assert!(!elements.is_empty());
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(elements.iter().all(|f| f.base_size() == base_size));
        let invertible_only = elements.iter().all(PartialMap::is_invertible);
        TransSemigroup {
            base_size,
            elements,
            with_meet,
            invertible_only,
        }
    }

    /// Size of the common base set the maps act on.
    pub fn base_size(&self) -> usize {
        self.base_size
    }

    /// The elements in canonical order; indices into this slice are the
    /// element names used by [`extract_abstract`](Self::extract_abstract).
    pub fn elements(&self) -> &[PartialMap] {
        &self.elements
    }

    /// Number of elements.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Always false: the empty map set is excluded by convention.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the set is closed under meet (required for extraction).
    pub fn with_meet(&self) -> bool {
        self.with_meet
    }

    /// Whether every element is an invertible (injective) map.
    pub fn invertible_only(&self) -> bool {
        self.invertible_only
    }

    /// Canonical index of `map`, if it is an element.
    pub fn index_of(&self, map: &PartialMap) -> Option<usize> {
        self.elements.binary_search(map).ok()
    }

    /// Converts the concrete map set into abstract operation tables.
    ///
    /// Element `i` of the result is `self.elements()[i]`; the product
    /// `mul(i, j)` is the index of "apply element `i` first, then `j`",
    /// `meet(i, j)` the index of the graph intersection, `delta(i, j)`
    /// holds when the image of `i` lies in the domain of `j`, and the
    /// stored `chi(i, j)` holds when the domain of `i` lies in the domain
    /// of `j`.
    ///
    /// Fails with [`Error::MeetRequired`] when the set is not meet-closed,
    /// and with [`Error::NotClosed`] (naming the operation and the abstract
    /// index pair) if the closure invariant has been violated.
    pub fn extract_abstract(&self) -> Result<AbstractSystem> {
        if !self.with_meet {
            return Err(Error::MeetRequired);
        }
        let m = self.elements.len();
        let mut mul_rows = vec![vec![0usize; m]; m];
        let mut meet_rows = vec![vec![0usize; m]; m];
        for i in 0..m {
            for j in 0..m {
                // The abstract product x · y is "apply x first, then y",
                // which on maps is the composite elements[j] ∘ elements[i].
                let prod = compose(&self.elements[j], &self.elements[i])?;
                mul_rows[i][j] = self.index_of(&prod).ok_or(Error::NotClosed {
                    op: "compose",
                    i,
                    j,
                })?;
                let cap = meet(&self.elements[i], &self.elements[j])?;
                meet_rows[i][j] =
                    self.index_of(&cap)
                        .ok_or(Error::NotClosed { op: "meet", i, j })?;
            }
        }
        let mut delta = Relation::empty(m);
        let mut chi = Relation::empty(m);
        for i in 0..m {
            for j in 0..m {
                if rel_delta(&self.elements[i], &self.elements[j])? {
                    delta.insert(i, j);
                }
                if rel_chi(&self.elements[i], &self.elements[j])? {
                    chi.insert(i, j);
                }
            }
        }
        AbstractSystem::new(m, mul_rows, meet_rows, delta, Some(chi))
    }
}

/// Closes `generators` under composition (and meet, when `with_meet`) on a
/// base of `base_size` points.
///
/// The generator list must be non-empty and every generator must act on the
/// stated base.  The result contains the generators.
pub fn generate(
    base_size: usize,
    generators: &[PartialMap],
    with_meet: bool,
) -> Result<TransSemigroup> {
    if base_size == 0 {
        return Err(Error::EmptyBase);
    }
    if generators.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    for g in generators {
        if g.base_size() != base_size {
            return Err(Error::BaseSizeMismatch {
                left: base_size,
                right: g.base_size(),
            });
        }
    }
    let mut closed: BTreeSet<PartialMap> = generators.iter().cloned().collect();
    let mut frontier: Vec<PartialMap> = closed.iter().cloned().collect();
    // Worklist closure: when an element is taken off the frontier, pair it
    // (on both sides) with everything discovered so far.  Every ordered
    // pair is considered once its later member has been processed.
    while let Some(f) = frontier.pop() {
        let known: Vec<PartialMap> = closed.iter().cloned().collect();
        for g in &known {
            let mut products = vec![compose(&f, g)?, compose(g, &f)?];
            if with_meet {
                products.push(meet(&f, g)?);
            }
            for h in products {
                if closed.insert(h.clone()) {
                    frontier.push(h);
                }
            }
        }
    }
    let elements: Vec<PartialMap> = closed.into_iter().collect();
    Ok(TransSemigroup::from_sorted(base_size, elements, with_meet))
}

/// Every transformation semigroup on a base of `base_size` points, each one
/// exactly once, sorted by their canonical element lists.
///
/// With `invertible_only` the universe of maps is restricted to invertible
/// ones (note that composites and meets of invertible maps are invertible,
/// so the restriction is self-consistent).  Bases 1 and 2 are enumerated by
/// filtering the powerset of the universe for closure; base 3 lists the
/// closures of all generator sets of size at most two.  Other bases are
/// rejected.
pub fn enumerate_all(
    base_size: usize,
    with_meet: bool,
    invertible_only: bool,
) -> Result<Vec<TransSemigroup>> {
    if base_size == 0 {
        return Err(Error::EmptyBase);
    }
    if base_size > MAX_ENUMERATION_BASE {
        return Err(Error::BoundExceeded {
            what: "base size for semigroup enumeration",
            value: base_size,
            max: MAX_ENUMERATION_BASE,
        });
    }
    let universe = if invertible_only {
        all_invertible_maps(base_size)?
    } else {
        all_maps(base_size)?
    };
    let sets = if base_size <= 2 {
        closed_subsets(&universe, with_meet)?
    } else {
        generated_subsets(base_size, &universe, with_meet)?
    };
    Ok(sets
        .into_iter()
        .map(|elements| TransSemigroup::from_sorted(base_size, elements, with_meet))
        .collect())
}

/// All non-empty closed subsets of `universe`, by exhaustive powerset scan.
fn closed_subsets(universe: &[PartialMap], with_meet: bool) -> Result<BTreeSet<Vec<PartialMap>>> {
    let k = universe.len();
    debug_assert!(k < u32::BITS as usize);
    // `universe` is closed under both operations (it is either all maps or
    // all invertible maps), so the index tables below are total.
    let index_of = |map: &PartialMap| universe.binary_search(map).expect("universe is closed");
    let mut comp = vec![vec![0usize; k]; k];
    let mut cap = vec![vec![0usize; k]; k];
    for i in 0..k {
        for j in 0..k {
            comp[i][j] = index_of(&compose(&universe[i], &universe[j])?);
            cap[i][j] = index_of(&meet(&universe[i], &universe[j])?);
        }
    }
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << k) {
        let members: Vec<usize> = (0..k).filter(|i| mask & (1 << i) != 0).collect();
        let closed = members.iter().all(|&i| {
            members.iter().all(|&j| {
                mask & (1 << comp[i][j]) != 0 && (!with_meet || mask & (1 << cap[i][j]) != 0)
            })
        });
        if closed {
            out.insert(members.into_iter().map(|i| universe[i].clone()).collect());
        }
    }
    Ok(out)
}

/// Scans every subset `H` of the elements for a violation of the
/// domain-intersection property: every map in the abstract f-closure of `H`
/// must have a domain containing the common domain `⋂_{h ∈ H} dom(h)` (the
/// full base when `H` is empty).  Returns the first violating pair
/// (subset bitmask, closure element index) in scan order, or `None` when
/// the property holds throughout.
pub fn domain_intersection_violation(phi: &TransSemigroup) -> Result<Option<(u64, usize)>> {
    let m = phi.len();
    if m > 16 {
        return Err(Error::BoundExceeded {
            what: "element count for the subset scan",
            value: m,
            max: 16,
        });
    }
    let sys = phi.extract_abstract()?;
    for mask in 0..(1u64 << m) {
        let seed = ElementSet::from_bits(m, mask)?;
        let closed = f_closure(&sys, seed)?;
        let mut common = PointSet::full(phi.base_size);
        for i in seed.iter() {
            common = common.intersect(phi.elements[i].domain());
        }
        for e in closed.iter() {
            if !common.is_subset_of(phi.elements[e].domain()) {
                return Ok(Some((mask, e)));
            }
        }
    }
    Ok(None)
}

/// The closures of all generator sets of size one or two drawn from
/// `universe`, de-duplicated.
fn generated_subsets(
    base_size: usize,
    universe: &[PartialMap],
    with_meet: bool,
) -> Result<BTreeSet<Vec<PartialMap>>> {
    let mut out = BTreeSet::new();
    for i in 0..universe.len() {
        let single = generate(base_size, &universe[i..=i], with_meet)?;
        out.insert(single.elements().to_vec());
        for j in (i + 1)..universe.len() {
            let pair = generate(
                base_size,
                &[universe[i].clone(), universe[j].clone()],
                with_meet,
            )?;
            out.insert(pair.elements().to_vec());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sample_three_element_system;
    use std::collections::BTreeMap;

    fn map(literal: &str) -> PartialMap {
        literal.parse().expect("test literal parses")
    }

    fn literals(semigroup: &TransSemigroup) -> Vec<String> {
        semigroup.elements().iter().map(|f| f.to_string()).collect()
    }

    #[test]
    fn generating_from_the_identity_gives_a_singleton() {
        let s = generate(2, &[map("0,1")], true).unwrap();
        assert_eq!(literals(&s), ["0,1"]);
        assert!(s.with_meet());
        assert!(s.invertible_only());
        assert_eq!(s.base_size(), 2);
        assert_eq!(s.len(), 1);
        assert!(!s.is_empty());
    }

    #[test]
    fn generating_from_a_constant_and_the_identity_discovers_their_meet() {
        // The meet of the constant-to-0 map and the identity is the partial
        // identity on {0}, which composition alone would never produce.
        let s = generate(2, &[map("0,0"), map("0,1")], true).unwrap();
        assert_eq!(literals(&s), ["0,-", "0,0", "0,1"]);
        assert!(!s.invertible_only());

        let compose_only = generate(2, &[map("0,0"), map("0,1")], false).unwrap();
        assert_eq!(literals(&compose_only), ["0,0", "0,1"]);
        assert_eq!(
            compose_only.extract_abstract().unwrap_err(),
            Error::MeetRequired
        );
    }

    #[test]
    fn generating_from_the_empty_map_gives_a_singleton() {
        let s = generate(2, &[map("-,-")], false).unwrap();
        assert_eq!(literals(&s), ["-,-"]);
        assert!(s.invertible_only());
    }

    #[test]
    fn generate_rejects_bad_input() {
        assert_eq!(generate(2, &[], true).unwrap_err(), Error::EmptyGenerators);
        assert_eq!(
            generate(0, &[map("0,1")], true).unwrap_err(),
            Error::EmptyBase
        );
        assert_eq!(
            generate(3, &[map("0,1")], true).unwrap_err(),
            Error::BaseSizeMismatch { left: 3, right: 2 }
        );
        assert_eq!(
            generate(2, &[map("0,1"), map("0,1,2")], true).unwrap_err(),
            Error::BaseSizeMismatch { left: 2, right: 3 }
        );
    }

    #[test]
    fn extraction_matches_the_worked_three_element_system() {
        let s = generate(2, &[map("0,0"), map("0,1")], true).unwrap();
        let sys = s.extract_abstract().unwrap();
        assert_eq!(sys, sample_three_element_system());

        // Canonical indices: partial identity 0, constant 1, identity 2.
        assert_eq!(s.index_of(&map("0,-")), Some(0));
        assert_eq!(s.index_of(&map("0,0")), Some(1));
        assert_eq!(s.index_of(&map("0,1")), Some(2));
        assert_eq!(s.index_of(&map("1,1")), None);

        // Spot checks against the map semantics: id · const = const
        // (apply the identity first), and id ⋏ const is the partial
        // identity.
        assert_eq!(sys.mul(2, 1), 1);
        assert_eq!(sys.meet(2, 1), 0);
        assert!(sys.delta(2, 1)); // im(id) = {0,1} ⊆ dom(const)
        assert!(!sys.delta(2, 0)); // im(id) ⊄ dom(partial identity) = {0}
        let chi = sys.chi_rel().unwrap();
        assert!(chi.contains(0, 2)); // dom(partial identity) ⊆ dom(id)
        assert!(!chi.contains(2, 0));
    }

    #[test]
    fn extraction_of_a_singleton_yields_the_trivial_system() {
        let s = generate(2, &[map("0,1")], true).unwrap();
        let sys = s.extract_abstract().unwrap();
        assert_eq!(sys.size(), 1);
        assert_eq!(sys.mul(0, 0), 0);
        assert_eq!(sys.meet(0, 0), 0);
        assert!(sys.delta(0, 0));
        assert!(sys.chi_rel().unwrap().contains(0, 0));
    }

    #[test]
    fn base_one_enumeration_lists_three_semigroups() {
        for with_meet in [false, true] {
            let all = enumerate_all(1, with_meet, false).unwrap();
            let lists: Vec<Vec<String>> = all.iter().map(literals).collect();
            assert_eq!(lists, [vec!["-"], vec!["-", "0"], vec!["0"]]);
        }
        let invertible = enumerate_all(1, true, true).unwrap();
        assert_eq!(invertible.len(), 3);
    }

    #[test]
    fn base_two_enumeration_counts_are_frozen() {
        let with_meet = enumerate_all(2, true, false).unwrap();
        assert_eq!(with_meet.len(), 63);
        let without_meet = enumerate_all(2, false, false).unwrap();
        assert_eq!(without_meet.len(), 79);
        let invertible = enumerate_all(2, true, true).unwrap();
        assert_eq!(invertible.len(), 33);

        let mut by_size: BTreeMap<usize, usize> = BTreeMap::new();
        for s in &with_meet {
            *by_size.entry(s.len()).or_insert(0) += 1;
        }
        let expected: BTreeMap<usize, usize> = [
            (1, 6),
            (2, 11),
            (3, 17),
            (4, 13),
            (5, 9),
            (6, 3),
            (7, 2),
            (8, 1),
            (9, 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(by_size, expected);

        // Every meet-closed semigroup extracts cleanly, and the invertible
        // ones form a sub-family of the full enumeration.
        for s in &with_meet {
            assert!(s.extract_abstract().is_ok());
        }
        let full: BTreeSet<Vec<PartialMap>> =
            with_meet.iter().map(|s| s.elements().to_vec()).collect();
        for s in &invertible {
            assert!(s.invertible_only());
            assert!(full.contains(s.elements()));
        }
    }

    #[test]
    fn base_two_enumeration_is_sorted_and_duplicate_free() {
        let all = enumerate_all(2, true, false).unwrap();
        let lists: Vec<Vec<PartialMap>> = all.iter().map(|s| s.elements().to_vec()).collect();
        let mut sorted = lists.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(lists, sorted);
    }

    #[test]
    fn generate_is_idempotent_on_closed_sets() {
        for s in enumerate_all(2, true, false).unwrap() {
            let again = generate(2, s.elements(), true).unwrap();
            assert_eq!(again, s);
        }
        for s in enumerate_all(2, false, false).unwrap() {
            let again = generate(2, s.elements(), false).unwrap();
            assert_eq!(again, s);
        }
    }

    #[test]
    fn the_common_seed_domain_lies_in_every_closure_member_domain() {
        for phi in enumerate_all(2, true, false).unwrap() {
            if phi.len() <= 5 {
                assert_eq!(domain_intersection_violation(&phi).unwrap(), None);
            }
        }
    }

    #[test]
    fn base_three_enumeration_counts_are_frozen() {
        assert_eq!(enumerate_all(3, true, false).unwrap().len(), 1592);
        assert_eq!(enumerate_all(3, false, false).unwrap().len(), 1623);
        assert_eq!(enumerate_all(3, true, true).unwrap().len(), 410);
    }

    #[test]
    fn enumeration_rejects_out_of_range_bases() {
        assert_eq!(enumerate_all(0, true, false).unwrap_err(), Error::EmptyBase);
        assert_eq!(
            enumerate_all(4, true, false).unwrap_err(),
            Error::BoundExceeded {
                what: "base size for semigroup enumeration",
                value: 4,
                max: 3,
            }
        );
    }
}
