//! Finite abstract systems `(G, ·, ⋏, δ)` and their axiom batteries.
//!
//! An [`AbstractSystem`] stores multiplication and meet tables over element
//! indices `0..m`, a binary relation `δ`, and optionally a second relation
//! `χ`.  Nothing about the tables is assumed: systems violating the
//! semigroup or semilattice laws are representable, and every law is checked
//! explicitly by the functions in this module, each returning a
//! [`CheckReport`] whose failing records carry the lexicographically first
//! violating tuple.

mod checks;
mod format;

use std::fmt;

use crate::{Error, Result};

pub use checks::{
    check_delta_chi_link, check_ldist, check_meet_absorption, check_rdist, check_rect_absorption,
    check_semigroup, check_semilattice, check_theorem3, check_theorem4, check_theorem5,
    check_theorem7, natural_order, relation_properties,
};
pub(crate) use checks::{
    record_chi_meet_extend, record_left_regular, record_quasi_order, record_right_negative,
    record_zeta_in_rel, require_structure,
};
pub use format::{parse, serialize};

/// Largest supported number of elements; relation rows are one word wide.
pub const MAX_SYSTEM_SIZE: usize = 64;

/// A binary relation on `{0, .., m-1}`, stored as one bitmask row per element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Relation {
    size: usize,
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(size: usize) -> Relation {
        Relation {
            size,
            rows: vec![0; size],
        }
    }

    pub fn full(size: usize) -> Relation {
        let row = if size == 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        };
        Relation {
            size,
            rows: vec![row; size],
        }
    }

    pub fn identity(size: usize) -> Relation {
        let mut rel = Relation::empty(size);
        for x in 0..size {
            rel.insert(x, x);
        }
        rel
    }

    /// Builds a relation from row bitmasks; bits at or beyond `size` are rejected.
    pub fn from_rows(size: usize, rows: Vec<u64>) -> Result<Relation> {
        if rows.len() != size {
            return Err(Error::RelationSizeMismatch {
                relation: rows.len(),
                system: size,
            });
        }
        let mask = if size == 64 {
            u64::MAX
        } else {
            (1u64 << size) - 1
        };
        for &row in &rows {
            if row & !mask != 0 {
                return Err(Error::ElementOutOfRange {
                    index: (row & !mask).trailing_zeros() as usize,
                    size,
                });
            }
        }
        Ok(Relation { size, rows })
    }

    pub fn from_pairs(size: usize, pairs: &[(usize, usize)]) -> Result<Relation> {
        let mut rel = Relation::empty(size);
        for &(x, y) in pairs {
            if x >= size {
                return Err(Error::ElementOutOfRange { index: x, size });
            }
            if y >= size {
                return Err(Error::ElementOutOfRange { index: y, size });
            }
            rel.insert(x, y);
        }
        Ok(rel)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.size && y < self.size);
        self.rows[x] |= 1 << y;
    }

    pub fn row(&self, x: usize) -> u64 {
        self.rows[x]
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.size == other.size && self.rows.iter().zip(&other.rows).all(|(a, b)| a & !b == 0)
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.size).all(|x| self.contains(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        for x in 0..self.size {
            let mut reach = self.rows[x];
            let mut todo = reach;
            while todo != 0 {
                let y = todo.trailing_zeros() as usize;
                todo &= todo - 1;
                reach |= self.rows[y];
            }
            if reach & !self.rows[x] != 0 {
                return false;
            }
        }
        true
    }

    /// All related pairs in row-major order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size {
            for y in 0..self.size {
                if self.contains(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

/// An element of `G` extended by the adjoined identity `e`.
///
/// The adjoined element obeys exactly: `e·e = e`, `e·x = x·e = x`, `e ≤ e`,
/// `e ⊢ e`, and `x ⊢ e` for every `x ∈ G`.  In particular `e ≤ x` and
/// `e ⊢ x` fail for every `x ∈ G`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Star {
    Elem(usize),
    E,
}

impl fmt::Display for Star {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Star::Elem(i) => write!(out, "{i}"),
            Star::E => out.write_str("e"),
        }
    }
}

/// Outcome of one checked condition.
///
/// A failing record always carries a witness (the first violating tuple in
/// row-major scan order); a passing record never does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRecord {
    condition: &'static str,
    witness: Option<Vec<Star>>,
}

impl CheckRecord {
    pub fn pass(condition: &'static str) -> CheckRecord {
        CheckRecord {
            condition,
            witness: None,
        }
    }

    pub fn fail(condition: &'static str, witness: Vec<Star>) -> CheckRecord {
        debug_assert!(!witness.is_empty());
        CheckRecord {
            condition,
            witness: Some(witness),
        }
    }

    pub fn fail_at(condition: &'static str, witness: &[usize]) -> CheckRecord {
        CheckRecord::fail(condition, witness.iter().map(|&i| Star::Elem(i)).collect())
    }

    pub fn condition(&self) -> &'static str {
        self.condition
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&[Star]> {
        self.witness.as_deref()
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(out, "{} PASS", self.condition),
            Some(w) => {
                write!(out, "{} FAIL witness=(", self.condition)?;
                for (k, part) in w.iter().enumerate() {
                    if k > 0 {
                        out.write_str(",")?;
                    }
                    write!(out, "{part}")?;
                }
                out.write_str(")")
            }
        }
    }
}

/// An ordered list of condition records.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    records: Vec<CheckRecord>,
}

impl CheckReport {
    pub fn new() -> CheckReport {
        CheckReport::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.records.extend(other.records);
    }

    pub fn records(&self) -> &[CheckRecord] {
        &self.records
    }

    pub fn all_pass(&self) -> bool {
        self.records.iter().all(CheckRecord::passed)
    }

    /// Looks a record up by its condition id.
    pub fn record(&self, condition: &str) -> Option<&CheckRecord> {
        self.records.iter().find(|r| r.condition == condition)
    }

    pub fn first_failure(&self) -> Option<&CheckRecord> {
        self.records.iter().find(|r| !r.passed())
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        for record in &self.records {
            writeln!(out, "{record}")?;
        }
        Ok(())
    }
}

impl IntoIterator for CheckReport {
    type Item = CheckRecord;
    type IntoIter = std::vec::IntoIter<CheckRecord>;

    fn into_iter(self) -> Self::IntoIter {
        self.records.into_iter()
    }
}

/// A finite algebraic system `(G, ·, ⋏, δ)` with an optional relation `χ`.
///
/// Tables are indexed by element; `mul(x, y)` is read "apply `x` first, then
/// `y`", matching the composition order of concrete transformation
/// semigroups extracted by [`crate::tsemi::TransSemigroup::extract_abstract`].
#[derive(Debug, Clone)]
pub struct AbstractSystem {
    size: usize,
    mul: Vec<usize>,
    meet: Vec<usize>,
    delta: Relation,
    chi: Option<Relation>,
    name: Option<String>,
}

impl PartialEq for AbstractSystem {
    fn eq(&self, other: &Self) -> bool {
        // the name is a display label, not part of the value
        self.size == other.size
            && self.mul == other.mul
            && self.meet == other.meet
            && self.delta == other.delta
            && self.chi == other.chi
    }
}

impl Eq for AbstractSystem {}

impl AbstractSystem {
    pub fn new(
        size: usize,
        mul_rows: Vec<Vec<usize>>,
        meet_rows: Vec<Vec<usize>>,
        delta: Relation,
        chi: Option<Relation>,
    ) -> Result<AbstractSystem> {
        if size == 0 {
            return Err(Error::EmptyBase);
        }
        if size > MAX_SYSTEM_SIZE {
            return Err(Error::BoundExceeded {
                what: "system size",
                value: size,
                max: MAX_SYSTEM_SIZE,
            });
        }
        let mul = flatten_table(size, mul_rows)?;
        let meet = flatten_table(size, meet_rows)?;
        if delta.size() != size {
            return Err(Error::RelationSizeMismatch {
                relation: delta.size(),
                system: size,
            });
        }
        if let Some(chi) = &chi {
            if chi.size() != size {
                return Err(Error::RelationSizeMismatch {
                    relation: chi.size(),
                    system: size,
                });
            }
        }
        Ok(AbstractSystem {
            size,
            mul,
            meet,
            delta,
            chi,
            name: None,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// The product `x · y` ("apply `x` first, then `y`").
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x * self.size + y]
    }

    /// The meet `x ⋏ y`.
    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size + y]
    }

    pub fn delta(&self, x: usize, y: usize) -> bool {
        self.delta.contains(x, y)
    }

    pub fn delta_rel(&self) -> &Relation {
        &self.delta
    }

    pub fn chi_rel(&self) -> Option<&Relation> {
        self.chi.as_ref()
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> AbstractSystem {
        self.name = Some(name.into());
        self
    }

    pub fn with_delta(mut self, delta: Relation) -> Result<AbstractSystem> {
        if delta.size() != self.size {
            return Err(Error::RelationSizeMismatch {
                relation: delta.size(),
                system: self.size,
            });
        }
        self.delta = delta;
        Ok(self)
    }

    pub fn with_chi(mut self, chi: Option<Relation>) -> Result<AbstractSystem> {
        if let Some(chi) = &chi {
            if chi.size() != self.size {
                return Err(Error::RelationSizeMismatch {
                    relation: chi.size(),
                    system: self.size,
                });
            }
        }
        self.chi = chi;
        Ok(self)
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| self.mul[x * self.size..(x + 1) * self.size].to_vec())
            .collect()
    }

    pub fn meet_rows(&self) -> Vec<Vec<usize>> {
        (0..self.size)
            .map(|x| self.meet[x * self.size..(x + 1) * self.size].to_vec())
            .collect()
    }

    /// Index of a two-sided identity of `(G, ·)`, when one exists.
    pub fn find_identity(&self) -> Option<usize> {
        (0..self.size).find(|&e| (0..self.size).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    /// Star product over `G ∪ {e}`; the adjoined `e` is a two-sided identity.
    pub fn star_mul(&self, a: Star, b: Star) -> Star {
        match (a, b) {
            (Star::E, other) => other,
            (other, Star::E) => other,
            (Star::Elem(x), Star::Elem(y)) => Star::Elem(self.mul(x, y)),
        }
    }

    /// Semiadjacency over `G ∪ {e}`: `x ⊢ e` for every `x`, and `e ⊢ y`
    /// only for `y = e`.
    pub fn star_delta(&self, a: Star, b: Star) -> bool {
        match (a, b) {
            (_, Star::E) => true,
            (Star::E, Star::Elem(_)) => false,
            (Star::Elem(x), Star::Elem(y)) => self.delta(x, y),
        }
    }
}

fn flatten_table(size: usize, rows: Vec<Vec<usize>>) -> Result<Vec<usize>> {
    if rows.len() != size {
        return Err(Error::RelationSizeMismatch {
            relation: rows.len(),
            system: size,
        });
    }
    let mut flat = Vec::with_capacity(size * size);
    for row in rows {
        if row.len() != size {
            return Err(Error::RelationSizeMismatch {
                relation: row.len(),
                system: size,
            });
        }
        for entry in row {
            if entry >= size {
                return Err(Error::ElementOutOfRange { index: entry, size });
            }
            flat.push(entry);
        }
    }
    Ok(flat)
}

/// The three-element worked example used across the test suites: the
/// meet-closed semigroup generated on a two-point base by the constant map
/// to 0 and the identity.  Canonical element order: `0 = (0,-)`,
/// `1 = (0,0)`, `2 = (0,1)`.
#[cfg(test)]
pub(crate) fn sample_three_element_system() -> AbstractSystem {
    AbstractSystem::new(
        3,
        vec![vec![0, 0, 0], vec![1, 1, 1], vec![0, 1, 2]],
        vec![vec![0, 0, 0], vec![0, 1, 0], vec![0, 0, 2]],
        Relation::from_rows(3, vec![0b111, 0b111, 0b110]).unwrap(),
        Some(Relation::from_rows(3, vec![0b111, 0b110, 0b110]).unwrap()),
    )
    .unwrap()
}
