//! Verifying and discovering concrete representations of abstract systems.
//!
//! A *representation* of an [`AbstractSystem`] is an assignment `P` of one
//! partial map per abstract element such that products become composites
//! (`P(x · y) = P(y) ∘ P(x)`), meets become graph intersections, and the
//! abstract `δ` relation matches concrete semiadjacency.  When the system
//! carries a `χ` relation, that must match domain inclusion as well.
//!
//! [`verify_representation`] checks a given assignment and reports one
//! record per law; [`find_representation`] first gates the system on the
//! condition battery that characterizes representable systems, then runs a
//! bounded, deterministic backtracking search for an assignment.

use crate::algebra::{
    check_semigroup, check_semilattice, check_theorem7, AbstractSystem, CheckRecord, CheckReport,
};
use crate::pfun::{all_invertible_maps, all_maps, compose, meet, rel_chi, rel_delta, PartialMap};
use crate::{Error, Result};

/// Largest base size [`find_representation`] will search.
pub const MAX_SEARCH_BASE: usize = 4;

/// Guard on `max_base × system size`: beyond this the raw search space
/// `((n+1)^n)^m` is too large to scan dependably, even with pruning.
pub const MAX_SEARCH_AREA: usize = 32;

/// An assignment of one partial map (on a common base) per abstract element.
///
/// The constructor enforces only that the maps share the stated base;
/// whether the assignment is injective and satisfies the operation laws is
/// what [`verify_representation`] reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    base_size: usize,
    assignment: Vec<PartialMap>,
}

impl Representation {
    pub fn new(base_size: usize, assignment: Vec<PartialMap>) -> Result<Representation> {
        if base_size == 0 {
            return Err(Error::EmptyBase);
        }
        for map in &assignment {
            if map.base_size() != base_size {
                return Err(Error::BaseSizeMismatch {
                    left: base_size,
                    right: map.base_size(),
                });
            }
        }
        Ok(Representation {
            base_size,
            assignment,
        })
    }

    /// Size of the base set the assigned maps act on.
    pub fn base_size(&self) -> usize {
        self.base_size
    }

    /// The assigned maps, indexed by abstract element.
    pub fn assignment(&self) -> &[PartialMap] {
        &self.assignment
    }
}

/// Result of a bounded representation search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A representation was found; it passes [`verify_representation`].
    Found(Representation),
    /// No representation exists on any base up to the requested bound.
    /// This is inconclusive: a larger base might still work.
    NotFoundUpToBound,
    /// The system fails the condition battery, so no representation exists
    /// on any base at all; the report pinpoints the violated condition.
    ConditionsFail(CheckReport),
}

/// Checks every representation law of `rep` against `sys` and reports one
/// record per law: `injective`, `mul-law`, `meet-law`, `delta-law`, and —
/// when the system stores a `χ` relation — `chi-law`.  Each failing record
/// carries the first violating element pair in scan order.
pub fn verify_representation(sys: &AbstractSystem, rep: &Representation) -> Result<CheckReport> {
    let m = sys.size();
    if rep.assignment.len() != m {
        return Err(Error::AssignmentLength {
            expected: m,
            actual: rep.assignment.len(),
        });
    }
    let p = rep.assignment();
    let mut report = CheckReport::new();

    let mut injective = CheckRecord::pass("injective");
    'collide: for i in 0..m {
        for j in (i + 1)..m {
            if p[i] == p[j] {
                injective = CheckRecord::fail_at("injective", &[i, j]);
                break 'collide;
            }
        }
    }
    report.push(injective);

    let mut mul_law = CheckRecord::pass("mul-law");
    'mul: for x in 0..m {
        for y in 0..m {
            if compose(&p[y], &p[x])? != p[sys.mul(x, y)] {
                mul_law = CheckRecord::fail_at("mul-law", &[x, y]);
                break 'mul;
            }
        }
    }
    report.push(mul_law);

    let mut meet_law = CheckRecord::pass("meet-law");
    'meet: for x in 0..m {
        for y in 0..m {
            if meet(&p[x], &p[y])? != p[sys.meet(x, y)] {
                meet_law = CheckRecord::fail_at("meet-law", &[x, y]);
                break 'meet;
            }
        }
    }
    report.push(meet_law);

    let mut delta_law = CheckRecord::pass("delta-law");
    'delta: for x in 0..m {
        for y in 0..m {
            if sys.delta(x, y) != rel_delta(&p[x], &p[y])? {
                delta_law = CheckRecord::fail_at("delta-law", &[x, y]);
                break 'delta;
            }
        }
    }
    report.push(delta_law);

    if let Some(chi) = sys.chi_rel() {
        let mut chi_law = CheckRecord::pass("chi-law");
        'chi: for x in 0..m {
            for y in 0..m {
                if chi.contains(x, y) != rel_chi(&p[x], &p[y])? {
                    chi_law = CheckRecord::fail_at("chi-law", &[x, y]);
                    break 'chi;
                }
            }
        }
        report.push(chi_law);
    }

    Ok(report)
}

/// Searches for a representation of `sys` on bases `1..=max_base`.
///
/// The system is first gated: structural failures (associativity or the
/// semilattice identities) and failures of the representability condition
/// battery return [`SearchOutcome::ConditionsFail`] — for those no
/// representation exists on any base, so no search is attempted.  Otherwise
/// a backtracking search assigns elements in index order, drawing candidate
/// maps in canonical order, and prunes a partial assignment as soon as any
/// law instance whose participants are all assigned fails (including the
/// `χ` law when the system stores `χ`).  The first complete assignment in
/// this deterministic order is returned.
///
/// With `invertible`, candidates are restricted to invertible maps and the
/// gate additionally requires the right-distributivity adjoint.
pub fn find_representation(
    sys: &AbstractSystem,
    max_base: usize,
    invertible: bool,
) -> Result<SearchOutcome> {
    if max_base == 0 {
        return Err(Error::EmptyBase);
    }
    if max_base > MAX_SEARCH_BASE {
        return Err(Error::BoundExceeded {
            what: "representation search base",
            value: max_base,
            max: MAX_SEARCH_BASE,
        });
    }
    if max_base * sys.size() > MAX_SEARCH_AREA {
        return Err(Error::BoundExceeded {
            what: "representation search area (max base × system size)",
            value: max_base * sys.size(),
            max: MAX_SEARCH_AREA,
        });
    }

    let mut structure = check_semigroup(sys);
    structure.extend(check_semilattice(sys));
    if !structure.all_pass() {
        return Ok(SearchOutcome::ConditionsFail(structure));
    }
    let gate = check_theorem7(sys, invertible)?;
    if !gate.all_pass() {
        return Ok(SearchOutcome::ConditionsFail(gate));
    }

    for base in 1..=max_base {
        let candidates = if invertible {
            all_invertible_maps(base)?
        } else {
            all_maps(base)?
        };
        let mut assignment = Vec::with_capacity(sys.size());
        if extend_assignment(sys, &candidates, &mut assignment) {
            let rep = Representation {
                base_size: base,
                assignment,
            };
            debug_assert!(verify_representation(sys, &rep)
                .map(|r| r.all_pass())
                .unwrap_or(false));
            return Ok(SearchOutcome::Found(rep));
        }
    }
    Ok(SearchOutcome::NotFoundUpToBound)
}

/// Depth-first extension of a partial assignment; `true` when completed.
fn extend_assignment(
    sys: &AbstractSystem,
    candidates: &[PartialMap],
    assigned: &mut Vec<PartialMap>,
) -> bool {
    if assigned.len() == sys.size() {
        return true;
    }
    for candidate in candidates {
        if assigned.contains(candidate) {
            continue; // injectivity
        }
        assigned.push(candidate.clone());
        if latest_assignment_is_consistent(sys, assigned)
            && extend_assignment(sys, candidates, assigned)
        {
            return true;
        }
        assigned.pop();
    }
    false
}

/// Checks every law instance that involves the newest assigned element and
/// whose participants are all assigned.  Instances among older elements
/// were checked at earlier depths, and instances whose product or meet is
/// not yet assigned are checked when it is.
fn latest_assignment_is_consistent(sys: &AbstractSystem, assigned: &[PartialMap]) -> bool {
    let k = assigned.len() - 1;
    let chi = sys.chi_rel();
    for a in 0..=k {
        for b in 0..=k {
            if a != k && b != k {
                continue;
            }
            let delta_concrete =
                rel_delta(&assigned[a], &assigned[b]).expect("assigned maps share a base");
            if sys.delta(a, b) != delta_concrete {
                return false;
            }
            if let Some(chi) = chi {
                let chi_concrete =
                    rel_chi(&assigned[a], &assigned[b]).expect("assigned maps share a base");
                if chi.contains(a, b) != chi_concrete {
                    return false;
                }
            }
        }
    }
    for x in 0..=k {
        for y in 0..=k {
            let product = sys.mul(x, y);
            if product <= k && (x == k || y == k || product == k) {
                let composite =
                    compose(&assigned[y], &assigned[x]).expect("assigned maps share a base");
                if composite != assigned[product] {
                    return false;
                }
            }
            let lower = sys.meet(x, y);
            if lower <= k && (x == k || y == k || lower == k) {
                let intersection =
                    meet(&assigned[x], &assigned[y]).expect("assigned maps share a base");
                if intersection != assigned[lower] {
                    return false;
                }
            }
        }
    }
    true
}
