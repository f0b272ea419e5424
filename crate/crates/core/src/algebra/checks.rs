//! Condition checkers over abstract systems.
//!
//! Every checker scans its quantifier tuples in row-major lexicographic
//! order and reports the first violating tuple as the witness, so reports
//! are deterministic.  Quantifiers written over the *unit extension* range
//! over `G` itself when `(G, ·)` already has a two-sided identity and over
//! `G ∪ {e}` otherwise; quantifiers over the *star domain* always include
//! the adjoined `e`.

use crate::{Error, Result};

use super::{AbstractSystem, CheckRecord, CheckReport, Relation, Star};

/// Quantifier domain for identities stated over `G` with an optional unit.
fn unit_extension(sys: &AbstractSystem) -> Vec<Star> {
    let mut domain: Vec<Star> = (0..sys.size()).map(Star::Elem).collect();
    if sys.find_identity().is_none() {
        domain.push(Star::E);
    }
    domain
}

/// Product `g · u` of an element with a star element; always lands in `G`.
fn elem_mul_star(sys: &AbstractSystem, g: usize, u: Star) -> usize {
    match u {
        Star::E => g,
        Star::Elem(y) => sys.mul(g, y),
    }
}

/// Associativity of `·`.
pub fn check_semigroup(sys: &AbstractSystem) -> CheckReport {
    let m = sys.size();
    let mut report = CheckReport::new();
    let mut record = CheckRecord::pass("mul-assoc");
    'scan: for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if sys.mul(sys.mul(x, y), z) != sys.mul(x, sys.mul(y, z)) {
                    record = CheckRecord::fail_at("mul-assoc", &[x, y, z]);
                    break 'scan;
                }
            }
        }
    }
    report.push(record);
    report
}

/// Idempotence, commutativity and associativity of `⋏`.
pub fn check_semilattice(sys: &AbstractSystem) -> CheckReport {
    let m = sys.size();
    let mut report = CheckReport::new();

    let mut idem = CheckRecord::pass("meet-idem");
    for x in 0..m {
        if sys.meet(x, x) != x {
            idem = CheckRecord::fail_at("meet-idem", &[x]);
            break;
        }
    }
    report.push(idem);

    let mut comm = CheckRecord::pass("meet-comm");
    'comm: for x in 0..m {
        for y in 0..m {
            if sys.meet(x, y) != sys.meet(y, x) {
                comm = CheckRecord::fail_at("meet-comm", &[x, y]);
                break 'comm;
            }
        }
    }
    report.push(comm);

    let mut assoc = CheckRecord::pass("meet-assoc");
    'assoc: for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if sys.meet(sys.meet(x, y), z) != sys.meet(x, sys.meet(y, z)) {
                    assoc = CheckRecord::fail_at("meet-assoc", &[x, y, z]);
                    break 'assoc;
                }
            }
        }
    }
    report.push(assoc);

    report
}

/// The natural order of the meet: `x ≤ y` iff `x ⋏ y = x`.
pub fn natural_order(sys: &AbstractSystem) -> Result<Relation> {
    let lattice = check_semilattice(sys);
    if let Some(failure) = lattice.first_failure() {
        return Err(Error::Precondition(format!(
            "meet is not a semilattice: {failure}"
        )));
    }
    Ok(natural_order_unchecked(sys))
}

fn natural_order_unchecked(sys: &AbstractSystem) -> Relation {
    let m = sys.size();
    let mut leq = Relation::empty(m);
    for x in 0..m {
        for y in 0..m {
            if sys.meet(x, y) == x {
                leq.insert(x, y);
            }
        }
    }
    leq
}

/// Validates the semigroup and semilattice preconditions shared by the
/// theorem batteries and returns the natural order.
pub(crate) fn require_structure(sys: &AbstractSystem) -> Result<Relation> {
    let semigroup = check_semigroup(sys);
    if let Some(failure) = semigroup.first_failure() {
        return Err(Error::Precondition(format!(
            "mul is not a semigroup: {failure}"
        )));
    }
    natural_order(sys)
}

pub(crate) fn record_quasi_order(rel: &Relation, condition: &'static str) -> CheckRecord {
    let m = rel.size();
    for x in 0..m {
        if !rel.contains(x, x) {
            return CheckRecord::fail_at(condition, &[x]);
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if rel.contains(x, y) && rel.contains(y, z) && !rel.contains(x, z) {
                    return CheckRecord::fail_at(condition, &[x, y, z]);
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

fn record_stable(sys: &AbstractSystem, rel: &Relation, condition: &'static str) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            if !rel.contains(x, y) {
                continue;
            }
            for u in 0..m {
                for v in 0..m {
                    if rel.contains(u, v) && !rel.contains(sys.mul(x, u), sys.mul(y, v)) {
                        return CheckRecord::fail_at(condition, &[x, y, u, v]);
                    }
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

pub(crate) fn record_left_regular(
    sys: &AbstractSystem,
    rel: &Relation,
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for u in 0..m {
            for v in 0..m {
                if rel.contains(u, v) && !rel.contains(sys.mul(x, u), sys.mul(x, v)) {
                    return CheckRecord::fail_at(condition, &[x, u, v]);
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

fn record_right_regular(
    sys: &AbstractSystem,
    rel: &Relation,
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for u in 0..m {
            for v in 0..m {
                if rel.contains(u, v) && !rel.contains(sys.mul(u, x), sys.mul(v, x)) {
                    return CheckRecord::fail_at(condition, &[x, u, v]);
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

pub(crate) fn record_left_ideal(
    sys: &AbstractSystem,
    rel: &Relation,
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            if !rel.contains(x, y) {
                continue;
            }
            for u in 0..m {
                if !rel.contains(sys.mul(u, x), y) {
                    return CheckRecord::fail_at(condition, &[x, y, u]);
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

pub(crate) fn record_right_negative(
    sys: &AbstractSystem,
    rel: &Relation,
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            for u in 0..m {
                if rel.contains(x, sys.mul(y, u)) && !rel.contains(x, y) {
                    return CheckRecord::fail_at(condition, &[x, y, u]);
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

/// Containment of the natural order in `rel`.
pub(crate) fn record_zeta_in_rel(
    sys: &AbstractSystem,
    rel: &Relation,
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            if sys.meet(x, y) == x && !rel.contains(x, y) {
                return CheckRecord::fail_at(condition, &[x, y]);
            }
        }
    }
    CheckRecord::pass(condition)
}

fn record_ldist(sys: &AbstractSystem) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if sys.mul(x, sys.meet(y, z)) != sys.meet(sys.mul(x, y), sys.mul(x, z)) {
                    return CheckRecord::fail_at("ldist", &[x, y, z]);
                }
            }
        }
    }
    CheckRecord::pass("ldist")
}

fn record_rdist(sys: &AbstractSystem) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                if sys.mul(sys.meet(x, y), z) != sys.meet(sys.mul(x, z), sys.mul(y, z)) {
                    return CheckRecord::fail_at("rdist", &[x, y, z]);
                }
            }
        }
    }
    CheckRecord::pass("rdist")
}

fn record_meet_absorption(sys: &AbstractSystem, domain: &[Star]) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let xy = sys.meet(x, y);
                let yz = sys.meet(y, z);
                let xyz = sys.meet(xy, z);
                for &u in domain {
                    let left_head = elem_mul_star(sys, xyz, u);
                    let right_head = elem_mul_star(sys, xy, u);
                    for &v in domain {
                        let tail = elem_mul_star(sys, yz, v);
                        if sys.meet(left_head, tail) != sys.meet(right_head, tail) {
                            return CheckRecord::fail(
                                "meet-absorption",
                                vec![Star::Elem(x), Star::Elem(y), Star::Elem(z), u, v],
                            );
                        }
                    }
                }
            }
        }
    }
    CheckRecord::pass("meet-absorption")
}

fn record_rect_absorption(sys: &AbstractSystem, domain: &[Star]) -> CheckRecord {
    for &x in domain {
        for &y in domain {
            for &u in domain {
                for &v in domain {
                    let (xv, uv, uy, xy) = match (
                        sys.star_mul(x, v),
                        sys.star_mul(u, v),
                        sys.star_mul(u, y),
                        sys.star_mul(x, y),
                    ) {
                        (Star::Elem(a), Star::Elem(b), Star::Elem(c), Star::Elem(d)) => {
                            (a, b, c, d)
                        }
                        // a product equal to the formal identity is outside G
                        _ => continue,
                    };
                    let three = sys.meet(sys.meet(xv, uv), uy);
                    if sys.meet(three, xy) != three {
                        return CheckRecord::fail("rect-absorption", vec![x, y, u, v]);
                    }
                }
            }
        }
    }
    CheckRecord::pass("rect-absorption")
}

/// `x ⊏ x⋏y` forces `x ≤ y`.
fn record_meet_collapse(
    sys: &AbstractSystem,
    rel: &Relation,
    leq: &Relation,
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            if rel.contains(x, sys.meet(x, y)) && !leq.contains(x, y) {
                return CheckRecord::fail_at(condition, &[x, y]);
            }
        }
    }
    CheckRecord::pass(condition)
}

/// `(x⋏y)u ≤ yu` over the given translation domain.
fn record_meet_translate_le(
    sys: &AbstractSystem,
    leq: &Relation,
    domain: &[Star],
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            let xy = sys.meet(x, y);
            for &u in domain {
                if !leq.contains(elem_mul_star(sys, xy, u), elem_mul_star(sys, y, u)) {
                    return CheckRecord::fail(condition, vec![Star::Elem(x), Star::Elem(y), u]);
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

/// `x ⊏ y⋏z` and `x ⊏ (z⋏v)u` force `x ⊏ (y⋏z⋏v)u`.
pub(crate) fn record_chi_meet_extend(
    sys: &AbstractSystem,
    rel: &Relation,
    domain: &[Star],
    condition: &'static str,
) -> CheckRecord {
    let m = sys.size();
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let yz = sys.meet(y, z);
                if !rel.contains(x, yz) {
                    continue;
                }
                for v in 0..m {
                    let zv = sys.meet(z, v);
                    let yzv = sys.meet(yz, v);
                    for &u in domain {
                        if rel.contains(x, elem_mul_star(sys, zv, u))
                            && !rel.contains(x, elem_mul_star(sys, yzv, u))
                        {
                            return CheckRecord::fail(
                                condition,
                                vec![
                                    Star::Elem(x),
                                    Star::Elem(y),
                                    Star::Elem(z),
                                    Star::Elem(v),
                                    u,
                                ],
                            );
                        }
                    }
                }
            }
        }
    }
    CheckRecord::pass(condition)
}

/// The six relation properties, in a fixed order.
pub fn relation_properties(sys: &AbstractSystem, rel: &Relation) -> Result<CheckReport> {
    if rel.size() != sys.size() {
        return Err(Error::RelationSizeMismatch {
            relation: rel.size(),
            system: sys.size(),
        });
    }
    let mut report = CheckReport::new();
    report.push(record_stable(sys, rel, "stable"));
    report.push(record_left_regular(sys, rel, "left-regular"));
    report.push(record_right_regular(sys, rel, "right-regular"));
    report.push(record_left_ideal(sys, rel, "left-ideal"));
    report.push(record_right_negative(sys, rel, "right-negative"));
    report.push(record_quasi_order(rel, "quasi-order"));
    Ok(report)
}

/// `x(y⋏z) = xy ⋏ xz`.
pub fn check_ldist(sys: &AbstractSystem) -> Result<CheckReport> {
    require_structure(sys)?;
    let mut report = CheckReport::new();
    report.push(record_ldist(sys));
    Ok(report)
}

/// `(x⋏y⋏z)u ⋏ (y⋏z)v = (x⋏y)u ⋏ (y⋏z)v` over the unit extension.
pub fn check_meet_absorption(sys: &AbstractSystem) -> Result<CheckReport> {
    require_structure(sys)?;
    let domain = unit_extension(sys);
    let mut report = CheckReport::new();
    report.push(record_meet_absorption(sys, &domain));
    Ok(report)
}

/// `(x⋏y)z = xz ⋏ yz`.
pub fn check_rdist(sys: &AbstractSystem) -> Result<CheckReport> {
    require_structure(sys)?;
    let mut report = CheckReport::new();
    report.push(record_rdist(sys));
    Ok(report)
}

/// `xv ⋏ uv ⋏ uy ⋏ xy = xv ⋏ uv ⋏ uy` over the unit extension, skipping
/// tuples where one of the four products leaves `G`.
pub fn check_rect_absorption(sys: &AbstractSystem) -> Result<CheckReport> {
    require_structure(sys)?;
    let domain = unit_extension(sys);
    let mut report = CheckReport::new();
    report.push(record_rect_absorption(sys, &domain));
    Ok(report)
}

/// The equivalence `x ⊢ y ⟺ x ⊏ xy` tying `δ` to `χ`.
pub fn check_delta_chi_link(sys: &AbstractSystem) -> Result<CheckReport> {
    let chi = sys.chi_rel().ok_or(Error::MissingChi)?;
    let m = sys.size();
    let mut record = CheckRecord::pass("delta-chi-link");
    'scan: for x in 0..m {
        for y in 0..m {
            if sys.delta(x, y) != chi.contains(x, sys.mul(x, y)) {
                record = CheckRecord::fail_at("delta-chi-link", &[x, y]);
                break 'scan;
            }
        }
    }
    let mut report = CheckReport::new();
    report.push(record);
    Ok(report)
}

/// The projection-order battery over the stored `χ`.
pub fn check_theorem3(sys: &AbstractSystem) -> Result<CheckReport> {
    let chi = sys.chi_rel().ok_or(Error::MissingChi)?;
    let leq = require_structure(sys)?;
    let domain = unit_extension(sys);
    let mut report = CheckReport::new();
    report.push(record_quasi_order(chi, "chi-quasi-order"));
    report.push(record_left_regular(sys, chi, "chi-left-regular"));
    report.push(record_right_negative(sys, chi, "chi-right-negative"));
    report.push(record_zeta_in_rel(sys, chi, "zeta-in-chi"));
    report.push(record_ldist(sys));
    report.push(record_meet_collapse(sys, chi, &leq, "chi-meet-collapse"));
    report.push(record_meet_translate_le(
        sys,
        &leq,
        &domain,
        "meet-translate-le",
    ));
    report.push(record_chi_meet_extend(sys, chi, &domain, "chi-meet-extend"));
    Ok(report)
}

/// The projection-order battery extended by right distributivity (the
/// invertible case).
pub fn check_theorem4(sys: &AbstractSystem) -> Result<CheckReport> {
    let mut report = check_theorem3(sys)?;
    report.push(record_rdist(sys));
    Ok(report)
}

/// The projection-order battery plus the `δ`/`χ` link.
pub fn check_theorem5(sys: &AbstractSystem) -> Result<CheckReport> {
    let mut report = check_theorem3(sys)?;
    report.extend(check_delta_chi_link(sys)?);
    Ok(report)
}

/// The `δ`-only battery: left-ideality of `δ`, the distributivity and
/// translation laws, and the two conditions on the derived quasi-order
/// `χ₀`.  With `invertible` set, right distributivity is appended.
pub fn check_theorem7(sys: &AbstractSystem, invertible: bool) -> Result<CheckReport> {
    let leq = require_structure(sys)?;
    let chi0 = crate::closure::chi0(sys)?;
    let elems: Vec<Star> = (0..sys.size()).map(Star::Elem).collect();
    let m = sys.size();

    let mut report = CheckReport::new();
    report.push(record_left_ideal(sys, sys.delta_rel(), "delta-left-ideal"));
    report.push(record_ldist(sys));
    // the translation law is stated over G alone here
    report.push(record_meet_translate_le(
        sys,
        &leq,
        &elems,
        "meet-translate-le",
    ));
    report.push(record_meet_collapse(sys, &chi0, &leq, "chi0-meet-collapse"));

    let mut product_delta = CheckRecord::pass("chi0-product-delta");
    'scan: for x in 0..m {
        for y in 0..m {
            if chi0.contains(x, sys.mul(x, y)) && !sys.delta(x, y) {
                product_delta = CheckRecord::fail_at("chi0-product-delta", &[x, y]);
                break 'scan;
            }
        }
    }
    report.push(product_delta);

    if invertible {
        report.push(record_rdist(sys));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::super::sample_three_element_system;
    use super::*;

    fn two_chain(delta: Relation, chi: Option<Relation>) -> AbstractSystem {
        // mul = meet = min on the chain 0 < 1
        AbstractSystem::new(
            2,
            vec![vec![0, 0], vec![0, 1]],
            vec![vec![0, 0], vec![0, 1]],
            delta,
            chi,
        )
        .unwrap()
    }

    #[test]
    fn structure_checks_on_projections() {
        // left projection is a semigroup but not a semilattice
        let sys = AbstractSystem::new(
            2,
            vec![vec![0, 0], vec![1, 1]],
            vec![vec![0, 0], vec![1, 1]],
            Relation::full(2),
            None,
        )
        .unwrap();
        assert!(check_semigroup(&sys).all_pass());
        let lattice = check_semilattice(&sys);
        assert!(!lattice.all_pass());
        assert!(lattice.record("meet-idem").unwrap().passed());
        let comm = lattice.record("meet-comm").unwrap();
        assert_eq!(comm.witness().unwrap(), &[Star::Elem(0), Star::Elem(1)]);
        assert!(lattice.record("meet-assoc").unwrap().passed());
        assert!(natural_order(&sys).is_err());
    }

    #[test]
    fn broken_associativity_has_first_witness() {
        let sys = AbstractSystem::new(
            2,
            vec![vec![1, 1], vec![0, 0]],
            vec![vec![0, 0], vec![0, 1]],
            Relation::full(2),
            None,
        )
        .unwrap();
        let report = check_semigroup(&sys);
        assert_eq!(
            report.record("mul-assoc").unwrap().witness().unwrap(),
            &[Star::Elem(0), Star::Elem(0), Star::Elem(0)]
        );
        assert!(matches!(check_ldist(&sys), Err(Error::Precondition(_))));
    }

    #[test]
    fn natural_order_of_the_sample() {
        let sys = sample_three_element_system();
        let leq = natural_order(&sys).unwrap();
        // (0,-) sits below both (0,0) and (0,1), which are incomparable
        assert_eq!(
            leq,
            Relation::from_rows(3, vec![0b111, 0b010, 0b100]).unwrap()
        );
    }

    #[test]
    fn ldist_failure_on_group_with_min_meet() {
        // the two-element group written with identity at index 1, meet = min
        let sys = AbstractSystem::new(
            2,
            vec![vec![1, 0], vec![0, 1]],
            vec![vec![0, 0], vec![0, 1]],
            Relation::full(2),
            None,
        )
        .unwrap();
        let report = check_ldist(&sys).unwrap();
        let record = report.record("ldist").unwrap();
        assert_eq!(
            record.witness().unwrap(),
            &[Star::Elem(0), Star::Elem(0), Star::Elem(1)]
        );
    }

    #[test]
    fn sample_passes_identity_and_order_batteries() {
        let sys = sample_three_element_system();
        assert!(check_ldist(&sys).unwrap().all_pass());
        assert!(check_meet_absorption(&sys).unwrap().all_pass());
        assert!(check_theorem3(&sys).unwrap().all_pass());
        assert!(check_theorem5(&sys).unwrap().all_pass());
        assert!(check_theorem7(&sys, false).unwrap().all_pass());
    }

    #[test]
    fn sample_fails_right_distributivity() {
        // the sample contains a non-invertible map, so rdist must fail
        let sys = sample_three_element_system();
        let report = check_rdist(&sys).unwrap();
        let record = report.record("rdist").unwrap();
        assert_eq!(
            record.witness().unwrap(),
            &[Star::Elem(1), Star::Elem(2), Star::Elem(1)]
        );
        let theorem4 = check_theorem4(&sys).unwrap();
        assert!(!theorem4.all_pass());
        assert_eq!(theorem4.first_failure().unwrap().condition(), "rdist");
    }

    #[test]
    fn relation_properties_of_sample_delta() {
        let sys = sample_three_element_system();
        let report = relation_properties(&sys, sys.delta_rel()).unwrap();
        assert!(report.record("stable").unwrap().passed());
        assert!(report.record("left-ideal").unwrap().passed());
        assert!(report.record("right-negative").unwrap().passed());
        // semiadjacency is reflexive here but not transitive:
        // 2 ⊢ 1 and 1 ⊢ 0 yet 2 ⊬ 0
        let quasi = report.record("quasi-order").unwrap();
        assert_eq!(
            quasi.witness().unwrap(),
            &[Star::Elem(2), Star::Elem(1), Star::Elem(0)]
        );

        // the identity relation on the sample is not left-ideal:
        // (0,0) ∈ id but (1·0, 0) = (1, 0) ∉ id
        let report = relation_properties(&sys, &Relation::identity(3)).unwrap();
        let record = report.record("left-ideal").unwrap();
        assert_eq!(
            record.witness().unwrap(),
            &[Star::Elem(0), Star::Elem(0), Star::Elem(1)]
        );
        // size mismatch is a usage error
        assert!(relation_properties(&sys, &Relation::full(2)).is_err());
    }

    #[test]
    fn full_chi_on_a_chain_fails_meet_collapse() {
        let sys = two_chain(Relation::full(2), Some(Relation::full(2)));
        let report = check_theorem3(&sys).unwrap();
        assert!(report.record("chi-quasi-order").unwrap().passed());
        assert!(report.record("zeta-in-chi").unwrap().passed());
        let collapse = report.record("chi-meet-collapse").unwrap();
        assert_eq!(collapse.witness().unwrap(), &[Star::Elem(1), Star::Elem(0)]);
    }

    #[test]
    fn full_delta_on_a_chain_fails_the_derived_battery() {
        let sys = two_chain(Relation::full(2), None);
        let report = check_theorem7(&sys, false).unwrap();
        assert!(report.record("delta-left-ideal").unwrap().passed());
        assert!(report.record("ldist").unwrap().passed());
        let collapse = report.record("chi0-meet-collapse").unwrap();
        assert_eq!(collapse.witness().unwrap(), &[Star::Elem(1), Star::Elem(0)]);
    }

    #[test]
    fn delta_chi_link_holds_on_sample_and_detects_stripped_delta() {
        let sys = sample_three_element_system();
        assert!(check_delta_chi_link(&sys).unwrap().all_pass());

        let stripped = sys.clone().with_delta(Relation::empty(3)).unwrap();
        let report = check_delta_chi_link(&stripped).unwrap();
        let record = report.record("delta-chi-link").unwrap();
        assert_eq!(record.witness().unwrap(), &[Star::Elem(0), Star::Elem(0)]);

        let bare = sys.with_chi(None).unwrap();
        assert!(matches!(
            check_delta_chi_link(&bare),
            Err(Error::MissingChi)
        ));
        assert!(matches!(check_theorem3(&bare), Err(Error::MissingChi)));
    }

    #[test]
    fn theorem7_detects_stripped_delta() {
        let sys = sample_three_element_system()
            .with_delta(Relation::empty(3))
            .unwrap();
        let report = check_theorem7(&sys, false).unwrap();
        let record = report.record("chi0-product-delta").unwrap();
        assert_eq!(record.witness().unwrap(), &[Star::Elem(0), Star::Elem(0)]);
    }

    #[test]
    fn trivial_system_passes_everything() {
        let sys = AbstractSystem::new(
            1,
            vec![vec![0]],
            vec![vec![0]],
            Relation::full(1),
            Some(Relation::full(1)),
        )
        .unwrap();
        assert!(check_semigroup(&sys).all_pass());
        assert!(check_semilattice(&sys).all_pass());
        assert!(check_meet_absorption(&sys).unwrap().all_pass());
        assert!(check_rect_absorption(&sys).unwrap().all_pass());
        assert!(check_theorem4(&sys).unwrap().all_pass());
        assert!(check_theorem5(&sys).unwrap().all_pass());
        assert!(check_theorem7(&sys, true).unwrap().all_pass());
    }
}
