//! Relation-side computations: upper cones, supremal elements, orthogonality,
//! descriptive relation flags, and the orthogonal-system check.

use alloc::vec::Vec;

use crate::model::{ElemSet, RelationalSystem};
use crate::report::{CheckOutcome, CheckReport, Witness};

/// Upper cone of a pair, together with its supremal members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeResult {
    /// `{c : (a,c) ∈ R and (b,c) ∈ R}`.
    pub members: ElemSet,
    /// Members related to every other member: `w` with `(w,z) ∈ R` for all
    /// `z ∈ members`, `z ≠ w`. No condition on `(w,w)`.
    pub supremals: ElemSet,
}

pub fn upper_cone(s: &RelationalSystem, a: usize, b: usize) -> ConeResult {
    let members = s.relation().row(a) & s.relation().row(b);
    let mut supremals = ElemSet::EMPTY;
    for w in members.iter() {
        if members
            .without(ElemSet::singleton(w))
            .is_subset_of(s.relation().row(w))
        {
            supremals.insert(w);
        }
    }
    ConeResult { members, supremals }
}

/// `a ⊥ b`: the relation holds between `a` and the image of `b`.
pub fn orthogonal(s: &RelationalSystem, a: usize, b: usize) -> bool {
    s.related(a, s.prime(b))
}

/// Unordered orthogonal pairs, with asymmetry diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoPairs {
    /// All `{a, b}` with `a ≤ b` where `a ⊥ b` or `b ⊥ a` holds.
    pub pairs: Vec<(usize, usize)>,
    /// Pairs where exactly one direction holds. Empty whenever the system
    /// passes its compatibility check; kept as a diagnostic for raw input.
    pub inconsistencies: Vec<(usize, usize)>,
}

impl OrthoPairs {
    pub fn contains(&self, a: usize, b: usize) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.pairs.binary_search(&key).is_ok()
    }
}

pub fn orthogonal_pairs(s: &RelationalSystem) -> OrthoPairs {
    let n = s.size();
    let mut pairs = Vec::new();
    let mut inconsistencies = Vec::new();
    for a in 0..n {
        for b in a..n {
            let ab = orthogonal(s, a, b);
            let ba = orthogonal(s, b, a);
            if ab || ba {
                pairs.push((a, b));
            }
            if ab != ba {
                inconsistencies.push((a, b));
            }
        }
    }
    OrthoPairs { pairs, inconsistencies }
}

/// The two conditions an orthogonal system must satisfy on top of being a
/// valid system: `complement_cone` (the cone of `x, x'` is exactly the top)
/// and `orthogonal_supremal` (every orthogonal pair away from the zero has a
/// supremal element in its cone).
pub fn check_orthogonal_system(s: &RelationalSystem) -> CheckReport {
    let n = s.size();
    let top = s.top();
    let zero = s.zero();
    let mut report = CheckReport::new();

    let mut cone_check = CheckOutcome::pass();
    for x in 0..n {
        let cone = upper_cone(s, x, s.prime(x)).members;
        if cone != ElemSet::singleton(top) {
            let offender = cone
                .without(ElemSet::singleton(top))
                .min()
                .unwrap_or(top);
            cone_check = CheckOutcome::fail(Witness::new(&[("x", x), ("c", offender)]));
            break;
        }
    }
    report.push_outcome("complement_cone", cone_check);

    let mut sup_check = CheckOutcome::pass();
    'out: for (a, b) in orthogonal_pairs(s).pairs {
        if a == zero || b == zero {
            continue;
        }
        if upper_cone(s, a, b).supremals.is_empty() {
            sup_check = CheckOutcome::fail(Witness::new(&[("x", a), ("y", b)]));
            break 'out;
        }
    }
    report.push_outcome("orthogonal_supremal", sup_check);
    report
}

/// Descriptive flags; none is required for validity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationFlags {
    pub reflexive: CheckOutcome,
    pub symmetric: CheckOutcome,
    pub transitive: CheckOutcome,
    pub antisymmetric: CheckOutcome,
}

impl RelationFlags {
    pub fn to_report(&self) -> CheckReport {
        let mut report = CheckReport::new();
        report.push_outcome("reflexive", self.reflexive.clone());
        report.push_outcome("symmetric", self.symmetric.clone());
        report.push_outcome("transitive", self.transitive.clone());
        report.push_outcome("antisymmetric", self.antisymmetric.clone());
        report
    }
}

pub fn relation_flags(s: &RelationalSystem) -> RelationFlags {
    let n = s.size();
    let r = s.relation();

    let reflexive = match (0..n).find(|&x| !r.contains(x, x)) {
        None => CheckOutcome::pass(),
        Some(x) => CheckOutcome::fail(Witness::new(&[("x", x)])),
    };

    let mut symmetric = CheckOutcome::pass();
    let mut antisymmetric = CheckOutcome::pass();
    'sym: for x in 0..n {
        for y in r.row(x).iter() {
            if !r.contains(y, x) {
                if symmetric.passed {
                    symmetric = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
                }
            } else if x != y && antisymmetric.passed {
                antisymmetric = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
            }
            if !symmetric.passed && !antisymmetric.passed {
                break 'sym;
            }
        }
    }

    let mut transitive = CheckOutcome::pass();
    'tr: for x in 0..n {
        for y in r.row(x).iter() {
            if !r.row(y).is_subset_of(r.row(x)) {
                let z = r.row(y).without(r.row(x)).min().unwrap();
                transitive = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y), ("z", z)]));
                break 'tr;
            }
        }
    }

    RelationFlags { reflexive, symmetric, transitive, antisymmetric }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{Carrier, Involution, Relation};
    use crate::testutil::ors4;
    use alloc::vec;

    #[test]
    fn ors4_cones() {
        let s = ors4();
        let (a, ap, one) = (1, 2, 3);

        let c = upper_cone(&s, a, ap);
        assert_eq!(c.members, ElemSet::singleton(one));
        assert_eq!(c.supremals, ElemSet::singleton(one));

        let c = upper_cone(&s, a, a);
        assert_eq!(c.members.iter().collect::<Vec<_>>(), vec![ap, one]);
        assert_eq!(c.supremals, ElemSet::singleton(ap));

        let c = upper_cone(&s, one, one);
        assert!(c.members.contains(one));
    }

    #[test]
    fn ors4_orthogonality() {
        let s = ors4();
        let pairs = orthogonal_pairs(&s);
        assert!(pairs.inconsistencies.is_empty());
        assert!(pairs.contains(1, 1));
        assert!(pairs.contains(2, 2));
        for x in 0..4 {
            assert!(pairs.contains(0, x));
        }
        assert!(!pairs.contains(1, 2));
        assert!(!pairs.contains(1, 3));
    }

    #[test]
    fn ors4_is_orthogonal_but_not_reflexive_or_transitive() {
        let s = ors4();
        assert!(check_orthogonal_system(&s).passed());

        let flags = relation_flags(&s);
        assert!(!flags.reflexive.passed);
        assert_eq!(flags.reflexive.witness.as_ref().unwrap().bindings, vec![("x", 1)]);
        assert!(!flags.transitive.passed);
        assert!(!flags.symmetric.passed);
        assert!(!flags.antisymmetric.passed);
    }

    #[test]
    fn removing_the_orthogonality_pair_changes_the_verdict() {
        let s = ors4();
        let mut r = s.relation().clone();
        r.remove(1, 2);
        r.remove(2, 1);
        let s2 = RelationalSystem::new(s.carrier().clone(), s.involution().clone(), r).unwrap();
        assert!(s2.validate().passed());
        let pairs = orthogonal_pairs(&s2);
        assert!(!pairs.contains(1, 1));
        assert!(check_orthogonal_system(&s2).passed());
    }

    #[test]
    fn cone_failure_carries_offending_member() {
        // Make (a, a) and (a', a) hold so a lands in the cone of (a, a').
        let s = ors4();
        let mut r = s.relation().clone();
        r.insert(1, 1);
        r.insert(2, 2);
        let s2 = RelationalSystem::new(s.carrier().clone(), s.involution().clone(), r).unwrap();
        assert!(s2.validate().passed());
        let report = check_orthogonal_system(&s2);
        let cone = report.get("complement_cone").unwrap();
        assert!(!cone.passed);
        assert_eq!(cone.witnesses[0].bindings, vec![("x", 1), ("c", 1)]);
    }

    #[test]
    fn total_relation_flags() {
        let carrier = Carrier::from_names(&["0", "1"]).unwrap();
        let inv = Involution::new(vec![1, 0]).unwrap();
        let mut r = Relation::empty(2);
        for x in 0..2 {
            for y in 0..2 {
                r.insert(x, y);
            }
        }
        let s = RelationalSystem::new(carrier, inv, r).unwrap();
        let flags = relation_flags(&s);
        assert!(flags.reflexive.passed);
        assert!(flags.symmetric.passed);
        assert!(flags.transitive.passed);
        assert!(!flags.antisymmetric.passed);
    }
}
