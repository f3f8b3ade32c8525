//! Fixture builders shared by the unit tests.

use alloc::vec;

use crate::model::{Carrier, Groupoid, Involution, Relation, RelationalSystem};

/// Two-element structure 0, 1 with the forced table.
pub fn b2() -> Groupoid {
    let carrier = Carrier::from_names(&["0", "1"]).unwrap();
    let inv = Involution::new(vec![1, 0]).unwrap();
    Groupoid::new(carrier, inv, vec![0, 1, 1, 1]).unwrap()
}

/// Four elements 0, a, a', 1; besides the forced (0,_) and (_,1) pairs the
/// relation holds only at (a,a') and (a',a). Orthogonal, not reflexive.
pub fn ors4() -> RelationalSystem {
    let carrier = Carrier::from_names(&["0", "a", "a'", "1"]).unwrap();
    let inv = Involution::new(vec![3, 2, 1, 0]).unwrap();
    let mut r = Relation::empty(4);
    for x in 0..4 {
        r.insert(0, x);
        r.insert(x, 3);
    }
    r.insert(1, 2);
    r.insert(2, 1);
    let s = RelationalSystem::new(carrier, inv, r).unwrap();
    assert!(s.validate().passed());
    s
}

/// The groupoid ors4 induces under least-index choices.
pub fn ors4_induced() -> Groupoid {
    let carrier = Carrier::from_names(&["0", "a", "a'", "1"]).unwrap();
    let inv = Involution::new(vec![3, 2, 1, 0]).unwrap();
    let table = vec![
        0, 1, 2, 3, //
        1, 2, 2, 3, //
        2, 1, 1, 3, //
        3, 3, 3, 3,
    ];
    Groupoid::new(carrier, inv, table).unwrap()
}

/// Eight elements 0, a, b, a', b', c, c', 1. Reflexive, not transitive,
/// orthogonal. Element order matches the index constants below.
pub const ORS8_NAMES: [&str; 8] = ["0", "a", "b", "a'", "b'", "c", "c'", "1"];

pub fn ors8() -> RelationalSystem {
    let carrier = Carrier::from_names(&ORS8_NAMES).unwrap();
    let inv = Involution::new(vec![7, 3, 4, 1, 2, 6, 5, 0]).unwrap();
    let (a, b, ap, bp, c, cp) = (1, 2, 3, 4, 5, 6);
    let mut r = Relation::empty(8);
    for x in 0..8 {
        r.insert(0, x);
        r.insert(x, 7);
        r.insert(x, x);
    }
    for (x, y) in [(a, b), (b, c), (bp, ap), (cp, bp), (a, cp), (c, ap)] {
        r.insert(x, y);
    }
    let s = RelationalSystem::new(carrier, inv, r).unwrap();
    assert!(s.validate().passed());
    s
}

/// Six-element table that satisfies every orthogroupoid axiom yet has
/// a+0 = b, so it is not 0-commutative. Element order 0, 1, a, a', b, b'.
pub fn og6() -> Groupoid {
    let carrier = Carrier::from_names(&["0", "1", "a", "a'", "b", "b'"]).unwrap();
    let inv = Involution::new(vec![1, 0, 3, 2, 5, 4]).unwrap();
    let table = vec![
        0, 1, 2, 3, 4, 5, //
        1, 1, 1, 1, 1, 1, //
        4, 1, 2, 1, 4, 1, //
        3, 1, 1, 3, 1, 5, //
        2, 1, 2, 1, 4, 1, //
        3, 1, 1, 3, 1, 5,
    ];
    Groupoid::new(carrier, inv, table).unwrap()
}

/// Direct square of b2 with elements (0,0), (0,1), (1,0), (1,1) in that
/// order, named 0, p, q, 1.
pub fn b2xb2() -> Groupoid {
    let carrier = Carrier::from_names(&["0", "p", "q", "1"]).unwrap();
    let inv = Involution::new(vec![3, 2, 1, 0]).unwrap();
    let table = vec![
        0, 1, 2, 3, //
        1, 1, 3, 3, //
        2, 3, 2, 3, //
        3, 3, 3, 3,
    ];
    Groupoid::new(carrier, inv, table).unwrap()
}
