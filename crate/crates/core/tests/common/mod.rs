//! Worked models shared by the integration tests.
#![allow(dead_code)]

use orthokit_core::{Carrier, Groupoid, Involution, Relation, RelationalSystem};

pub fn trivial() -> Groupoid {
    Groupoid::new(
        Carrier::from_names(&["1"]).unwrap(),
        Involution::new(vec![0]).unwrap(),
        vec![0],
    )
    .unwrap()
}

pub fn b2() -> Groupoid {
    Groupoid::new(
        Carrier::from_names(&["0", "1"]).unwrap(),
        Involution::new(vec![1, 0]).unwrap(),
        vec![0, 1, 1, 1],
    )
    .unwrap()
}

pub fn b2xb2() -> Groupoid {
    Groupoid::new(
        Carrier::from_names(&["0", "p", "q", "1"]).unwrap(),
        Involution::new(vec![3, 2, 1, 0]).unwrap(),
        vec![0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3],
    )
    .unwrap()
}

/// Six elements, passes every orthogroupoid condition, but 0 commutes
/// with nothing outside {0, 1}: a+0 = b while 0+a = a.
pub fn og6() -> Groupoid {
    let carrier = Carrier::from_names(&["0", "1", "a", "a'", "b", "b'"]).unwrap();
    let inv = Involution::new(vec![1, 0, 3, 2, 5, 4]).unwrap();
    #[rustfmt::skip]
    let table = vec![
        0, 1, 2, 3, 4, 5,
        1, 1, 1, 1, 1, 1,
        4, 1, 2, 1, 4, 1,
        3, 1, 1, 3, 1, 5,
        2, 1, 2, 1, 4, 1,
        3, 1, 1, 3, 1, 5,
    ];
    Groupoid::new(carrier, inv, table).unwrap()
}

/// Four elements, not reflexive, not transitive, orthogonal.
pub fn ors4() -> RelationalSystem {
    let carrier = Carrier::from_names(&["0", "a", "a'", "1"]).unwrap();
    let inv = Involution::new(vec![3, 2, 1, 0]).unwrap();
    let mut rel = Relation::empty(4);
    for y in 0..4 {
        rel.insert(0, y);
    }
    for x in 0..4 {
        rel.insert(x, 3);
    }
    rel.insert(1, 2);
    rel.insert(2, 1);
    RelationalSystem::new(carrier, inv, rel).unwrap()
}

/// The groupoid every choice policy induces from [`ors4`].
pub fn ors4_induced() -> Groupoid {
    let carrier = Carrier::from_names(&["0", "a", "a'", "1"]).unwrap();
    let inv = Involution::new(vec![3, 2, 1, 0]).unwrap();
    #[rustfmt::skip]
    let table = vec![
        0, 1, 2, 3,
        1, 2, 2, 3,
        2, 1, 1, 3,
        3, 3, 3, 3,
    ];
    Groupoid::new(carrier, inv, table).unwrap()
}

/// Eight elements, reflexive, not transitive; the cone over (a, b) has
/// two incomparable supremal candidates, so induction branches.
pub fn ors8() -> RelationalSystem {
    let carrier =
        Carrier::from_names(&["0", "a", "b", "a'", "b'", "c", "c'", "1"]).unwrap();
    let inv = Involution::new(vec![7, 3, 4, 1, 2, 6, 5, 0]).unwrap();
    let mut rel = Relation::empty(8);
    for y in 0..8 {
        rel.insert(0, y);
    }
    for x in 0..8 {
        rel.insert(x, 7);
        rel.insert(x, x);
    }
    for (x, y) in [(1, 2), (2, 5), (4, 3), (6, 4), (1, 6), (5, 3)] {
        rel.insert(x, y);
    }
    RelationalSystem::new(carrier, inv, rel).unwrap()
}
