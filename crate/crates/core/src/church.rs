//! Conditional structure on 0-commutative orthogroupoids.
//!
//! The derived product `x·y = (x'+y')'` and the ternary term
//! `q(x,y,z) = (x+z)·(x'+y)` behave like if-then-else: `q(1,a,b) = a` and
//! `q(0,a,b) = b`. An element is central when `q(e,_,_)` projects the
//! algebra onto a pair of complementary factors; that can be tested
//! equationally ([`ChurchGroupoid::is_central_equational`]) or through
//! the congruences generated by collapsing `e` with the bounds
//! ([`is_central_congruence`]). The central elements form a Boolean
//! algebra under `+`, `·`, `'`, which [`ChurchGroupoid::center`] builds
//! and verifies identity by identity.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::axioms::{check_orthogroupoid, is_zero_commutative};
use crate::model::Groupoid;
use crate::report::Witness;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChurchError {
    NotOrthogroupoid,
    NotZeroCommutative,
}

impl fmt::Display for ChurchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChurchError::NotOrthogroupoid => write!(f, "not an orthogroupoid"),
            ChurchError::NotZeroCommutative => {
                write!(f, "0 does not commute with every element")
            }
        }
    }
}

impl core::error::Error for ChurchError {}

/// A 0-commutative orthogroupoid together with its derived conditional
/// operations. Construction re-checks both properties.
#[derive(Debug)]
pub struct ChurchGroupoid<'a> {
    g: &'a Groupoid,
}

#[derive(Debug, Clone)]
pub struct CentralityFailure {
    pub condition: &'static str,
    pub witness: Witness,
}

#[derive(Debug, Clone)]
pub struct Centrality {
    pub central: bool,
    pub failure: Option<CentralityFailure>,
}

impl Centrality {
    fn fail(condition: &'static str, witness: Witness) -> Self {
        Centrality { central: false, failure: Some(CentralityFailure { condition, witness }) }
    }
}

/// The center candidate failed a Boolean-algebra identity or is not
/// closed under the operations.
#[derive(Debug, Clone)]
pub struct CenterError {
    pub identity: &'static str,
    pub witness: Witness,
}

impl fmt::Display for CenterError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "central elements violate {}", self.identity)
    }
}

impl core::error::Error for CenterError {}

impl<'a> ChurchGroupoid<'a> {
    pub fn new(g: &'a Groupoid) -> Result<Self, ChurchError> {
        if !check_orthogroupoid(g).passes() {
            return Err(ChurchError::NotOrthogroupoid);
        }
        if !is_zero_commutative(g).passed {
            return Err(ChurchError::NotZeroCommutative);
        }
        Ok(ChurchGroupoid { g })
    }

    pub fn groupoid(&self) -> &'a Groupoid {
        self.g
    }

    pub fn dot(&self, x: usize, y: usize) -> usize {
        self.g.prime(self.g.plus(self.g.prime(x), self.g.prime(y)))
    }

    pub fn q(&self, x: usize, y: usize, z: usize) -> usize {
        self.dot(self.g.plus(x, z), self.g.plus(self.g.prime(x), y))
    }

    pub fn meet(&self, e: usize, b: usize) -> usize {
        self.q(e, b, self.g.zero())
    }

    /// Checks, condition family by condition family, that `q(e,_,_)`
    /// respects the structure; the first violated instance is reported.
    pub fn is_central_equational(&self, e: usize) -> Centrality {
        let g = self.g;
        let n = g.size();
        for a in 0..n {
            if self.q(e, a, a) != a {
                return Centrality::fail("central_a", Witness::new(&[("e", e), ("a", a)]));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let agreed = self.q(e, a, c);
                    if self.q(e, self.q(e, a, b), c) != agreed
                        || self.q(e, a, self.q(e, b, c)) != agreed
                    {
                        return Centrality::fail(
                            "central_b",
                            Witness::new(&[("e", e), ("a", a), ("b", b), ("c", c)]),
                        );
                    }
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if self.q(e, g.prime(a), g.prime(b)) != g.prime(self.q(e, a, b)) {
                    return Centrality::fail(
                        "central_c_involution",
                        Witness::new(&[("e", e), ("a", a), ("b", b)]),
                    );
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if self.q(e, g.plus(a, b), g.plus(c, d))
                            != g.plus(self.q(e, a, c), self.q(e, b, d))
                        {
                            return Centrality::fail(
                                "central_c_plus",
                                Witness::new(&[
                                    ("e", e),
                                    ("a", a),
                                    ("b", b),
                                    ("c", c),
                                    ("d", d),
                                ]),
                            );
                        }
                    }
                }
            }
        }
        if self.q(e, g.top(), g.top()) != g.top() {
            return Centrality::fail("central_c_one", Witness::new(&[("e", e)]));
        }
        if self.q(e, g.top(), g.zero()) != e {
            return Centrality::fail("central_d", Witness::new(&[("e", e)]));
        }
        Centrality { central: true, failure: None }
    }

    pub fn center(&self) -> Result<BooleanCenter, CenterError> {
        let g = self.g;
        let n = g.size();
        let elements: Vec<usize> =
            (0..n).filter(|&e| self.is_central_equational(e).central).collect();
        let k = elements.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &e) in elements.iter().enumerate() {
            pos[e] = i;
        }
        if pos[g.zero()] == usize::MAX || pos[g.top()] == usize::MAX {
            return Err(CenterError {
                identity: "bounds_central",
                witness: Witness::new(&[("x", g.zero()), ("y", g.top())]),
            });
        }
        let mut join = vec![0usize; k * k];
        let mut meet = vec![0usize; k * k];
        let mut compl = vec![0usize; k];
        for (i, &x) in elements.iter().enumerate() {
            let xp = g.prime(x);
            if pos[xp] == usize::MAX {
                return Err(CenterError {
                    identity: "closure_complement",
                    witness: Witness::new(&[("x", x)]),
                });
            }
            compl[i] = xp;
            for (j, &y) in elements.iter().enumerate() {
                let s = g.plus(x, y);
                if pos[s] == usize::MAX {
                    return Err(CenterError {
                        identity: "closure_join",
                        witness: Witness::new(&[("x", x), ("y", y)]),
                    });
                }
                join[i * k + j] = s;
                let m = self.dot(x, y);
                if pos[m] == usize::MAX {
                    return Err(CenterError {
                        identity: "closure_meet",
                        witness: Witness::new(&[("x", x), ("y", y)]),
                    });
                }
                meet[i * k + j] = m;
            }
        }
        let center = BooleanCenter {
            elements,
            pos,
            join,
            meet,
            compl,
            zero: g.zero(),
            top: g.top(),
        };
        center.verify()?;
        Ok(center)
    }
}

/// The central elements with their induced Boolean operations. Operation
/// arguments and results are carrier indices of the original groupoid.
#[derive(Debug, Clone)]
pub struct BooleanCenter {
    elements: Vec<usize>,
    pos: Vec<usize>,
    join: Vec<usize>,
    meet: Vec<usize>,
    compl: Vec<usize>,
    zero: usize,
    top: usize,
}

impl BooleanCenter {
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.pos.len() && self.pos[x] != usize::MAX
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn join_of(&self, x: usize, y: usize) -> usize {
        let k = self.elements.len();
        self.join[self.pos[x] * k + self.pos[y]]
    }

    pub fn meet_of(&self, x: usize, y: usize) -> usize {
        let k = self.elements.len();
        self.meet[self.pos[x] * k + self.pos[y]]
    }

    pub fn compl_of(&self, x: usize) -> usize {
        self.compl[self.pos[x]]
    }

    pub fn le(&self, x: usize, y: usize) -> bool {
        self.meet_of(x, y) == x
    }

    /// Minimal nonzero central elements, in carrier order.
    pub fn atoms(&self) -> Vec<usize> {
        self.elements
            .iter()
            .copied()
            .filter(|&a| {
                a != self.zero
                    && self
                        .elements
                        .iter()
                        .all(|&b| b == self.zero || b == a || !self.le(b, a))
            })
            .collect()
    }

    fn verify(&self) -> Result<(), CenterError> {
        let err = |identity, x, y, z| {
            Err(CenterError {
                identity,
                witness: Witness::new(&[("x", x), ("y", y), ("z", z)]),
            })
        };
        for &x in &self.elements {
            if self.join_of(x, self.zero) != x {
                return err("identity_join", x, self.zero, self.zero);
            }
            if self.meet_of(x, self.top) != x {
                return err("identity_meet", x, self.top, self.top);
            }
            if self.join_of(x, self.compl_of(x)) != self.top {
                return err("complement_join", x, self.compl_of(x), self.top);
            }
            if self.meet_of(x, self.compl_of(x)) != self.zero {
                return err("complement_meet", x, self.compl_of(x), self.zero);
            }
            for &y in &self.elements {
                if self.join_of(x, y) != self.join_of(y, x) {
                    return err("commutative_join", x, y, y);
                }
                if self.meet_of(x, y) != self.meet_of(y, x) {
                    return err("commutative_meet", x, y, y);
                }
                if self.join_of(x, self.meet_of(x, y)) != x {
                    return err("absorption_join", x, y, y);
                }
                if self.meet_of(x, self.join_of(x, y)) != x {
                    return err("absorption_meet", x, y, y);
                }
                for &z in &self.elements {
                    if self.join_of(self.join_of(x, y), z) != self.join_of(x, self.join_of(y, z)) {
                        return err("associative_join", x, y, z);
                    }
                    if self.meet_of(self.meet_of(x, y), z) != self.meet_of(x, self.meet_of(y, z)) {
                        return err("associative_meet", x, y, z);
                    }
                    if self.meet_of(x, self.join_of(y, z))
                        != self.join_of(self.meet_of(x, y), self.meet_of(x, z))
                    {
                        return err("distributive_meet_over_join", x, y, z);
                    }
                    if self.join_of(x, self.meet_of(y, z))
                        != self.meet_of(self.join_of(x, y), self.join_of(x, z))
                    {
                        return err("distributive_join_over_meet", x, y, z);
                    }
                }
            }
        }
        Ok(())
    }
}

/// A partition of the carrier, each element mapped to the least member of
/// its block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    rep: Vec<usize>,
}

impl Partition {
    pub fn identity(n: usize) -> Self {
        Partition { rep: (0..n).collect() }
    }

    fn from_parent(mut parent: Vec<usize>) -> Self {
        let n = parent.len();
        let mut least = vec![usize::MAX; n];
        for x in 0..n {
            let r = find(&mut parent, x);
            if least[r] == usize::MAX {
                least[r] = x;
            }
        }
        let mut rep = vec![0; n];
        for x in 0..n {
            rep[x] = least[find(&mut parent, x)];
        }
        Partition { rep }
    }

    pub fn len(&self) -> usize {
        self.rep.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rep.is_empty()
    }

    pub fn representative(&self, x: usize) -> usize {
        self.rep[x]
    }

    pub fn same(&self, x: usize, y: usize) -> bool {
        self.rep[x] == self.rep[y]
    }

    pub fn class_count(&self) -> usize {
        self.rep.iter().enumerate().filter(|&(x, &r)| x == r).count()
    }

    pub fn is_identity(&self) -> bool {
        self.rep.iter().enumerate().all(|(x, &r)| x == r)
    }

    pub fn is_total(&self) -> bool {
        self.rep.iter().all(|&r| r == 0)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut by_rep: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (x, &r) in self.rep.iter().enumerate() {
            by_rep.entry(r).or_default().push(x);
        }
        by_rep.into_values().collect()
    }

    /// Blockwise intersection.
    pub fn meet(&self, other: &Partition) -> Partition {
        let n = self.rep.len();
        let mut first: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut rep = vec![0; n];
        for x in 0..n {
            rep[x] = *first.entry((self.rep[x], other.rep[x])).or_insert(x);
        }
        Partition { rep }
    }

    pub fn is_congruence(&self, g: &Groupoid) -> bool {
        let n = g.size();
        for x in 0..n {
            for y in 0..n {
                if !self.same(x, y) {
                    continue;
                }
                if !self.same(g.prime(x), g.prime(y)) {
                    return false;
                }
                for z in 0..n {
                    if !self.same(g.plus(x, z), g.plus(y, z))
                        || !self.same(g.plus(z, x), g.plus(z, y))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The least congruence identifying `a` and `b`: every merge is replayed
/// through both operations until nothing new collapses.
pub fn principal_congruence(g: &Groupoid, a: usize, b: usize) -> Partition {
    let n = g.size();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut merged: Vec<(usize, usize)> = Vec::new();
    fn unite(parent: &mut [usize], merged: &mut Vec<(usize, usize)>, x: usize, y: usize) {
        let rx = find(parent, x);
        let ry = find(parent, y);
        if rx != ry {
            parent[rx] = ry;
            merged.push((x, y));
        }
    }
    unite(&mut parent, &mut merged, a, b);
    let mut i = 0;
    while i < merged.len() {
        let (x, y) = merged[i];
        i += 1;
        unite(&mut parent, &mut merged, g.prime(x), g.prime(y));
        for z in 0..n {
            unite(&mut parent, &mut merged, g.plus(x, z), g.plus(y, z));
            unite(&mut parent, &mut merged, g.plus(z, x), g.plus(z, y));
        }
    }
    Partition::from_parent(parent)
}

fn compose_rows(p: &Partition, q: &Partition) -> Vec<u64> {
    let n = p.len();
    let mut q_class = vec![0u64; n];
    for y in 0..n {
        q_class[q.representative(y)] |= 1 << y;
    }
    let mut rows = vec![0u64; n];
    for x in 0..n {
        for y in 0..n {
            if p.same(x, y) {
                rows[x] |= q_class[q.representative(y)];
            }
        }
    }
    rows
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CongruenceCentrality {
    pub central: bool,
    pub meet_is_identity: bool,
    pub compositions_total: bool,
}

/// Centrality through congruences: collapsing `e` with each bound must
/// give a complementary pair, with trivial meet and total composition in
/// both orders.
pub fn is_central_congruence(g: &Groupoid, e: usize) -> CongruenceCentrality {
    let theta_zero = principal_congruence(g, e, g.zero());
    let theta_top = principal_congruence(g, e, g.top());
    let meet_is_identity = theta_zero.meet(&theta_top).is_identity();
    let n = g.size();
    let full = if n >= 64 { u64::MAX } else { (1u64 << n) - 1 };
    let compositions_total = compose_rows(&theta_zero, &theta_top).iter().all(|&r| r == full)
        && compose_rows(&theta_top, &theta_zero).iter().all(|&r| r == full);
    CongruenceCentrality {
        central: meet_is_identity && compositions_total,
        meet_is_identity,
        compositions_total,
    }
}
