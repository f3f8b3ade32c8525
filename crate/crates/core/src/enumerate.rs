//! Exhaustive enumeration of orthogroupoids and orthogonal relational
//! systems on a fixed carrier.
//!
//! Models live on the carrier 0, 1, a, b, ... with the involution sending
//! 1 to 0. Groupoid search fills table cells depth first in row-major
//! order; before search starts, the cells every model agrees on are set
//! (`0+x`, `x+1`, `1+x`, `x+x`, `x+x'`, and `x+0` when 0-commutativity is
//! requested), and each assignment propagates through the absorption laws
//! `x+(x+y) = x+y = y+(x+y)` and `(x'+y)'+x = x`. The three-variable
//! identity is scanned over fully-assigned triples at every node. System
//! search branches on undetermined relation cells, pairing each cell with
//! its involution-compatible partner and pruning when a cone of the form
//! `U(x,x')` picks up a member besides the top.
//!
//! The search only prunes with consequences of the defining conditions, so
//! every leaf that survives the final full check is a model and no model
//! is skipped; the tests compare against a generate-and-filter oracle.
//!
//! Involutions with a fixpoint cannot carry a nontrivial orthogroupoid, so
//! groupoid search ranges over fixpoint-free involutions only. System
//! search keeps fixpoints: nothing rules them out.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::axioms::{check_orthogroupoid, is_zero_commutative};
use crate::model::{Carrier, Groupoid, Involution, Relation, RelationalSystem};
use crate::relsys::{check_orthogonal_system, relation_flags};

/// Full table enumeration is practical up to this size; larger requests
/// still run but may take very long.
pub const SOFT_SIZE_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dedup {
    /// Every model on the fixed carrier.
    Labelled,
    /// One representative per isomorphism class, first found kept.
    UpToIso,
}

#[derive(Debug, Clone)]
pub struct SearchSpec {
    pub size: usize,
    /// Groupoid search only: additionally require `x+0 = 0+x`.
    pub zero_commutative: bool,
    /// System search only: require a reflexive relation.
    pub reflexive: bool,
    /// System search only: require a transitive relation.
    pub transitive: bool,
    pub dedup: Dedup,
}

impl SearchSpec {
    pub fn new(size: usize) -> Self {
        SearchSpec {
            size,
            zero_commutative: false,
            reflexive: false,
            transitive: false,
            dedup: Dedup::Labelled,
        }
    }
}

/// Lexicographically least serialization of a structure over all
/// relabelings that put the top last. Equal forms mean isomorphic
/// structures, even when the inputs index their tops differently.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(pub Vec<u8>);

fn carrier_names(n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["1".to_string()];
    }
    let mut names = vec!["0".to_string(), "1".to_string()];
    for i in 2..n {
        let name = match i - 2 {
            d if d < 26 => char::from(b'a' + d as u8).to_string(),
            d => {
                let mut s = String::from("x");
                s.push_str(&(d.to_string()));
                s
            }
        };
        names.push(name);
    }
    names
}

fn enumeration_carrier(n: usize) -> Carrier {
    Carrier::new(carrier_names(n)).unwrap()
}

/// Involutive images on 0..n extending 1 ↦ 0, with or without fixpoints
/// among the remaining elements. For n = 1 the identity is the only map.
fn involutions(n: usize, fixpoint_free: bool) -> Vec<Involution> {
    if n == 1 {
        return vec![Involution::new(vec![0]).unwrap()];
    }
    let mut image = vec![usize::MAX; n];
    image[0] = 1;
    image[1] = 0;
    let mut out = Vec::new();
    fn rec(image: &mut [usize], at: usize, fixpoint_free: bool, out: &mut Vec<Involution>) {
        let n = image.len();
        if at == n {
            out.push(Involution::new(image.to_vec()).unwrap());
            return;
        }
        if image[at] != usize::MAX {
            rec(image, at + 1, fixpoint_free, out);
            return;
        }
        let start = if fixpoint_free { at + 1 } else { at };
        for partner in start..n {
            if image[partner] == usize::MAX || partner == at {
                image[at] = partner;
                image[partner] = at;
                rec(image, at + 1, fixpoint_free, out);
                image[at] = usize::MAX;
                if partner != at {
                    image[partner] = usize::MAX;
                }
            }
        }
    }
    rec(&mut image, 2, fixpoint_free, &mut out);
    out
}

const UNSET: u8 = u8::MAX;

struct TableSearch<'a> {
    n: usize,
    inv: &'a Involution,
    table: Vec<u8>,
    trail: Vec<usize>,
}

impl<'a> TableSearch<'a> {
    fn new(n: usize, inv: &'a Involution) -> Self {
        TableSearch { n, inv, table: vec![UNSET; n * n], trail: Vec::new() }
    }

    /// Sets a cell and everything the absorption laws force with it.
    /// False means the value contradicts an existing cell.
    fn assign(&mut self, x: usize, y: usize, v: usize) -> bool {
        let cell = x * self.n + y;
        if self.table[cell] != UNSET {
            return self.table[cell] as usize == v;
        }
        self.table[cell] = v as u8;
        self.trail.push(cell);
        // x+(x+y) = x+y and y+(x+y) = x+y.
        if !self.assign(x, v, v) || !self.assign(y, v, v) {
            return false;
        }
        // (u'+y)'+u = u with u = x': here x'+y = v, so v'+x' = x'.
        let xp = self.inv.of(x);
        self.assign(self.inv.of(v), xp, xp)
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let cell = self.trail.pop().unwrap();
            self.table[cell] = UNSET;
        }
    }

    /// The three-variable identity over triples whose five cells are all
    /// assigned.
    fn partial_identity_ok(&self) -> bool {
        let n = self.n;
        let t = &self.table;
        for z in 0..n {
            let zp = self.inv.of(z) as u8;
            for y in 0..n {
                let zy = t[z * n + y];
                if zy == UNSET {
                    continue;
                }
                let zyp = self.inv.of(zy as usize);
                for x in 0..n {
                    let zx = t[z * n + x];
                    if zx == UNSET {
                        continue;
                    }
                    let inner = t[zyp * n + zx as usize];
                    if inner == UNSET {
                        continue;
                    }
                    let left = t[self.inv.of(inner as usize) * n + zyp];
                    if left == UNSET {
                        continue;
                    }
                    let lhs = t[left as usize * n + zp as usize];
                    if lhs != UNSET && lhs != zp {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn next_unset(&self, from: usize) -> Option<usize> {
        (from..self.n * self.n).find(|&c| self.table[c] == UNSET)
    }

    fn dfs(&mut self, from: usize, leaf: &mut impl FnMut(&[u8])) {
        match self.next_unset(from) {
            None => leaf(&self.table),
            Some(cell) => {
                let (x, y) = (cell / self.n, cell % self.n);
                for v in 0..self.n {
                    let mark = self.trail.len();
                    if self.assign(x, y, v) && self.partial_identity_ok() {
                        self.dfs(cell + 1, leaf);
                    }
                    self.undo(mark);
                }
            }
        }
    }
}

fn force_groupoid_cells(search: &mut TableSearch, zero_commutative: bool) -> bool {
    let n = search.n;
    let (zero, top) = if n == 1 { (0, 0) } else { (0, 1) };
    for x in 0..n {
        let ok = search.assign(zero, x, x)
            && search.assign(x, top, top)
            && search.assign(top, x, top)
            && search.assign(x, x, x)
            && search.assign(x, search.inv.of(x), top)
            && (!zero_commutative || search.assign(x, zero, x));
        if !ok {
            return false;
        }
    }
    true
}

fn groupoid_leaf_filter(spec: &SearchSpec, g: &Groupoid) -> bool {
    check_orthogroupoid(g).passes()
        && (!spec.zero_commutative || is_zero_commutative(g).passed)
}

fn run_groupoid_search(
    spec: &SearchSpec,
    inv: &Involution,
    first_cell_value: Option<usize>,
    out: &mut impl FnMut(Groupoid),
) {
    let n = spec.size;
    let carrier = enumeration_carrier(n);
    let mut search = TableSearch::new(n, inv);
    if !force_groupoid_cells(&mut search, spec.zero_commutative) {
        return;
    }
    let start = match (first_cell_value, search.next_unset(0)) {
        (None, _) => 0,
        (Some(v), None) => {
            if v != 0 {
                return;
            }
            0
        }
        (Some(v), Some(cell)) => {
            let (x, y) = (cell / n, cell % n);
            if !(search.assign(x, y, v) && search.partial_identity_ok()) {
                return;
            }
            cell + 1
        }
    };
    let mut emit = |table: &[u8]| {
        let g = Groupoid::new(carrier.clone(), inv.clone(), table.to_vec()).unwrap();
        if groupoid_leaf_filter(spec, &g) {
            out(g);
        }
    };
    search.dfs(start, &mut emit);
}

/// Calls `f` for every model, in deterministic order. Honors
/// `spec.dedup`: under [`Dedup::UpToIso`] only the first representative of
/// each isomorphism class is passed on.
pub fn for_each_orthogroupoid(spec: &SearchSpec, mut f: impl FnMut(&Groupoid)) {
    let mut seen = alloc::collections::BTreeSet::new();
    for inv in involutions(spec.size, true) {
        run_groupoid_search(spec, &inv, None, &mut |g| {
            if matches!(spec.dedup, Dedup::UpToIso) && !seen.insert(canonical_form(&g)) {
                return;
            }
            f(&g);
        });
    }
}

pub fn enumerate_orthogroupoids(spec: &SearchSpec) -> Vec<Groupoid> {
    let mut out = Vec::new();
    for_each_orthogroupoid(spec, |g| out.push(g.clone()));
    out
}

/// Number of independent slices the groupoid search splits into; slices
/// can run on separate threads and concatenate in index order to
/// reproduce the sequential labelled stream.
pub fn groupoid_partition_count(spec: &SearchSpec) -> usize {
    involutions(spec.size, true).len() * spec.size.max(1)
}

/// Labelled models of one slice: a fixed involution and a fixed value of
/// the first free table cell. Dedup is up to the caller after merging.
pub fn enumerate_orthogroupoids_partition(spec: &SearchSpec, partition: usize) -> Vec<Groupoid> {
    let n = spec.size.max(1);
    let invs = involutions(spec.size, true);
    let (inv_idx, value) = (partition / n, partition % n);
    let mut out = Vec::new();
    if let Some(inv) = invs.get(inv_idx) {
        run_groupoid_search(spec, inv, Some(value), &mut |g| out.push(g));
    }
    out
}

struct RelSearch<'a> {
    top: usize,
    inv: &'a Involution,
    value: Vec<u64>,
    decided: Vec<u64>,
    trail: Vec<(usize, usize)>,
}

impl<'a> RelSearch<'a> {
    fn new(n: usize, top: usize, inv: &'a Involution) -> Self {
        RelSearch {
            top,
            inv,
            value: vec![0; n],
            decided: vec![0; n],
            trail: Vec::new(),
        }
    }

    fn get(&self, x: usize, y: usize) -> Option<bool> {
        if self.decided[x] >> y & 1 == 1 {
            Some(self.value[x] >> y & 1 == 1)
        } else {
            None
        }
    }

    /// Sets a cell and its involution partner. False on contradiction, or
    /// when a true cell puts a second member into a cone `U(x, x')`.
    fn assign(&mut self, x: usize, y: usize, b: bool) -> bool {
        if let Some(current) = self.get(x, y) {
            return current == b;
        }
        self.decided[x] |= 1 << y;
        if b {
            self.value[x] |= 1 << y;
        }
        self.trail.push((x, y));
        if b && y != self.top && self.get(self.inv.of(x), y) == Some(true) {
            return false;
        }
        self.assign(self.inv.of(y), self.inv.of(x), b)
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let (x, y) = self.trail.pop().unwrap();
            self.decided[x] &= !(1 << y);
            self.value[x] &= !(1 << y);
        }
    }

    fn dfs(&mut self, free: &[(usize, usize)], at: usize, leaf: &mut impl FnMut(&[u64])) {
        let next = (at..free.len()).find(|&i| {
            let (x, y) = free[i];
            self.get(x, y).is_none()
        });
        match next {
            None => leaf(&self.value),
            Some(i) => {
                let (x, y) = free[i];
                for b in [false, true] {
                    let mark = self.trail.len();
                    if self.assign(x, y, b) {
                        self.dfs(free, i + 1, leaf);
                    }
                    self.undo(mark);
                }
            }
        }
    }
}

fn system_leaf_filter(spec: &SearchSpec, s: &RelationalSystem) -> bool {
    s.validate().passed()
        && check_orthogonal_system(s).passed()
        && (!spec.transitive || relation_flags(s).transitive.passed)
}

fn run_system_search(
    spec: &SearchSpec,
    inv: &Involution,
    first_cell_value: Option<bool>,
    out: &mut impl FnMut(RelationalSystem),
) {
    let n = spec.size;
    let carrier = enumeration_carrier(n);
    let (zero, top) = if n == 1 { (0, 0) } else { (0, 1) };
    let mut search = RelSearch::new(n, top, inv);
    for x in 0..n {
        let ok = search.assign(zero, x, true)
            && search.assign(x, top, true)
            && (x == zero || search.assign(x, zero, false))
            && (x == top || search.assign(top, x, false))
            && (!spec.reflexive || search.assign(x, x, true));
        if !ok {
            return;
        }
    }
    let mut free = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if search.get(x, y).is_none() {
                free.push((x, y));
            }
        }
    }
    let start = match (first_cell_value, free.first()) {
        (None, _) => 0,
        (Some(v), None) => {
            if v {
                return;
            }
            0
        }
        (Some(v), Some(&(x, y))) => {
            if !search.assign(x, y, v) {
                return;
            }
            1
        }
    };
    let mut emit = |rows: &[u64]| {
        let mut rel = Relation::empty(n);
        for x in 0..n {
            for y in 0..n {
                if rows[x] >> y & 1 == 1 {
                    rel.insert(x, y);
                }
            }
        }
        let s = RelationalSystem::new(carrier.clone(), inv.clone(), rel).unwrap();
        if system_leaf_filter(spec, &s) {
            out(s);
        }
    };
    search.dfs(&free, start, &mut emit);
}

pub fn for_each_orthosystem(spec: &SearchSpec, mut f: impl FnMut(&RelationalSystem)) {
    let mut seen = alloc::collections::BTreeSet::new();
    for inv in involutions(spec.size, false) {
        run_system_search(spec, &inv, None, &mut |s| {
            if matches!(spec.dedup, Dedup::UpToIso) && !seen.insert(canonical_form_system(&s)) {
                return;
            }
            f(&s);
        });
    }
}

pub fn enumerate_orthosystems(spec: &SearchSpec) -> Vec<RelationalSystem> {
    let mut out = Vec::new();
    for_each_orthosystem(spec, |s| out.push(s.clone()));
    out
}

pub fn system_partition_count(spec: &SearchSpec) -> usize {
    involutions(spec.size, false).len() * 2
}

pub fn enumerate_orthosystems_partition(
    spec: &SearchSpec,
    partition: usize,
) -> Vec<RelationalSystem> {
    let invs = involutions(spec.size, false);
    let (inv_idx, value) = (partition / 2, partition % 2 == 1);
    let mut out = Vec::new();
    if let Some(inv) = invs.get(inv_idx) {
        run_system_search(spec, inv, Some(value), &mut |s| out.push(s));
    }
    out
}

/// Every relabeling that sends the top to index n-1, so forms of
/// structures with the top at different indices stay comparable.
fn for_each_top_normalizing_perm(n: usize, top: usize, f: &mut impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = vec![0; n];
    perm[top] = n - 1;
    let free: Vec<usize> = (0..n).filter(|&i| i != top).collect();
    fn rec(
        perm: &mut [usize],
        free: &[usize],
        slots: &mut Vec<usize>,
        at: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        if at == free.len() {
            f(perm);
            return;
        }
        for i in 0..slots.len() {
            let slot = slots.swap_remove(i);
            perm[free[at]] = slot;
            rec(perm, free, slots, at + 1, f);
            slots.push(slot);
            let last = slots.len() - 1;
            slots.swap(i, last);
        }
    }
    let mut slots: Vec<usize> = (0..n - 1).collect();
    rec(&mut perm, &free, &mut slots, 0, f);
}

pub fn canonical_form(g: &Groupoid) -> CanonicalForm {
    let n = g.size();
    let mut best: Option<Vec<u8>> = None;
    for_each_top_normalizing_perm(n, g.top(), &mut |p| {
        let mut bytes = vec![0u8; n + n * n];
        for x in 0..n {
            bytes[p[x]] = p[g.prime(x)] as u8;
            for y in 0..n {
                bytes[n + p[x] * n + p[y]] = p[g.plus(x, y)] as u8;
            }
        }
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
    });
    CanonicalForm(best.unwrap())
}

pub fn canonical_form_system(s: &RelationalSystem) -> CanonicalForm {
    let n = s.size();
    let mut best: Option<Vec<u8>> = None;
    for_each_top_normalizing_perm(n, s.top(), &mut |p| {
        let mut bytes = vec![0u8; n + n * n];
        for x in 0..n {
            bytes[p[x]] = p[s.prime(x)] as u8;
            for y in 0..n {
                bytes[n + p[x] * n + p[y]] = s.related(x, y) as u8;
            }
        }
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
    });
    CanonicalForm(best.unwrap())
}
