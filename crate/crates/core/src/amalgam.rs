//! Strong amalgamation of orthogroupoids over a shared subalgebra.
//!
//! A V-formation is a pair of embeddings i: A → B1 and j: A → B2. The
//! amalgam glues B1 and B2 along the two copies of A: its carrier is B1
//! followed by the elements of B2 outside j(A), sums inside either part
//! are taken there, and every mixed sum is the top. The result embeds
//! both B's so that they overlap in exactly the shared copy of A, which
//! is what [`verify_strong`] certifies.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::axioms::check_orthogroupoid;
use crate::model::{Carrier, Groupoid, Involution, MAX_ELEMENTS};
use crate::report::{CheckOutcome, CheckReport, Witness};

#[derive(Debug, Clone)]
pub struct VFormation {
    pub a: Groupoid,
    pub b1: Groupoid,
    pub b2: Groupoid,
    /// Element map of the embedding A → B1.
    pub i: Vec<usize>,
    /// Element map of the embedding A → B2.
    pub j: Vec<usize>,
}

#[derive(Debug, Clone)]
pub enum AmalgamError {
    InvalidVFormation(CheckReport),
    TooLarge { size: usize },
    VerificationFailed { check: &'static str },
}

impl fmt::Display for AmalgamError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AmalgamError::InvalidVFormation(report) => {
                let name = report
                    .checks
                    .iter()
                    .find(|c| !c.passed)
                    .map(|c| c.name)
                    .unwrap_or("unknown");
                write!(f, "invalid v-formation: {name} fails")
            }
            AmalgamError::TooLarge { size } => {
                write!(f, "amalgam would have {size} elements, limit is {MAX_ELEMENTS}")
            }
            AmalgamError::VerificationFailed { check } => {
                write!(f, "amalgam failed verification: {check}")
            }
        }
    }
}

impl core::error::Error for AmalgamError {}

/// The glued algebra with the two canonical embeddings h: B1 → D and
/// k: B2 → D.
#[derive(Debug, Clone)]
pub struct Amalgam {
    pub d: Groupoid,
    pub h: Vec<usize>,
    pub k: Vec<usize>,
}

/// Injectivity plus preservation of top, complement, and sum. Witnesses
/// index the source carrier.
pub fn is_embedding(from: &Groupoid, to: &Groupoid, map: &[usize]) -> CheckOutcome {
    let n = from.size();
    if map.len() != n || map.iter().any(|&v| v >= to.size()) {
        return CheckOutcome::fail(Witness::new(&[("x", from.top())]));
    }
    for x in 0..n {
        for y in x + 1..n {
            if map[x] == map[y] {
                return CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
            }
        }
    }
    if map[from.top()] != to.top() {
        return CheckOutcome::fail(Witness::new(&[("x", from.top())]));
    }
    for x in 0..n {
        if map[from.prime(x)] != to.prime(map[x]) {
            return CheckOutcome::fail(Witness::new(&[("x", x)]));
        }
        for y in 0..n {
            if map[from.plus(x, y)] != to.plus(map[x], map[y]) {
                return CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
            }
        }
    }
    CheckOutcome::pass()
}

fn structure_outcome(g: &Groupoid) -> CheckOutcome {
    let mut report = g.validate();
    report.extend(check_orthogroupoid(g).to_report());
    if report.passed() {
        return CheckOutcome::pass();
    }
    let witness = report
        .checks
        .iter()
        .find(|c| !c.passed)
        .and_then(|c| c.witnesses.first())
        .cloned()
        .unwrap_or_else(|| Witness::new(&[("x", g.top())]));
    CheckOutcome::fail(witness)
}

/// Three orthogroupoid checks and two embedding checks. The embedding
/// witnesses index A's carrier.
pub fn validate_vformation(vf: &VFormation) -> CheckReport {
    let mut report = CheckReport::new();
    report.push(structure_outcome(&vf.a).named("a_is_orthogroupoid"));
    report.push(structure_outcome(&vf.b1).named("b1_is_orthogroupoid"));
    report.push(structure_outcome(&vf.b2).named("b2_is_orthogroupoid"));
    report.push(is_embedding(&vf.a, &vf.b1, &vf.i).named("embedding_i"));
    report.push(is_embedding(&vf.a, &vf.b2, &vf.j).named("embedding_j"));
    report
}

fn fresh_name(base: &str, taken: &[String]) -> String {
    if !taken.iter().any(|t| t == base) {
        return String::from(base);
    }
    let mut counter = 2;
    loop {
        let candidate = format!("{base}_{counter}");
        if !taken.iter().any(|t| t == &candidate) {
            return candidate;
        }
        counter += 1;
    }
}

pub fn amalgamate(vf: &VFormation) -> Result<Amalgam, AmalgamError> {
    let report = validate_vformation(vf);
    if !report.passed() {
        return Err(AmalgamError::InvalidVFormation(report));
    }
    let n1 = vf.b1.size();
    let n2 = vf.b2.size();
    let size = n1 + n2 - vf.a.size();
    if size > MAX_ELEMENTS {
        return Err(AmalgamError::TooLarge { size });
    }

    // j(A) folds into the B1 part through i; the rest of B2 comes after.
    let mut shared = vec![None; n2];
    for (a, &x2) in vf.j.iter().enumerate() {
        shared[x2] = Some(vf.i[a]);
    }
    let h: Vec<usize> = (0..n1).collect();
    let mut names: Vec<String> = (0..n1).map(|x| String::from(vf.b1.name(x))).collect();
    let mut k = vec![0usize; n2];
    for x2 in 0..n2 {
        match shared[x2] {
            Some(x1) => k[x2] = x1,
            None => {
                k[x2] = names.len();
                let name = fresh_name(vf.b2.name(x2), &names);
                names.push(name);
            }
        }
    }

    let mut from_k = vec![None; size];
    for (x2, &d) in k.iter().enumerate() {
        from_k[d] = Some(x2);
    }
    let top = vf.b1.top();
    let mut image = vec![0usize; size];
    let mut table = vec![0u8; size * size];
    for x in 0..size {
        image[x] = if x < n1 {
            vf.b1.prime(x)
        } else {
            k[vf.b2.prime(from_k[x].unwrap())]
        };
        for y in 0..size {
            let sum = if x < n1 && y < n1 {
                vf.b1.plus(x, y)
            } else if let (Some(x2), Some(y2)) = (from_k[x], from_k[y]) {
                k[vf.b2.plus(x2, y2)]
            } else {
                top
            };
            table[x * size + y] = sum as u8;
        }
    }
    let carrier = Carrier::with_top(names, top)
        .map_err(|_| AmalgamError::VerificationFailed { check: "carrier" })?;
    let d = Groupoid::new(carrier, Involution::new(image).unwrap(), table)
        .map_err(|_| AmalgamError::VerificationFailed { check: "carrier" })?;
    if !d.validate().passed() || !check_orthogroupoid(&d).passes() {
        return Err(AmalgamError::VerificationFailed { check: "orthogroupoid" });
    }
    Ok(Amalgam { d, h, k })
}

/// Strong amalgamation: both canonical maps embed, the square commutes,
/// and the images of h and k intersect in exactly the image of the
/// shared subalgebra. The first two checks witness into B1 and B2, the
/// last two into A and D respectively.
pub fn verify_strong(vf: &VFormation, am: &Amalgam) -> CheckReport {
    let mut report = CheckReport::new();
    report.push(is_embedding(&vf.b1, &am.d, &am.h).named("h_embedding"));
    report.push(is_embedding(&vf.b2, &am.d, &am.k).named("k_embedding"));

    let mut commutes = CheckOutcome::pass();
    for a in 0..vf.a.size() {
        if am.k[vf.j[a]] != am.h[vf.i[a]] {
            commutes = CheckOutcome::fail(Witness::new(&[("a", a)]));
            break;
        }
    }
    report.push(commutes.named("square_commutes"));

    let mut h_img = 0u64;
    let mut k_img = 0u64;
    let mut shared_img = 0u64;
    for &d in &am.h {
        h_img |= 1 << d;
    }
    for &d in &am.k {
        k_img |= 1 << d;
    }
    for a in 0..vf.a.size() {
        shared_img |= 1 << am.h[vf.i[a]];
    }
    let diff = (h_img & k_img) ^ shared_img;
    let intersection = if diff == 0 {
        CheckOutcome::pass()
    } else {
        CheckOutcome::fail(Witness::new(&[("x", diff.trailing_zeros() as usize)]))
    };
    report.push(intersection.named("intersection_is_shared_image"));
    report
}

fn close(g: &Groupoid, mut set: u64) -> u64 {
    loop {
        let mut grown = set;
        for x in 0..g.size() {
            if set >> x & 1 == 0 {
                continue;
            }
            grown |= 1 << g.prime(x);
            for y in 0..g.size() {
                if set >> y & 1 == 1 {
                    grown |= 1 << g.plus(x, y);
                }
            }
        }
        if grown == set {
            return set;
        }
        set = grown;
    }
}

/// Every subalgebra, as ascending index lists in ascending mask order.
/// Walks the subalgebra lattice upward from the closure of {1}, so the
/// cost scales with the number of subalgebras rather than 2^n.
pub fn subalgebras(g: &Groupoid) -> Vec<Vec<usize>> {
    let mut done: BTreeSet<u64> = BTreeSet::new();
    let mut queue = vec![close(g, 1 << g.top())];
    while let Some(set) = queue.pop() {
        if !done.insert(set) {
            continue;
        }
        for x in 0..g.size() {
            if set >> x & 1 == 0 {
                queue.push(close(g, set | 1 << x));
            }
        }
    }
    done.into_iter()
        .map(|set| (0..g.size()).filter(|&x| set >> x & 1 == 1).collect())
        .collect()
}

/// Every embedding of `from` into `to`, each as an element map, in
/// lexicographic order.
pub fn embeddings(from: &Groupoid, to: &Groupoid) -> Vec<Vec<usize>> {
    let n = from.size();
    let m = to.size();
    if n > m {
        return Vec::new();
    }
    let mut map = vec![0usize; n];
    let mut out = Vec::new();
    fn rec(
        from: &Groupoid,
        to: &Groupoid,
        map: &mut [usize],
        used: u64,
        at: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if at == map.len() {
            if is_embedding(from, to, map).passed {
                out.push(map.to_vec());
            }
            return;
        }
        for target in 0..to.size() {
            if used >> target & 1 == 1 {
                continue;
            }
            if at == from.top() && target != to.top() {
                continue;
            }
            map[at] = target;
            rec(from, to, map, used | 1 << target, at + 1, out);
        }
    }
    rec(from, to, &mut map, 0, 0, &mut out);
    out
}
