//! Building a groupoid out of a relational system and reading a relation
//! back off a groupoid.
//!
//! The table entry for an ordered pair is decided by the first rule that
//! applies, in this order:
//!
//! 1. `(x,y) ∈ R`: then `x+y = y`.
//! 2. `(x,y) ∉ R` but `(y,x) ∈ R`: then `x+y = x`.
//! 3. `x ⊥ y` with both away from the zero: `x+y = y+x = w` for a supremal
//!    element `w` of the pair's upper cone.
//! 4. otherwise: `x+y = y+x = z` for an arbitrary cone member `z`.
//!
//! Rules 3 and 4 are the choice points; a system induces one groupoid per
//! combination of candidates. When rule 1 or 2 fires on a pair that rule 3
//! also covers, the relation wins and the pair is recorded as an overlap.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::model::{ElemSet, Groupoid, Relation, RelationalSystem};
use crate::relsys::{orthogonal, upper_cone};

/// Cap on the number of groupoids [`ChoicePolicy::EnumerateAll`] will build.
pub const MAX_ENUMERATED: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChoicePolicy {
    /// Resolve every choice point to its least-index candidate.
    MinIndex,
    /// Produce one groupoid per combination of candidates.
    EnumerateAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChoiceRule {
    /// Candidates are the whole upper cone.
    Cone,
    /// Candidates are the supremal elements of the cone.
    Supremal,
}

/// One undetermined table cell pair and its candidate values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChoicePoint {
    /// Unordered, stored with `pair.0 <= pair.1`.
    pub pair: (usize, usize),
    pub candidates: ElemSet,
    pub rule: ChoiceRule,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Induction {
    pub groupoids: Vec<Groupoid>,
    /// `choices[i][j]`: which candidate (by position within
    /// `choice_points[j].candidates`) groupoid `i` uses.
    pub choices: Vec<Vec<usize>>,
    pub choice_points: Vec<ChoicePoint>,
    /// Pairs where the relation overrode the supremal rule.
    pub overlaps: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InduceError {
    /// Rule 4 hit a pair with an empty upper cone; the system violates the
    /// top law.
    EmptyCone { x: usize, y: usize },
    /// Rule 3 hit an orthogonal pair whose cone has no supremal element;
    /// the system is not orthogonal.
    EmptySupremal { x: usize, y: usize },
    /// The product of candidate counts exceeds [`MAX_ENUMERATED`].
    TooManyChoices(u64),
}

impl fmt::Display for InduceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InduceError::EmptyCone { x, y } => {
                write!(f, "upper cone of elements {x} and {y} is empty")
            }
            InduceError::EmptySupremal { x, y } => write!(
                f,
                "orthogonal pair of elements {x} and {y} has no supremal element"
            ),
            InduceError::TooManyChoices(total) => {
                write!(f, "{total} induced groupoids exceed the cap of {MAX_ENUMERATED}")
            }
        }
    }
}

impl core::error::Error for InduceError {}

pub fn induce_groupoids(
    s: &RelationalSystem,
    policy: ChoicePolicy,
) -> Result<Induction, InduceError> {
    let n = s.size();
    let zero = s.zero();
    let mut base = vec![u8::MAX; n * n];
    let mut choice_points = Vec::new();
    let mut overlaps = Vec::new();

    for x in 0..n {
        for y in x..n {
            let rxy = s.related(x, y);
            let ryx = s.related(y, x);
            let ortho_applies =
                (orthogonal(s, x, y) || orthogonal(s, y, x)) && x != zero && y != zero;
            if rxy || ryx {
                base[x * n + y] = if rxy { y } else { x } as u8;
                base[y * n + x] = if ryx { x } else { y } as u8;
                if ortho_applies {
                    overlaps.push((x, y));
                }
            } else {
                let cone = upper_cone(s, x, y);
                let (candidates, rule) = if ortho_applies {
                    (cone.supremals, ChoiceRule::Supremal)
                } else {
                    (cone.members, ChoiceRule::Cone)
                };
                if candidates.is_empty() {
                    return Err(match rule {
                        ChoiceRule::Cone => InduceError::EmptyCone { x, y },
                        ChoiceRule::Supremal => InduceError::EmptySupremal { x, y },
                    });
                }
                choice_points.push(ChoicePoint { pair: (x, y), candidates, rule });
            }
        }
    }

    let combos = match policy {
        ChoicePolicy::MinIndex => vec![vec![0; choice_points.len()]],
        ChoicePolicy::EnumerateAll => {
            let mut total: u64 = 1;
            for cp in &choice_points {
                total = total.saturating_mul(cp.candidates.len() as u64);
            }
            if total > MAX_ENUMERATED {
                return Err(InduceError::TooManyChoices(total));
            }
            all_combinations(&choice_points)
        }
    };

    let mut groupoids = Vec::with_capacity(combos.len());
    for combo in &combos {
        let mut table = base.clone();
        for (cp, &pos) in choice_points.iter().zip(combo) {
            let w = cp.candidates.iter().nth(pos).unwrap() as u8;
            let (x, y) = cp.pair;
            table[x * n + y] = w;
            table[y * n + x] = w;
        }
        let g = Groupoid::new(s.carrier().clone(), s.involution().clone(), table)
            .expect("carrier and involution already passed the groupoid's structural checks");
        groupoids.push(g);
    }

    Ok(Induction { groupoids, choices: combos, choice_points, overlaps })
}

fn all_combinations(cps: &[ChoicePoint]) -> Vec<Vec<usize>> {
    let mut combos = Vec::new();
    let mut current = vec![0usize; cps.len()];
    loop {
        combos.push(current.clone());
        let mut at = cps.len();
        loop {
            if at == 0 {
                return combos;
            }
            at -= 1;
            current[at] += 1;
            if current[at] < cps[at].candidates.len() {
                break;
            }
            current[at] = 0;
        }
    }
}

/// The relation a groupoid carries: `(a,b)` holds iff `a+b = b`. Carrier
/// and involution are reused as they are.
pub fn induced_relation(g: &Groupoid) -> RelationalSystem {
    let n = g.size();
    let mut r = Relation::empty(n);
    for x in 0..n {
        for y in 0..n {
            if g.plus(x, y) == y {
                r.insert(x, y);
            }
        }
    }
    RelationalSystem::new(g.carrier().clone(), g.involution().clone(), r)
        .expect("carrier and involution already passed the system's structural checks")
}
