//! Carriers, involutions, relations, and the two structure kinds.
//!
//! Elements are positional: an element is its index into the carrier's name
//! list, and names are only surface syntax. The carrier designates a top
//! element; by convention the top is named `1`, and the name `0`, when it
//! appears, must denote the involution image of the top. Constructors
//! enforce shape (lengths, index ranges, naming); the laws a structure is
//! supposed to satisfy are reported by [`RelationalSystem::validate`] and
//! [`Groupoid::validate`] rather than assumed.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::report::{CheckOutcome, CheckReport, Witness};

/// Carrier size cap. A relation row over at most 64 elements is one `u64`.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModelError {
    EmptyCarrier,
    TooLarge(usize),
    DuplicateName(String),
    MissingTop,
    /// An element is named `0` but is not the involution image of the top.
    ZeroNameMismatch,
    LengthMismatch { what: &'static str, expected: usize, got: usize },
    IndexOutOfRange { what: &'static str, index: usize },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::EmptyCarrier => write!(f, "carrier must be non-empty"),
            ModelError::TooLarge(n) => {
                write!(f, "carrier has {n} elements, maximum is {MAX_ELEMENTS}")
            }
            ModelError::DuplicateName(name) => write!(f, "duplicate element name {name:?}"),
            ModelError::MissingTop => write!(f, "no element named \"1\""),
            ModelError::ZeroNameMismatch => {
                write!(f, "element named \"0\" is not the involution image of the top")
            }
            ModelError::LengthMismatch { what, expected, got } => {
                write!(f, "{what} has {got} entries, expected {expected}")
            }
            ModelError::IndexOutOfRange { what, index } => {
                write!(f, "{what} refers to element index {index}, out of range")
            }
        }
    }
}

impl core::error::Error for ModelError {}

/// Subset of a carrier, packed into one word.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElemSet(pub u64);

impl ElemSet {
    pub const EMPTY: ElemSet = ElemSet(0);

    pub fn singleton(i: usize) -> Self {
        ElemSet(1u64 << i)
    }

    pub fn full(n: usize) -> Self {
        if n >= 64 { ElemSet(u64::MAX) } else { ElemSet((1u64 << n) - 1) }
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 { None } else { Some(self.0.trailing_zeros() as usize) }
    }

    pub fn without(self, other: ElemSet) -> ElemSet {
        ElemSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: ElemSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> SetIter {
        SetIter(self.0)
    }
}

impl core::ops::BitAnd for ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 & rhs.0)
    }
}

impl core::ops::BitOr for ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: ElemSet) -> ElemSet {
        ElemSet(self.0 | rhs.0)
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter(u64);

impl Iterator for SetIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

impl IntoIterator for ElemSet {
    type Item = usize;
    type IntoIter = SetIter;
    fn into_iter(self) -> SetIter {
        self.iter()
    }
}

/// Binary relation on `n` elements, one row mask per left operand.
#[derive(Clone, PartialEq, Eq)]
pub struct Relation {
    n: usize,
    rows: Vec<u64>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        debug_assert!(n <= MAX_ELEMENTS);
        Relation { n, rows: alloc::vec![0; n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.rows[x] >> y & 1 == 1
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        debug_assert!(x < self.n && y < self.n);
        self.rows[x] |= 1u64 << y;
    }

    pub fn remove(&mut self, x: usize, y: usize) {
        self.rows[x] &= !(1u64 << y);
    }

    /// Successor set `{y : (x, y) ∈ R}`.
    pub fn row(&self, x: usize) -> ElemSet {
        ElemSet(self.rows[x])
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |x| self.row(x).iter().map(move |y| (x, y)))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// Named elements with a designated top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Carrier {
    names: Vec<String>,
    top: usize,
}

impl Carrier {
    /// The top is located by its name `1`.
    pub fn new(names: Vec<String>) -> Result<Self, ModelError> {
        let top = names
            .iter()
            .position(|n| n == "1")
            .ok_or(ModelError::MissingTop)?;
        Carrier::with_top(names, top)
    }

    /// Designates `top` by position, renaming it to `1` if needed. Used for
    /// derived algebras whose top is an arbitrary element of the original.
    pub fn with_top(mut names: Vec<String>, top: usize) -> Result<Self, ModelError> {
        if names.is_empty() {
            return Err(ModelError::EmptyCarrier);
        }
        if names.len() > MAX_ELEMENTS {
            return Err(ModelError::TooLarge(names.len()));
        }
        if top >= names.len() {
            return Err(ModelError::IndexOutOfRange { what: "top", index: top });
        }
        if names[top] != "1" {
            if names.iter().any(|n| n == "1") {
                return Err(ModelError::DuplicateName("1".to_string()));
            }
            names[top] = "1".to_string();
        }
        for (i, a) in names.iter().enumerate() {
            if names[..i].iter().any(|b| b == a) {
                return Err(ModelError::DuplicateName(a.clone()));
            }
        }
        Ok(Carrier { names, top })
    }

    pub fn from_names(names: &[&str]) -> Result<Self, ModelError> {
        Carrier::new(names.iter().map(|s| s.to_string()).collect())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// Unary map on the carrier, stored as an image table. Whether it actually
/// is an involution (`x'' = x`) is a validation question, not a shape one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    image: Vec<u8>,
}

impl Involution {
    pub fn new(image: Vec<usize>) -> Result<Self, ModelError> {
        let n = image.len();
        let mut packed = Vec::with_capacity(n);
        for (i, &img) in image.iter().enumerate() {
            if img >= n {
                return Err(ModelError::IndexOutOfRange { what: "involution", index: i });
            }
            packed.push(img as u8);
        }
        Ok(Involution { image: packed })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn of(&self, x: usize) -> usize {
        self.image[x] as usize
    }

    /// First `x` with `x'' ≠ x`, if any.
    pub fn involutive_failure(&self) -> Option<usize> {
        (0..self.len()).find(|&x| self.of(self.of(x)) != x)
    }

    /// First pair `x < y` with `x' = y'`, if any.
    pub fn bijective_failure(&self) -> Option<(usize, usize)> {
        for y in 0..self.len() {
            for x in 0..y {
                if self.of(x) == self.of(y) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

fn check_zero_name(carrier: &Carrier, inv: &Involution) -> Result<(), ModelError> {
    if let Some(z) = carrier.index_of("0") {
        if z != inv.of(carrier.top()) {
            return Err(ModelError::ZeroNameMismatch);
        }
    }
    Ok(())
}

/// Carrier with involution, top, and a binary relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationalSystem {
    carrier: Carrier,
    inv: Involution,
    relation: Relation,
}

impl RelationalSystem {
    pub fn new(
        carrier: Carrier,
        inv: Involution,
        relation: Relation,
    ) -> Result<Self, ModelError> {
        let n = carrier.len();
        if inv.len() != n {
            return Err(ModelError::LengthMismatch {
                what: "involution",
                expected: n,
                got: inv.len(),
            });
        }
        if relation.n() != n {
            return Err(ModelError::LengthMismatch {
                what: "relation",
                expected: n,
                got: relation.n(),
            });
        }
        check_zero_name(&carrier, &inv)?;
        Ok(RelationalSystem { carrier, inv, relation })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn involution(&self) -> &Involution {
        &self.inv
    }

    pub fn relation(&self) -> &Relation {
        &self.relation
    }

    pub fn size(&self) -> usize {
        self.carrier.len()
    }

    pub fn top(&self) -> usize {
        self.carrier.top()
    }

    /// The zero is defined as the involution image of the top.
    pub fn zero(&self) -> usize {
        self.inv.of(self.top())
    }

    pub fn prime(&self, x: usize) -> usize {
        self.inv.of(x)
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.relation.contains(x, y)
    }

    pub fn name(&self, i: usize) -> &str {
        self.carrier.name(i)
    }

    /// Reports the involution laws plus the two relational laws a system
    /// with top and involution is expected to satisfy: every element sits
    /// below the top, and the involution reverses the relation.
    pub fn validate(&self) -> CheckReport {
        let n = self.size();
        let mut report = CheckReport::new();
        report.push_outcome("involution_law", involution_law(&self.inv));
        report.push_outcome("involution_bijective", involution_bijective(&self.inv));

        let top = self.top();
        let top_law = match (0..n).find(|&x| !self.related(x, top)) {
            None => CheckOutcome::pass(),
            Some(x) => CheckOutcome::fail(Witness::new(&[("x", x)])),
        };
        report.push_outcome("top_law", top_law);

        let mut compat = CheckOutcome::pass();
        'out: for x in 0..n {
            for y in self.relation.row(x).iter() {
                if !self.related(self.prime(y), self.prime(x)) {
                    compat = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
                    break 'out;
                }
            }
        }
        report.push_outcome("compat_law", compat);
        report
    }
}

fn involution_law(inv: &Involution) -> CheckOutcome {
    match inv.involutive_failure() {
        None => CheckOutcome::pass(),
        Some(x) => CheckOutcome::fail(Witness::new(&[("x", x)])),
    }
}

fn involution_bijective(inv: &Involution) -> CheckOutcome {
    match inv.bijective_failure() {
        None => CheckOutcome::pass(),
        Some((x, y)) => CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)])),
    }
}

/// Carrier with involution, top, and a total binary operation `+`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Groupoid {
    carrier: Carrier,
    inv: Involution,
    table: Vec<u8>,
    n: usize,
}

impl Groupoid {
    /// `table` is row-major: entry `x * n + y` holds `x + y`.
    pub fn new(carrier: Carrier, inv: Involution, table: Vec<u8>) -> Result<Self, ModelError> {
        let n = carrier.len();
        if inv.len() != n {
            return Err(ModelError::LengthMismatch {
                what: "involution",
                expected: n,
                got: inv.len(),
            });
        }
        if table.len() != n * n {
            return Err(ModelError::LengthMismatch {
                what: "table",
                expected: n * n,
                got: table.len(),
            });
        }
        if let Some(pos) = table.iter().position(|&v| v as usize >= n) {
            return Err(ModelError::IndexOutOfRange { what: "table", index: pos });
        }
        check_zero_name(&carrier, &inv)?;
        Ok(Groupoid { carrier, inv, table, n })
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn involution(&self) -> &Involution {
        &self.inv
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn top(&self) -> usize {
        self.carrier.top()
    }

    pub fn zero(&self) -> usize {
        self.inv.of(self.top())
    }

    pub fn plus(&self, x: usize, y: usize) -> usize {
        self.table[x * self.n + y] as usize
    }

    pub fn prime(&self, x: usize) -> usize {
        self.inv.of(x)
    }

    pub fn name(&self, i: usize) -> &str {
        self.carrier.name(i)
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn is_trivial(&self) -> bool {
        self.n == 1
    }

    /// Reports involution laws and table closure. Closure cannot fail for a
    /// constructor-built value; it is still reported, not assumed.
    pub fn validate(&self) -> CheckReport {
        let mut report = CheckReport::new();
        report.push_outcome("involution_law", involution_law(&self.inv));
        report.push_outcome("involution_bijective", involution_bijective(&self.inv));

        let mut closure = CheckOutcome::pass();
        'out: for x in 0..self.n {
            for y in 0..self.n {
                if self.plus(x, y) >= self.n {
                    closure = CheckOutcome::fail(Witness::new(&[("x", x), ("y", y)]));
                    break 'out;
                }
            }
        }
        report.push_outcome("closure", closure);
        report
    }
}
