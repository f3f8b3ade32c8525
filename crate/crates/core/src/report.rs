//! Pass/fail verdicts with explicit witnesses.
//!
//! Every check that can fail names the variables it quantifies over, and a
//! failing check carries at least one assignment of those variables to
//! carrier indices. Rendering indices as element names is left to callers.

use alloc::vec::Vec;

/// One variable assignment demonstrating a failure, e.g. `x=2, y=5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub bindings: Vec<(&'static str, usize)>,
}

impl Witness {
    pub fn new(bindings: &[(&'static str, usize)]) -> Self {
        Witness { bindings: bindings.to_vec() }
    }
}

/// Outcome of a single named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

/// Unnamed outcome, used where the caller supplies the name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub passed: bool,
    pub witness: Option<Witness>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome { passed: true, witness: None }
    }

    pub fn fail(witness: Witness) -> Self {
        CheckOutcome { passed: false, witness: Some(witness) }
    }

    pub fn named(self, name: &'static str) -> Check {
        Check {
            name,
            passed: self.passed,
            witnesses: self.witness.into_iter().collect(),
        }
    }
}

/// An ordered list of checks; the order is stable across runs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn push_outcome(&mut self, name: &'static str, outcome: CheckOutcome) {
        self.push(outcome.named(name));
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
