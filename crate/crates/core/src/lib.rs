//! Finite orthogonal relational systems and the groupoids they induce.
//!
//! A structure here is a finite carrier with a designated top element `1`,
//! an involution `x ↦ x'`, and either a binary relation (a relational
//! system) or a binary operation `+` (a groupoid). The modules split along
//! what they compute:
//!
//! * [`model`] owns the structure types and structural validation,
//! * [`relsys`] covers upper cones, orthogonality, and relation properties,
//! * [`induce`] turns relational systems into groupoids and back,
//! * [`axioms`] decides the orthogroupoid equations and derived laws,
//! * [`church`] handles central elements, both equationally and through
//!   factor congruences,
//! * [`decomp`] builds interval algebras and direct decompositions,
//! * [`amalgam`] glues two groupoids over a shared subalgebra,
//! * [`enumerate`] streams all models of a given size.
//!
//! Everything works on carriers of at most 64 elements, so relation rows
//! and element sets fit in single machine words. The crate is `no_std`
//! (with `alloc`); parsing, serialization, and the command-line front end
//! live in the companion `orthokit` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod amalgam;
pub mod axioms;
pub mod church;
pub mod decomp;
pub mod enumerate;
pub mod induce;
pub mod model;
pub mod relsys;
pub mod report;

#[cfg(test)]
pub(crate) mod testutil;

pub use model::{Carrier, ElemSet, Groupoid, Involution, ModelError, Relation, RelationalSystem};
pub use report::{Check, CheckOutcome, CheckReport, Witness};
