//! Command-line companion to `orthokit-core`: the canonical text format
//! for structures on disk, report rendering, and the flag grammar. The
//! core crate stays `no_std`; everything touching files, stdout, or
//! threads lives here.

pub mod cli;
pub mod format;
pub mod render;
