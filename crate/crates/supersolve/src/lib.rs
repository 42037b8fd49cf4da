//! File formats, bundled group data, a parallel solver front and the
//! `supersolve` command line, on top of `supersolve-core`.

pub mod cli;
pub mod data;
pub mod format;
pub mod parallel;
pub mod render;

pub use supersolve_core as core;
