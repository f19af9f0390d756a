//! Hosted side of the dandelion toolkit: JSON and DOT documents, the grid
//! sweep, and the `dandelion` command line.

pub mod cli;
pub mod clock;
pub mod dot;
pub mod format;
pub mod sweep;
