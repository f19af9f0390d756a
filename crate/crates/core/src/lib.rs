//! Edge irregularity strength of dandelion graphs.
//!
//! A dandelion `D(n, l)` is a star whose center is glued to one end of a path
//! on `l` vertices, for `n` vertices in total. This crate builds those graphs
//! (plus stars and paths), checks vertex labelings for pairwise distinct edge
//! weights, emits the three-regime constructive labelings, and computes the
//! exact edge irregularity strength of small graphs by exhaustive search.
//!
//! The crate is `no_std` and only needs `alloc`. Wall-clock budgets go
//! through the [`solver::Clock`] trait so hosted callers can plug in a real
//! timer.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod construct;
mod error;
pub mod graph;
pub mod labeling;
pub mod solver;

pub use construct::{
    classify, construct, construct_case1, construct_case2, construct_case3, CaseKind,
    ConstructionResult,
};
pub use error::Error;
pub use graph::{dandelion, path, star, Edge, Family, Graph, VertexId};
pub use labeling::{lower_bound, verify, BoundInfo, Collision, Labeling, VerifyReport};
pub use solver::{
    es_exact, es_pigeonhole_check, exists_labeling, Clock, EsResult, EsStatus, Feasibility,
    KAttempt, NoClock, SearchBudget, SearchOutcome, Solver,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
