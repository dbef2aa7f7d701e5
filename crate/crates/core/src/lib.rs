//! Single-machine non-preemptive scheduling with release times, deadlines
//! and precedence constraints.
//!
//! The crate provides:
//!
//! - domain types with full validation ([`model`]),
//! - precedence-structure analysis: transitive closure, width, minimum
//!   chain decomposition ([`decompose`]),
//! - exact dynamic programs over chain decompositions ([`solver`]),
//! - the EDD dispatch rule with its lateness-gap certificate, the
//!   single-window greedy, chain-uniform precedence dropping, and an
//!   exhaustive oracle ([`baselines`]),
//! - the binary shuffle-product decision procedure and certified
//!   hard-instance generators ([`reduction`]),
//! - canonical JSON file formats ([`format`]) and seeded random instance
//!   generators ([`gen`]).

pub mod baselines;
pub mod decompose;
pub mod format;
pub mod gen;
pub mod model;
pub mod reduction;
pub mod solver;

pub use decompose::ChainDecomposition;
pub use model::{Instance, Job, Objective, RawInstance, Schedule, Time};
pub use solver::SolveOutcome;
