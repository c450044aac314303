//! Maximum happy vertices: exact and heuristic solvers over tree decompositions.

pub mod baselines;
pub mod error;
pub mod exact;
pub mod graph;
pub mod harness;
pub mod heuristic;
pub mod io;
pub mod oracle;
pub mod parallel;
pub mod solution;
pub mod treedec;

pub use error::{Error, Result};
pub use solution::SolveResult;
