use std::time::Duration;

use crate::graph::{count_happy, percent_happy, FullColouring, Graph};

/// Output of every solver.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveResult {
    pub colouring: FullColouring,
    pub happy: usize,
    pub percent_happy: f64,
    /// True when the solver proved the colouring optimal.
    pub optimal: bool,
    pub elapsed: Duration,
}

impl SolveResult {
    /// Scores `colouring` on `g` from scratch.
    pub fn new(g: &Graph, colouring: FullColouring, optimal: bool, elapsed: Duration) -> Self {
        let happy = count_happy(g, &colouring);
        SolveResult {
            percent_happy: percent_happy(g, happy),
            colouring,
            happy,
            optimal,
            elapsed,
        }
    }
}
