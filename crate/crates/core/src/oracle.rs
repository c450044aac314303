//! Exhaustive search, used as ground truth on small instances.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{count_happy, Colour, FullColouring, Instance};
use crate::solution::SolveResult;

pub const DEFAULT_BRUTE_FORCE_CAP: u64 = 10_000_000;

/// Tries every extension of the precolouring. Uncoloured vertices are counted
/// as mixed-radix digits in ascending vertex order; the first optimum found is
/// returned. Refuses when more than `cap` colourings would be evaluated.
pub fn brute_force(inst: &Instance, cap: u64) -> Result<SolveResult> {
    let start = Instant::now();
    let g = &inst.graph;
    let k = inst.k();
    let free: Vec<usize> = inst.colouring.uncoloured().collect();
    let total = (k as u64).checked_pow(free.len() as u32);
    match total {
        Some(t) if t <= cap => {}
        _ => {
            return Err(Error::ResourceLimit(format!(
                "{k}^{} colourings exceed the brute-force cap of {cap}",
                free.len()
            )))
        }
    }

    let mut colours: Vec<Colour> = inst.colouring.assignment().iter().map(|c| c.unwrap_or(1)).collect();
    let mut best: Option<(usize, Vec<Colour>)> = None;
    loop {
        let col = FullColouring::new(k, colours.clone())?;
        let happy = count_happy(g, &col);
        if best.as_ref().is_none_or(|(b, _)| happy > *b) {
            best = Some((happy, colours.clone()));
        }
        // Advance the counter, least significant digit first.
        let mut i = 0;
        while i < free.len() {
            let v = free[i];
            if colours[v] < k {
                colours[v] += 1;
                break;
            }
            colours[v] = 1;
            i += 1;
        }
        if i == free.len() {
            break;
        }
    }
    let (_, colours) = best.expect("at least one colouring is evaluated");
    let col = FullColouring::new(k, colours)?;
    Ok(SolveResult::new(g, col, true, start.elapsed()))
}
