use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Colour, Graph, Instance, PartialColouring};

/// Erdős–Rényi graph with `⌊qn⌋` precoloured vertices.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorParams {
    pub n: usize,
    /// Edge probability.
    pub p: f64,
    pub k: u32,
    /// Fraction of precoloured vertices.
    pub q: f64,
    pub seed: u64,
}

impl GeneratorParams {
    /// Sparse, lightly coloured instances: `p = 5/(n-1)`, `q = 0.1`.
    pub fn hard(n: usize, k: u32, seed: u64) -> Self {
        GeneratorParams {
            n,
            p: if n > 1 { (5.0 / (n - 1) as f64).min(1.0) } else { 0.0 },
            k,
            q: 0.1,
            seed,
        }
    }

    /// Number of precoloured vertices. A tiny tolerance keeps products such
    /// as `0.29 * 100` from rounding down past an integer.
    pub fn coloured_count(&self) -> usize {
        (self.q * self.n as f64 + 1e-9).floor() as usize
    }
}

/// Draws each edge `{u, v}` (`u < v`, lexicographic) with probability `p`,
/// shuffles the vertices, gives the first `k` colours `1..=k` and the next
/// `⌊qn⌋ - k` uniform random colours. All randomness comes from ChaCha8
/// seeded with `seed`.
pub fn generate(params: &GeneratorParams) -> Result<Instance> {
    let GeneratorParams { n, p, k, q, seed } = *params;
    if !(0.0..=1.0).contains(&p) || !(0.0..=1.0).contains(&q) {
        return Err(Error::InvalidParams(format!("p = {p} and q = {q} must lie in [0, 1]")));
    }
    if k == 0 {
        return Err(Error::InvalidParams("k must be at least 1".into()));
    }
    let coloured = params.coloured_count();
    if coloured < (k as usize) {
        return Err(Error::InvalidParams(format!(
            "floor(q*n) = {coloured} is smaller than k = {k}; every colour needs a vertex"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut colouring = PartialColouring::new(n, k);
    for (i, &v) in order.iter().take(coloured).enumerate() {
        let c: Colour = if i < k as usize { i as Colour + 1 } else { rng.random_range(1..=k) };
        colouring.set(v, c)?;
    }
    Instance::new(Graph::from_edges(n, edges)?, colouring)
}
