//! Instance builders shared by the integration tests.
#![allow(dead_code)]

use mhv_core::graph::{Colour, Graph, Instance, PartialColouring};
use mhv_core::treedec::{make_nice, min_fill_decompose, NiceTreeDecomposition};
use rand::seq::SliceRandom;
use rand::Rng;

/// Random graph on `n` vertices with `coloured` precoloured vertices, the
/// first `k` of them (in shuffled order) taking colours `1..=k`.
pub fn random_instance(rng: &mut impl Rng, n: usize, p: f64, k: u32, coloured: usize) -> Instance {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    colour(rng, Graph::from_edges(n, edges).unwrap(), k, coloured)
}

/// Uniform labelled tree from a random Prüfer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize, k: u32, coloured: usize) -> Instance {
    let mut edges = Vec::new();
    if n == 2 {
        edges.push((0, 1));
    } else if n > 2 {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
        let mut degree = vec![1usize; n];
        for &s in &seq {
            degree[s] += 1;
        }
        for &s in &seq {
            let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
            edges.push((leaf.min(s), leaf.max(s)));
            degree[leaf] -= 1;
            degree[s] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
        edges.push((rest[0], rest[1]));
    }
    colour(rng, Graph::from_edges(n, edges).unwrap(), k, coloured)
}

fn colour(rng: &mut impl Rng, g: Graph, k: u32, coloured: usize) -> Instance {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut col = PartialColouring::new(n, k);
    for (i, &v) in order.iter().take(coloured).enumerate() {
        let c: Colour = if i < k as usize { i as Colour + 1 } else { rng.random_range(1..=k) };
        col.set(v, c).unwrap();
    }
    Instance::new(g, col).unwrap()
}

/// The small-instance corpus: `n ≤ 9`, `k ∈ {2, 3}`, every colour present.
pub fn small_corpus(rng: &mut impl Rng, count: usize) -> Vec<Instance> {
    (0..count)
        .map(|_| {
            let k = rng.random_range(2..=3u32);
            let n = rng.random_range(k as usize..=9);
            let p = rng.random_range(0.15..0.75);
            let coloured = rng.random_range(k as usize..=n.min(k as usize + 3));
            random_instance(rng, n, p, k, coloured)
        })
        .collect()
}

pub fn nice_of(inst: &Instance, seed: u64) -> NiceTreeDecomposition {
    make_nice(&min_fill_decompose(&inst.graph, seed), &inst.graph).unwrap()
}
