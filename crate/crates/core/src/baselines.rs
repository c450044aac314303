//! Greedy-MHV and Growth-MHV.

use std::collections::VecDeque;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{count_happy, Colour, FullColouring, Graph, Instance, Vertex};
use crate::solution::SolveResult;

/// Best of the `k` completions that give every free vertex one colour; ties
/// go to the lowest colour.
pub fn greedy_mhv(inst: &Instance) -> SolveResult {
    let start = Instant::now();
    let mut best: Option<(usize, FullColouring)> = None;
    for colour in 1..=inst.k() {
        let col = FullColouring::complete_with(&inst.colouring, colour);
        let happy = count_happy(&inst.graph, &col);
        if best.as_ref().is_none_or(|(b, _)| happy > *b) {
            best = Some((happy, col));
        }
    }
    let (_, col) = best.expect("k is at least 1");
    SolveResult::new(&inst.graph, col, false, start.elapsed())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GrowthLabel {
    H,
    U,
    P,
    LP,
    LH,
    LU,
    LF,
}

/// Label of one vertex under a partial colouring.
fn label_of(g: &Graph, col: &[Option<Colour>], v: Vertex) -> GrowthLabel {
    match col[v] {
        Some(c) => {
            let mut free = false;
            for &n in g.neighbours(v) {
                match col[n] {
                    Some(d) if d != c => return GrowthLabel::U,
                    None => free = true,
                    _ => {}
                }
            }
            if free {
                GrowthLabel::P
            } else {
                GrowthLabel::H
            }
        }
        None => {
            let mut coloured = false;
            let mut u_colour: Option<Colour> = None;
            let mut mixed = false;
            for &n in g.neighbours(v) {
                if col[n].is_none() {
                    continue;
                }
                coloured = true;
                match label_of(g, col, n) {
                    GrowthLabel::P => return GrowthLabel::LP,
                    GrowthLabel::U => {
                        let c = col[n];
                        mixed |= u_colour.is_some_and(|u| Some(u) != c);
                        u_colour = c;
                    }
                    _ => {}
                }
            }
            match (coloured, mixed) {
                (false, _) => GrowthLabel::LF,
                (true, true) => GrowthLabel::LU,
                (true, false) => GrowthLabel::LH,
            }
        }
    }
}

pub fn compute_growth_labels(g: &Graph, col: &[Option<Colour>]) -> Vec<GrowthLabel> {
    g.vertices().map(|v| label_of(g, col, v)).collect()
}

/// Vertices within `radius` edges of `v`, `v` included.
fn ball(g: &Graph, v: Vertex, radius: usize, mark: &mut [bool], out: &mut Vec<Vertex>) {
    out.clear();
    let mut queue = VecDeque::from([(v, 0)]);
    mark[v] = true;
    out.push(v);
    while let Some((u, d)) = queue.pop_front() {
        if d == radius {
            continue;
        }
        for &n in g.neighbours(u) {
            if !mark[n] {
                mark[n] = true;
                out.push(n);
                queue.push_back((n, d + 1));
            }
        }
    }
    for &u in out.iter() {
        mark[u] = false;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GrowthOptions {
    pub seed: u64,
    /// Break ties towards the lowest degree instead of the highest.
    pub prefer_low_degree: bool,
}

/// Growth-MHV. `on_step` sees the colouring and the maintained labels after
/// every iteration.
pub fn growth_mhv_traced(
    inst: &Instance,
    opts: GrowthOptions,
    mut on_step: impl FnMut(&[Option<Colour>], &[GrowthLabel]),
) -> SolveResult {
    let start = Instant::now();
    let g = &inst.graph;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut col: Vec<Option<Colour>> = inst.colouring.assignment().to_vec();
    let mut labels = compute_growth_labels(g, &col);
    let mut mark = vec![false; g.n()];
    let mut region = Vec::new();

    let pick = |labels: &[GrowthLabel], want: GrowthLabel| -> Option<Vertex> {
        let mut best: Option<Vertex> = None;
        for v in g.vertices().filter(|&v| labels[v] == want) {
            let better = match best {
                None => true,
                Some(b) if opts.prefer_low_degree => g.degree(v) < g.degree(b),
                Some(b) => g.degree(v) > g.degree(b),
            };
            if better {
                best = Some(v);
            }
        }
        best
    };
    let first_u_colour = |col: &[Option<Colour>], labels: &[GrowthLabel], v: Vertex| {
        g.neighbours(v)
            .iter()
            .find(|&&n| labels[n] == GrowthLabel::U)
            .and_then(|&n| col[n])
    };

    while col.iter().any(Option::is_none) {
        let (centre, radius) = if let Some(v) = pick(&labels, GrowthLabel::P) {
            let c = col[v];
            for &n in g.neighbours(v) {
                if col[n].is_none() {
                    col[n] = c;
                }
            }
            (v, 3)
        } else if let Some(v) = pick(&labels, GrowthLabel::LH) {
            let c = first_u_colour(&col, &labels, v).expect("an L_H vertex has a U neighbour");
            col[v] = Some(c);
            for &n in g.neighbours(v) {
                if col[n].is_none() {
                    col[n] = Some(c);
                }
            }
            (v, 3)
        } else if let Some(v) = pick(&labels, GrowthLabel::LU) {
            col[v] = first_u_colour(&col, &labels, v);
            (v, 1)
        } else {
            let v = pick(&labels, GrowthLabel::LF).expect("some vertex is still uncoloured");
            col[v] = Some(rng.random_range(1..=inst.k()));
            (v, 1)
        };
        ball(g, centre, radius, &mut mark, &mut region);
        for &u in &region {
            labels[u] = label_of(g, &col, u);
        }
        on_step(&col, &labels);
    }

    let colours = col.into_iter().map(|c| c.expect("loop ends when all are coloured")).collect();
    let colouring = FullColouring::new(inst.k(), colours).expect("colours stay in range");
    SolveResult::new(g, colouring, false, start.elapsed())
}

pub fn growth_mhv(inst: &Instance, opts: GrowthOptions) -> SolveResult {
    growth_mhv_traced(inst, opts, |_, _| {})
}
