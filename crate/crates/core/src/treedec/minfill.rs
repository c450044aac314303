use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::TreeDecomposition;
use crate::graph::{Graph, Vertex};

fn fill_in(adj: &[BTreeSet<Vertex>], v: Vertex) -> usize {
    let nbrs: Vec<Vertex> = adj[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nbrs.iter().enumerate() {
        for &b in &nbrs[i + 1..] {
            if !adj[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Greedy min-fill elimination order. Ties go to the smaller current degree,
/// then to a seeded random priority.
pub fn elimination_order(g: &Graph, seed: u64) -> Vec<Vertex> {
    let n = g.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut priority: Vec<usize> = (0..n).collect();
    priority.shuffle(&mut rng);

    let mut adj: Vec<BTreeSet<Vertex>> = g
        .vertices()
        .map(|v| g.neighbours(v).iter().copied().collect())
        .collect();
    let mut fill: Vec<usize> = (0..n).map(|v| fill_in(&adj, v)).collect();
    let mut alive = vec![true; n];
    let mut order = Vec::with_capacity(n);

    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (fill[v], adj[v].len(), priority[v]))
            .expect("a vertex remains");
        alive[v] = false;
        order.push(v);

        let nbrs: Vec<Vertex> = adj[v].iter().copied().collect();
        for &a in &nbrs {
            adj[a].remove(&v);
        }
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        adj[v].clear();

        // Fill counts change only within distance two of v.
        let mut dirty = BTreeSet::new();
        for &a in &nbrs {
            dirty.insert(a);
            dirty.extend(adj[a].iter().copied());
        }
        for u in dirty {
            fill[u] = fill_in(&adj, u);
        }
    }
    order
}

/// Tree decomposition from the min-fill elimination order. Components are
/// joined through one extra empty bag.
pub fn min_fill_decompose(g: &Graph, seed: u64) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::new(vec![Vec::new()], Vec::new());
    }
    let order = elimination_order(g, seed);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }

    let mut adj: Vec<BTreeSet<Vertex>> = g
        .vertices()
        .map(|v| g.neighbours(v).iter().copied().collect())
        .collect();
    // Node i holds the bag created when order[i] is eliminated.
    let mut bags = Vec::with_capacity(n + 1);
    let mut edges = Vec::with_capacity(n);
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later: Vec<Vertex> = adj[v].iter().copied().collect();
        for (j, &a) in later.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &later[j + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        match later.iter().map(|&u| position[u]).min() {
            Some(parent) => edges.push((i, parent)),
            None => roots.push(i),
        }
        let mut bag = later;
        bag.push(v);
        bags.push(bag);
    }
    if roots.len() > 1 {
        let hub = bags.len();
        bags.push(Vec::new());
        edges.extend(roots.into_iter().map(|r| (r, hub)));
    }
    TreeDecomposition::new(bags, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::treedec::validate_td;

    /// Minimum width over every elimination order.
    fn brute_force_treewidth(g: &Graph) -> usize {
        fn width_of(g: &Graph, order: &[Vertex]) -> usize {
            let mut adj: Vec<BTreeSet<Vertex>> = g
                .vertices()
                .map(|v| g.neighbours(v).iter().copied().collect())
                .collect();
            let mut best = 0;
            for &v in order {
                let nbrs: Vec<Vertex> = adj[v].iter().copied().collect();
                best = best.max(nbrs.len());
                for &a in &nbrs {
                    adj[a].remove(&v);
                    for &b in &nbrs {
                        if a != b {
                            adj[a].insert(b);
                        }
                    }
                }
            }
            best
        }
        fn permute(g: &Graph, k: usize, order: &mut Vec<Vertex>, best: &mut usize) {
            if k == order.len() {
                *best = (*best).min(width_of(g, order));
                return;
            }
            for i in k..order.len() {
                order.swap(k, i);
                permute(g, k + 1, order, best);
                order.swap(k, i);
            }
        }
        let mut order: Vec<Vertex> = g.vertices().collect();
        let mut best = usize::MAX;
        permute(g, 0, &mut order, &mut best);
        best
    }

    /// Every labelled tree on `n` vertices via Prüfer sequences.
    fn all_trees(n: usize) -> Vec<Graph> {
        if n == 1 {
            return vec![Graph::empty(1)];
        }
        if n == 2 {
            return vec![Graph::from_edges(2, [(0, 1)]).unwrap()];
        }
        let mut out = Vec::new();
        let total = n.pow(n as u32 - 2);
        for code in 0..total {
            let mut seq = Vec::with_capacity(n - 2);
            let mut c = code;
            for _ in 0..n - 2 {
                seq.push(c % n);
                c /= n;
            }
            let mut degree = vec![1; n];
            for &s in &seq {
                degree[s] += 1;
            }
            let mut edges = Vec::new();
            for &s in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, s));
                degree[leaf] -= 1;
                degree[s] -= 1;
            }
            let rest: Vec<_> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            out.push(Graph::from_edges(n, edges).unwrap());
        }
        out
    }

    #[test]
    fn trees_have_width_one() {
        for n in 2..=7 {
            for (i, t) in all_trees(n).iter().enumerate() {
                let td = min_fill_decompose(t, i as u64);
                let rep = validate_td(t, &td);
                assert!(rep.is_valid(), "{:?}", rep.violations);
                assert_eq!(rep.width, 1);
            }
        }
    }

    #[test]
    fn larger_random_trees_have_width_one() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 8..=10 {
            for seed in 0..50 {
                let edges: Vec<_> = (1..n).map(|v| (v, rng.random_range(0..v))).collect();
                let t = Graph::from_edges(n, edges).unwrap();
                let td = min_fill_decompose(&t, seed);
                assert!(validate_td(&t, &td).is_valid());
                assert_eq!(td.width(), 1);
            }
        }
    }

    #[test]
    fn cycle_four_width_two() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(brute_force_treewidth(&c4), 2);
        for seed in 0..10 {
            let td = min_fill_decompose(&c4, seed);
            assert!(validate_td(&c4, &td).is_valid());
            assert_eq!(td.width(), 2);
        }
    }

    #[test]
    fn complete_graph_width() {
        let edges = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v)));
        let k5 = Graph::from_edges(5, edges).unwrap();
        let td = min_fill_decompose(&k5, 3);
        assert!(validate_td(&k5, &td).is_valid());
        assert_eq!(td.width(), 4);
    }

    #[test]
    fn disconnected_and_edgeless() {
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        let td = min_fill_decompose(&g, 0);
        assert!(validate_td(&g, &td).is_valid());
        assert_eq!(td.width(), 1);
        let e = Graph::empty(4);
        let td = min_fill_decompose(&e, 0);
        assert!(validate_td(&e, &td).is_valid());
        assert_eq!(td.width(), 0);
        let z = Graph::empty(0);
        assert!(validate_td(&z, &min_fill_decompose(&z, 0)).is_valid());
    }
}
