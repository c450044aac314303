//! Width-bounded dynamic program over a nice tree decomposition.
//!
//! Every node keeps at most `width` tuples, each a colouring of the processed
//! subgraph plus a label per vertex. Tuples are ranked by a weighted count of
//! their labels. When no list ever fills up the result is optimal.

mod forget;
mod introduce;
mod join;
mod list;
mod tuple;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Colour, FullColouring, Graph, Instance, PartialColouring, Vertex};
use crate::solution::SolveResult;
use crate::treedec::{NiceTreeDecomposition, NodeId, NodeKind};

pub use list::TupleList;
pub use tuple::{Label, LabelCounts, Tuple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LabelWeights {
    pub h: i64,
    pub u: i64,
    pub ph: i64,
    pub pu: i64,
}

impl LabelWeights {
    /// Tuned defaults.
    pub const TUNED: LabelWeights = LabelWeights {
        h: 15,
        u: -9,
        ph: 4,
        pu: -8,
    };

    /// Scores only required-happy vertices.
    pub const HAPPY_ONLY: LabelWeights = LabelWeights {
        h: 1,
        u: 0,
        ph: 0,
        pu: 0,
    };

    /// Checks the admissible ranges and the ordering between weights.
    pub fn new(h: i64, u: i64, ph: i64, pu: i64) -> Result<Self> {
        let w = LabelWeights { h, u, ph, pu };
        let in_range = (-5..=20).contains(&h)
            && (-5..=20).contains(&ph)
            && (-10..=10).contains(&u)
            && (-10..=10).contains(&pu);
        if !in_range {
            return Err(Error::InvalidParams(format!(
                "weights {w} outside W_H, W_PH in [-5,20] and W_U, W_PU in [-10,10]"
            )));
        }
        if !(h >= ph && h >= pu && u <= ph && u <= pu) {
            return Err(Error::InvalidParams(format!(
                "weights {w} violate W_H >= W_PH, W_H >= W_PU, W_U <= W_PH, W_U <= W_PU"
            )));
        }
        Ok(w)
    }

    pub fn evaluate(&self, c: LabelCounts) -> i64 {
        self.h * c.h + self.u * c.u + self.ph * c.ph + self.pu * c.pu
    }
}

impl Default for LabelWeights {
    fn default() -> Self {
        LabelWeights::TUNED
    }
}

impl fmt::Display for LabelWeights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.h, self.u, self.ph, self.pu)
    }
}

/// Parses `H,U,PH,PU`.
impl FromStr for LabelWeights {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let nums = parts
            .iter()
            .map(|p| p.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::InvalidParams(format!("weights {s:?} are not integers")))?;
        match nums.as_slice() {
            &[h, u, ph, pu] => LabelWeights::new(h, u, ph, pu),
            _ => Err(Error::InvalidParams(format!("expected four weights H,U,PH,PU, got {s:?}"))),
        }
    }
}

macro_rules! named_enum {
    ($(#[$m:meta])* $name:ident { $($variant:ident => $text:literal),+ $(,)? }) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            pub fn as_str(self) -> &'static str {
                match self { $($name::$variant => $text),+ }
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.as_str())
            }
        }

        impl FromStr for $name {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                $name::ALL
                    .iter()
                    .copied()
                    .find(|v| v.as_str() == s)
                    .ok_or_else(|| {
                        let names: Vec<_> = $name::ALL.iter().map(|v| v.as_str()).collect();
                        Error::InvalidParams(format!("unknown value {s:?}, expected one of {}", names.join(", ")))
                    })
            }
        }
    };
}

named_enum! {
    /// Which child list drives the outer loop of a join.
    JoinLoop {
        Random => "random",
        LargerList => "larger_list",
        SmallerList => "smaller_list",
    }
}

named_enum! {
    /// Weight of a bag vertex in the distance between two join candidates.
    DistanceWeighting {
        AllOnes => "all_ones",
        HasExternalNeighbour => "has_external_neighbour",
        HasBorderNeighbour => "has_border_neighbour",
        HasNonborderExternalNeighbour => "has_nonborder_external_neighbour",
        CountExternalNeighbours => "count_external_neighbours",
        CountBorderNeighbours => "count_border_neighbours",
        CountNonborderExternalNeighbours => "count_nonborder_external_neighbours",
    }
}

named_enum! {
    /// How a join combines two tuples that disagree on the bag.
    MergeMethod {
        CopyBag => "copy_bag",
        GreedyMatch => "greedy_match",
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeuristicConfig {
    pub width: usize,
    pub weights: LabelWeights,
    pub join_loop: JoinLoop,
    pub join_distance: DistanceWeighting,
    pub join_merge: MergeMethod,
    pub seed: u64,
}

impl Default for HeuristicConfig {
    fn default() -> Self {
        HeuristicConfig {
            width: 67,
            weights: LabelWeights::TUNED,
            join_loop: JoinLoop::SmallerList,
            join_distance: DistanceWeighting::CountExternalNeighbours,
            join_merge: MergeMethod::CopyBag,
            seed: 0,
        }
    }
}

impl HeuristicConfig {
    pub fn with_width(width: usize) -> Self {
        HeuristicConfig {
            width,
            ..HeuristicConfig::default()
        }
    }
}

/// Smallest width for which the lists can hold every bag state, saturating
/// at `u64::MAX`.
pub fn exactness_bound(k: u32, w: usize) -> u64 {
    let exp = u32::try_from(w + 1).unwrap_or(u32::MAX);
    (2 * k as u64).saturating_pow(exp)
}

pub(crate) struct Ctx<'a> {
    pub g: &'a Graph,
    pub pre: &'a PartialColouring,
    pub k: u32,
    pub config: &'a HeuristicConfig,
    pub rng: ChaCha8Rng,
}

impl Ctx<'_> {
    pub fn new_list(&self) -> TupleList {
        TupleList::new(self.config.width)
    }

    pub fn push(&mut self, list: &mut TupleList, mut t: Tuple) {
        t.score = self.config.weights.evaluate(t.counts());
        debug_assert_eq!(t.counts(), t.recount(self.g.n()));
        list.insert(t, &mut self.rng);
    }

    /// True if some neighbour of `v`, coloured in `t` or precoloured, has a
    /// colour other than `colour`.
    pub fn conflict(&self, t: &Tuple, v: Vertex, colour: Colour) -> bool {
        self.g.neighbours(v).iter().any(|&n| {
            t.colour(n).is_some_and(|c| c != colour) || self.pre.get(n).is_some_and(|c| c != colour)
        })
    }

    /// Label of an uncoloured vertex from its coloured and precoloured
    /// neighbours.
    pub fn border_label(&self, t: &Tuple, v: Vertex) -> Label {
        let mut seen: Option<Colour> = None;
        let mut touched = false;
        let mut mixed = false;
        for &n in self.g.neighbours(v) {
            let coloured = t.colour(n);
            touched |= coloured.is_some();
            for c in [coloured, self.pre.get(n)].into_iter().flatten() {
                mixed |= seen.is_some_and(|s| s != c);
                seen = Some(c);
            }
        }
        match (touched, mixed) {
            (false, _) => Label::UK,
            (true, true) => Label::U,
            (true, false) => Label::PH,
        }
    }

    /// Label of a coloured vertex that is not required to be happy.
    pub fn free_label(&self, t: &Tuple, v: Vertex) -> Label {
        let c = t.colour(v).expect("vertex is coloured");
        if self.conflict(t, v, c) {
            Label::U
        } else {
            Label::PU
        }
    }
}

/// Extra output of a heuristic run.
#[derive(Debug, Clone)]
pub struct HeuristicRun {
    pub result: SolveResult,
    /// Final label of every vertex.
    pub labels: Vec<Label>,
    pub score: i64,
    /// Number of required-happy vertices in the selected tuple.
    pub claimed_happy: usize,
    pub largest_list: usize,
}

pub fn solve_heuristic(inst: &Instance, nice: &NiceTreeDecomposition, config: &HeuristicConfig) -> Result<SolveResult> {
    run_heuristic(inst, nice, config, |_, _| {}).map(|r| r.result)
}

/// Runs the solver, handing every node's list to `observe` as it is built.
pub fn run_heuristic(
    inst: &Instance,
    nice: &NiceTreeDecomposition,
    config: &HeuristicConfig,
    mut observe: impl FnMut(NodeId, &TupleList),
) -> Result<HeuristicRun> {
    let start = Instant::now();
    let g = &inst.graph;
    let k = inst.k();
    if config.width == 0 {
        return Err(Error::InvalidParams("width must be at least 1".into()));
    }
    if k == 0 || k > u16::MAX as u32 {
        return Err(Error::InvalidParams(format!("k = {k} outside 1..={}", u16::MAX)));
    }
    if nice.is_empty() || nice.nodes().iter().flat_map(|n| &n.bag).any(|&v| v >= g.n()) {
        return Err(Error::InvalidDecomposition("decomposition does not match the graph".into()));
    }
    let mut ctx = Ctx {
        g,
        pre: &inst.colouring,
        k,
        config,
        rng: ChaCha8Rng::seed_from_u64(config.seed),
    };

    let mut lists: Vec<Option<TupleList>> = vec![None; nice.len()];
    let mut exact = true;
    let mut largest = 0;
    for t in 0..nice.len() {
        let node = nice.node(t);
        let mut take = |c: NodeId| lists[c].take().expect("child list is built before its parent");
        let list = match node.kind {
            NodeKind::Leaf => {
                let mut l = ctx.new_list();
                ctx.push(&mut l, Tuple::empty(g.n()));
                l
            }
            NodeKind::Introduce(v) => {
                let child = take(node.children[0]);
                introduce::handle_introduce(&mut ctx, v, child)
            }
            NodeKind::Forget(v) => {
                let child = take(node.children[0]);
                forget::handle_forget(&mut ctx, &node.bag, v, child)
            }
            NodeKind::Join => {
                let l1 = take(node.children[0]);
                let l2 = take(node.children[1]);
                join::handle_join(&mut ctx, &node.bag, l1, l2)
            }
        };
        exact &= list.below_capacity();
        largest = largest.max(list.len());
        observe(t, &list);
        lists[t] = Some(list);
    }

    let root = lists[nice.root()].take().expect("root list exists");
    let best = best_tuple(root.tuples()).expect("lists are never empty");
    let colours: Vec<Colour> = g
        .vertices()
        .map(|v| best.colour(v).unwrap_or_else(|| inst.colouring.get(v).unwrap_or(1)))
        .collect();
    let labels = g.vertices().map(|v| best.label(v)).collect();
    let colouring = FullColouring::new(k, colours)?;
    let result = SolveResult::new(g, colouring, exact, start.elapsed());
    Ok(HeuristicRun {
        claimed_happy: best.counts().h as usize,
        score: best.score(),
        labels,
        largest_list: largest,
        result,
    })
}

/// Highest score, then most required-happy vertices, then earliest.
pub(crate) fn best_tuple(tuples: &[Tuple]) -> Option<&Tuple> {
    let mut best: Option<&Tuple> = None;
    for t in tuples {
        if best.is_none_or(|b| better(t, b)) {
            best = Some(t);
        }
    }
    best
}

pub(crate) fn better(a: &Tuple, b: &Tuple) -> bool {
    (a.score(), a.counts().h) > (b.score(), b.counts().h)
}

#[cfg(test)]
mod tests {
    use super::tuple::Cell;
    use super::*;
    use crate::graph::is_happy;
    use crate::oracle::{brute_force, DEFAULT_BRUTE_FORCE_CAP};
    use crate::treedec::{make_nice, min_fill_decompose};
    use rand::{Rng, SeedableRng};

    fn inst(n: usize, edges: &[(usize, usize)], k: u32, pre: &[(usize, Colour)]) -> Instance {
        let mut c = PartialColouring::new(n, k);
        for &(v, col) in pre {
            c.set(v, col).unwrap();
        }
        Instance::new(Graph::from_edges(n, edges.iter().copied()).unwrap(), c).unwrap()
    }

    fn ctx<'a>(i: &'a Instance, config: &'a HeuristicConfig) -> Ctx<'a> {
        Ctx {
            g: &i.graph,
            pre: &i.colouring,
            k: i.k(),
            config,
            rng: ChaCha8Rng::seed_from_u64(config.seed),
        }
    }

    fn leaf_list(ctx: &mut Ctx) -> TupleList {
        let mut l = ctx.new_list();
        ctx.push(&mut l, Tuple::empty(ctx.g.n()));
        l
    }

    fn bag_view(t: &Tuple, bag: &[Vertex]) -> Vec<(Option<Colour>, Label)> {
        bag.iter().map(|&v| (t.colour(v), t.label(v))).collect()
    }

    fn random_instance(rng: &mut ChaCha8Rng, max_n: usize) -> Instance {
        let n = rng.random_range(1..=max_n);
        let k = rng.random_range(1..=3u32.min(n as u32));
        let p = rng.random_range(0.1..0.6);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let mut c = PartialColouring::new(n, k);
        for v in 0..n {
            if v < k as usize {
                c.set(v, v as Colour + 1).unwrap();
            } else if rng.random_bool(0.25) {
                c.set(v, rng.random_range(1..=k)).unwrap();
            }
        }
        Instance::new(Graph::from_edges(n, edges).unwrap(), c).unwrap()
    }

    #[test]
    fn evaluation() {
        let w = LabelWeights::TUNED;
        assert_eq!(w.evaluate(LabelCounts::default()), 0);
        let c = LabelCounts { h: 2, u: 1, ph: 3, pu: 0 };
        assert_eq!(w.evaluate(c), 33);
        let more = LabelCounts { h: 3, ..c };
        assert_eq!(w.evaluate(more) - w.evaluate(c), w.h);
    }

    #[test]
    fn weights_are_checked() {
        assert_eq!("15,-9,4,-8".parse::<LabelWeights>().unwrap(), LabelWeights::TUNED);
        assert!(LabelWeights::new(21, 0, 0, 0).is_err());
        assert!(LabelWeights::new(0, 0, 5, 0).is_err());
        assert!("1,2,3".parse::<LabelWeights>().is_err());
        assert_eq!("smaller_list".parse::<JoinLoop>().unwrap(), JoinLoop::SmallerList);
        assert!("nearest".parse::<MergeMethod>().is_err());
        for d in DistanceWeighting::ALL {
            assert_eq!(d.as_str().parse::<DistanceWeighting>().unwrap(), *d);
        }
    }

    #[test]
    fn bound() {
        assert_eq!(exactness_bound(3, 1), 36);
        assert_eq!(exactness_bound(1, 0), 2);
        assert_eq!(exactness_bound(3, 4), 7776);
        assert_eq!(exactness_bound(3, 200), u64::MAX);
    }

    #[test]
    fn introduce_lone_vertex() {
        let config = HeuristicConfig::default();
        let free = inst(1, &[], 2, &[]);
        let mut c = ctx(&free, &config);
        let leaf = leaf_list(&mut c);
        let l = introduce::handle_introduce(&mut c, 0, leaf);
        let mut got: Vec<_> = l.tuples().iter().map(|t| bag_view(t, &[0])[0]).collect();
        got.sort();
        assert_eq!(
            got,
            vec![
                (Some(1), Label::H),
                (Some(1), Label::PU),
                (Some(2), Label::H),
                (Some(2), Label::PU)
            ]
        );

        let fixed = inst(1, &[], 2, &[(0, 1)]);
        let mut c = ctx(&fixed, &config);
        let leaf = leaf_list(&mut c);
        let l = introduce::handle_introduce(&mut c, 0, leaf);
        assert!(l.tuples().iter().all(|t| t.colour(0) == Some(1)));
        assert_eq!(l.len(), 2);
    }

    #[test]
    fn introduce_next_to_mixed_precolours() {
        // Vertex 0 sees precoloured 1 and 2, neither processed yet.
        let i = inst(3, &[(0, 1), (0, 2)], 2, &[(1, 1), (2, 2)]);
        let config = HeuristicConfig::default();
        let mut c = ctx(&i, &config);
        let leaf = leaf_list(&mut c);
        let l = introduce::handle_introduce(&mut c, 0, leaf);
        assert_eq!(l.len(), 2);
        for t in l.tuples() {
            assert_eq!(t.label(0), Label::U);
            // The border rule looks at neighbours only, never at a vertex's
            // own precolour.
            assert_eq!((t.label(1), t.label(2)), (Label::PH, Label::PH));
        }
    }

    #[test]
    fn introduce_falls_back_to_backup() {
        // Vertex 1 is required happy in colour 1; vertex 0 is precoloured 2.
        let i = inst(2, &[(0, 1)], 2, &[(0, 2)]);
        let config = HeuristicConfig::default();
        let mut c = ctx(&i, &config);
        let mut t = Tuple::empty(2);
        t.set_cell(1, Cell { colour: 1, label: Label::H });
        t.set_label(0, Label::PH);
        let mut child = c.new_list();
        c.push(&mut child, t);
        let l = introduce::handle_introduce(&mut c, 0, child);
        assert_eq!(l.len(), 1);
        let t = &l.tuples()[0];
        assert_eq!(bag_view(t, &[0, 1]), vec![(Some(2), Label::U), (Some(1), Label::U)]);
        assert_eq!(t.counts(), LabelCounts { u: 2, ..LabelCounts::default() });
    }

    /// Colouring the hub against its precoloured neighbour leaves fewer
    /// happy vertices now but more potential on the border, and the tuned
    /// weights prefer it.
    #[test]
    fn border_potential_outranks_immediate_happiness() {
        // a=0 (precoloured 1), x=1, z=2..6, w=6..10 precoloured 2, z_j - w_j.
        let mut edges = vec![(0, 1)];
        let mut pre = vec![(0, 1)];
        for j in 0..4 {
            edges.push((1, 2 + j));
            edges.push((2 + j, 6 + j));
            pre.push((6 + j, 2));
        }
        let i = inst(10, &edges, 2, &pre);
        let config = HeuristicConfig::default();
        let mut c = ctx(&i, &config);
        let leaf = leaf_list(&mut c);
        let after_a = introduce::handle_introduce(&mut c, 0, leaf);
        let after_x = introduce::handle_introduce(&mut c, 1, after_a);
        let score_of = |x_colour: Colour, x_label: Label| {
            after_x
                .tuples()
                .iter()
                .filter(|t| t.colour(1) == Some(x_colour) && t.label(1) == x_label)
                .map(|t| (t.counts().h, t.score()))
                .max()
                .unwrap()
        };
        let (happy_same, same) = score_of(1, Label::H);
        let (happy_against, against) = score_of(2, Label::U);
        assert!(happy_same > happy_against);
        assert!(against >= same, "{against} < {same}");
        let best = brute_force(&i, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        assert_eq!(best.colouring.get(1), 2);
    }

    #[test]
    fn forget_keeps_the_best_and_settles_pu() {
        let i = inst(2, &[(0, 1)], 1, &[]);
        let config = HeuristicConfig::default();
        let mut c = ctx(&i, &config);
        let mut a = Tuple::empty(2);
        a.set_cell(0, Cell { colour: 1, label: Label::U });
        a.set_cell(1, Cell { colour: 1, label: Label::U });
        let mut b = a.clone();
        b.set_label(1, Label::PU);
        b.set_label(0, Label::H);
        let mut child = c.new_list();
        c.push(&mut child, a);
        c.push(&mut child, b);
        let before = child.tuples()[1].clone();
        assert_eq!(before.counts(), LabelCounts { h: 1, pu: 1, ..LabelCounts::default() });
        let l = forget::handle_forget(&mut c, &[0], 1, child);
        assert_eq!(l.len(), 2);
        let after = &l.tuples()[1];
        assert_eq!(after.counts(), LabelCounts { h: 2, ..LabelCounts::default() });
        assert_eq!(after.score() - before.score(), config.weights.h - config.weights.pu);

        // Same bag, different scores: one survivor with the larger score.
        let mut child = c.new_list();
        for h in [1, 2] {
            let mut t = Tuple::empty(2);
            t.set_cell(0, Cell { colour: 1, label: Label::U });
            t.set_cell(1, Cell { colour: 1, label: if h == 2 { Label::H } else { Label::U } });
            c.push(&mut child, t);
        }
        let l = forget::handle_forget(&mut c, &[0], 1, child);
        assert_eq!(l.len(), 1);
        assert_eq!(l.tuples()[0].counts().h, 1);
    }

    fn solve(i: &Instance, config: &HeuristicConfig) -> HeuristicRun {
        let nice = make_nice(&min_fill_decompose(&i.graph, 0), &i.graph).unwrap();
        run_heuristic(i, &nice, config, |_, l| assert!(l.len() <= config.width && !l.is_empty())).unwrap()
    }

    fn check_final_labels(i: &Instance, run: &HeuristicRun) {
        for v in i.graph.vertices() {
            let happy = is_happy(&i.graph, &run.result.colouring, v);
            let want = if happy { Label::H } else { Label::U };
            assert_eq!(run.labels[v], want, "vertex {v} in {i:?}");
        }
        assert_eq!(run.claimed_happy, run.result.happy);
        assert!(run.result.colouring.extends(&i.colouring));
    }

    #[test]
    fn small_cases() {
        let path = inst(3, &[(0, 1), (1, 2)], 2, &[(0, 1), (2, 2)]);
        let run = solve(&path, &HeuristicConfig::default());
        assert_eq!(run.result.happy, 1);
        assert!(run.result.optimal);

        let fixed = inst(3, &[(0, 1), (1, 2)], 2, &[(0, 1), (1, 1), (2, 2)]);
        let run = solve(&fixed, &HeuristicConfig::default());
        assert_eq!(run.result.happy, 1);
        check_final_labels(&fixed, &run);
    }

    #[test]
    fn wide_lists_match_brute_force() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for round in 0..300 {
            let i = random_instance(&mut rng, 8);
            let want = brute_force(&i, DEFAULT_BRUTE_FORCE_CAP).unwrap().happy;
            let config = HeuristicConfig {
                width: 10_000,
                join_loop: JoinLoop::ALL[round % 3],
                ..HeuristicConfig::default()
            };
            let run = solve(&i, &config);
            check_final_labels(&i, &run);
            assert!(run.result.optimal);
            assert_eq!(run.result.happy, want, "{i:?}");
        }
    }

    #[test]
    fn narrow_lists_stay_sound() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for round in 0..300 {
            let i = random_instance(&mut rng, 12);
            let config = HeuristicConfig {
                width: rng.random_range(1..8),
                join_loop: JoinLoop::ALL[round % 3],
                join_distance: DistanceWeighting::ALL[round % 7],
                join_merge: MergeMethod::ALL[round % 2],
                seed: round as u64,
                ..HeuristicConfig::default()
            };
            let run = solve(&i, &config);
            check_final_labels(&i, &run);
            if run.result.optimal {
                let want = brute_force(&i, DEFAULT_BRUTE_FORCE_CAP).unwrap().happy;
                assert_eq!(run.result.happy, want);
            }
        }
    }

    #[test]
    fn replayable() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let i = random_instance(&mut rng, 12);
        let config = HeuristicConfig {
            width: 3,
            join_loop: JoinLoop::Random,
            join_merge: MergeMethod::GreedyMatch,
            seed: 9,
            ..HeuristicConfig::default()
        };
        let a = solve(&i, &config);
        let b = solve(&i, &config);
        assert_eq!(a.result.colouring, b.result.colouring);
        assert_eq!(a.labels, b.labels);
    }
}
