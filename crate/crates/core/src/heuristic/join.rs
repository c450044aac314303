use std::collections::HashMap;

use rand::Rng;

use super::tuple::{Cell, Label, Tuple};
use super::{Ctx, DistanceWeighting, JoinLoop, MergeMethod, TupleList};
use crate::graph::Vertex;

/// Vertex sets shared by every tuple pair at one join node.
struct JoinInfo {
    bag: Vec<Vertex>,
    /// Vertices below each child that are not in the bag.
    side: [Vec<Vertex>; 2],
    /// Distance weight per bag position.
    weight: Vec<u64>,
    /// Below-bag vertices with a bag neighbour.
    adjacent_forgotten: Vec<Vertex>,
    /// Uncoloured vertices with a bag neighbour.
    border: Vec<Vertex>,
}

impl JoinInfo {
    fn new(ctx: &Ctx, bag: &[Vertex], t1: &Tuple, t2: &Tuple) -> Self {
        let g = ctx.g;
        let in_bag = |v: Vertex| bag.binary_search(&v).is_ok();
        let in_gt = |v: Vertex| t1.colour(v).is_some() || t2.colour(v).is_some();
        let side = [t1, t2].map(|t| g.vertices().filter(|&v| t.colour(v).is_some() && !in_bag(v)).collect());

        let mut around: Vec<Vertex> = bag
            .iter()
            .flat_map(|&v| g.neighbours(v).iter().copied())
            .filter(|&n| !in_bag(n))
            .collect();
        around.sort_unstable();
        around.dedup();
        let (adjacent_forgotten, border) = around.into_iter().partition(|&n| in_gt(n));

        let weight = bag
            .iter()
            .map(|&v| {
                let ext = g.neighbours(v).iter().filter(|&&n| !in_bag(n));
                let external = ext.clone().count() as u64;
                let bordering = ext.filter(|&&n| !in_gt(n)).count() as u64;
                let nonborder = external - bordering;
                match ctx.config.join_distance {
                    DistanceWeighting::AllOnes => 1,
                    DistanceWeighting::HasExternalNeighbour => (external > 0) as u64,
                    DistanceWeighting::HasBorderNeighbour => (bordering > 0) as u64,
                    DistanceWeighting::HasNonborderExternalNeighbour => (nonborder > 0) as u64,
                    DistanceWeighting::CountExternalNeighbours => external,
                    DistanceWeighting::CountBorderNeighbours => bordering,
                    DistanceWeighting::CountNonborderExternalNeighbours => nonborder,
                }
            })
            .collect();

        JoinInfo {
            bag: bag.to_vec(),
            side,
            weight,
            adjacent_forgotten,
            border,
        }
    }

    /// Bag colours plus whether each bag vertex must be happy.
    fn class_key(&self, t: &Tuple) -> Vec<(u16, bool)> {
        self.bag
            .iter()
            .map(|&v| (t.cell(v).colour, t.label(v) == Label::H))
            .collect()
    }

    fn distance(&self, a: &Tuple, b: &Tuple) -> u64 {
        self.bag
            .iter()
            .zip(&self.weight)
            .map(|(&v, &w)| {
                let (ca, cb) = (a.cell(v), b.cell(v));
                w * ((ca.colour != cb.colour) as u64 + (ca.label != cb.label) as u64)
            })
            .sum()
    }
}

/// Combines the tuples of the two children of a join node.
pub(super) fn handle_join(ctx: &mut Ctx, bag: &[Vertex], l1: TupleList, l2: TupleList) -> TupleList {
    let info = JoinInfo::new(ctx, bag, &l1.tuples()[0], &l2.tuples()[0]);
    let first_outer = match ctx.config.join_loop {
        JoinLoop::Random => ctx.rng.random_bool(0.5),
        JoinLoop::LargerList => l1.len() >= l2.len(),
        JoinLoop::SmallerList => l1.len() <= l2.len(),
    };
    let (outer, inner, o, i) = if first_outer {
        (l1.tuples(), l2.tuples(), 0, 1)
    } else {
        (l2.tuples(), l1.tuples(), 1, 0)
    };

    // Among inner tuples with the same bag colours and happy set, the one
    // with most required-happy vertices is the best partner.
    let mut matches: HashMap<Vec<(u16, bool)>, usize> = HashMap::with_capacity(inner.len());
    for (j, t) in inner.iter().enumerate() {
        matches
            .entry(info.class_key(t))
            .and_modify(|b| {
                if t.counts().h > inner[*b].counts().h {
                    *b = j;
                }
            })
            .or_insert(j);
    }

    let mut main = ctx.new_list();
    let mut backup = ctx.new_list();
    for to in outer {
        if let Some(&j) = matches.get(&info.class_key(to)) {
            let merged = merge_exact(&info, to, o, &inner[j], i);
            ctx.push(&mut main, merged);
        } else if main.is_empty() {
            let mut best = 0;
            let mut best_d = u64::MAX;
            for (j, ti) in inner.iter().enumerate() {
                let d = info.distance(to, ti);
                if d < best_d {
                    best = j;
                    best_d = d;
                }
            }
            let ti = &inner[best];
            match ctx.config.join_merge {
                MergeMethod::CopyBag => {
                    let a = copy_onto(ctx, &info, to, ti, i);
                    let b = copy_onto(ctx, &info, ti, to, o);
                    ctx.push(&mut backup, a);
                    ctx.push(&mut backup, b);
                }
                MergeMethod::GreedyMatch => {
                    let t = greedy_match(ctx, &info, to, ti, i);
                    ctx.push(&mut backup, t);
                }
            }
        }
    }
    if main.is_empty() {
        backup
    } else {
        main
    }
}

/// Union of two tuples that agree on bag colours and on which bag vertices
/// must be happy.
fn merge_exact(info: &JoinInfo, a: &Tuple, a_side: usize, b: &Tuple, b_side: usize) -> Tuple {
    let (base, donor, donor_side) = if info.side[a_side].len() >= info.side[b_side].len() {
        (a, b, b_side)
    } else {
        (b, a, a_side)
    };
    let mut t = base.clone();
    for &v in &info.side[donor_side] {
        t.set_cell(v, donor.cell(v));
    }
    for &v in &info.bag {
        let label = match (a.label(v), b.label(v)) {
            (Label::H, _) => Label::H,
            (Label::U, _) | (_, Label::U) => Label::U,
            _ => Label::PU,
        };
        t.set_label(v, label);
    }
    t
}

/// `base` everywhere except below the donor's child, then labels repaired.
fn copy_onto(ctx: &Ctx, info: &JoinInfo, base: &Tuple, donor: &Tuple, donor_side: usize) -> Tuple {
    let mut t = base.clone();
    for &v in &info.side[donor_side] {
        t.set_cell(v, donor.cell(v));
    }
    repair(ctx, info, &mut t);
    t
}

/// Keeps agreeing bag decisions, spreads the colour of vertices that may be
/// happy to their bag neighbours, and settles the rest at random.
fn greedy_match(ctx: &mut Ctx, info: &JoinInfo, to: &Tuple, ti: &Tuple, i_side: usize) -> Tuple {
    let g = ctx.g;
    let mut t = to.clone();
    for &v in &info.side[i_side] {
        t.set_cell(v, ti.cell(v));
    }
    let bag = &info.bag;
    let mut settled = vec![false; bag.len()];
    let mut queue = Vec::new();
    for (p, &v) in bag.iter().enumerate() {
        let (a, b) = (to.cell(v), ti.cell(v));
        if a.colour == b.colour {
            let rank = |l: Label| match l {
                Label::H => 0,
                Label::PU => 1,
                _ => 2,
            };
            let label = if rank(a.label) <= rank(b.label) { a.label } else { b.label };
            t.set_cell(v, Cell { colour: a.colour, label });
            settled[p] = true;
            if label != Label::U {
                queue.push(p);
            }
        } else {
            t.set_cell(v, Cell::default());
        }
    }

    loop {
        while let Some(p) = queue.pop() {
            let colour = t.cell(bag[p]).colour;
            for q in 0..bag.len() {
                if settled[q] || !g.has_edge(bag[p], bag[q]) {
                    continue;
                }
                settled[q] = true;
                let label = if ctx.conflict(&t, bag[q], colour as u32) {
                    Label::U
                } else {
                    queue.push(q);
                    Label::H
                };
                t.set_cell(bag[q], Cell { colour, label });
            }
        }
        let Some(p) = settled.iter().position(|s| !s) else {
            break;
        };
        let v = bag[p];
        let from = if ctx.rng.random_bool(0.5) { to } else { ti };
        let cell = from.cell(v);
        settled[p] = true;
        t.set_cell(v, Cell { colour: cell.colour, label: Label::UK });
        let label = if cell.label == Label::H && !ctx.conflict(&t, v, cell.colour as u32) {
            Label::H
        } else {
            ctx.free_label(&t, v)
        };
        t.set_label(v, label);
        if label != Label::U {
            queue.push(p);
        }
    }
    repair(ctx, info, &mut t);
    t
}

/// Makes every label around the bag consistent with the colouring.
fn repair(ctx: &Ctx, info: &JoinInfo, t: &mut Tuple) {
    for &v in &info.bag {
        let label = match t.label(v) {
            Label::H if !ctx.conflict(t, v, t.cell(v).colour as u32) => Label::H,
            _ => ctx.free_label(t, v),
        };
        t.set_label(v, label);
    }
    for &v in &info.adjacent_forgotten {
        let happy = !ctx.conflict(t, v, t.cell(v).colour as u32);
        t.set_label(v, if happy { Label::H } else { Label::U });
    }
    for &v in &info.border {
        let label = ctx.border_label(t, v);
        t.set_label(v, label);
    }
}
