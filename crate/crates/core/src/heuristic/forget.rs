use std::collections::hash_map::Entry;
use std::collections::HashMap;

use super::tuple::{Cell, Label, Tuple};
use super::{better, Ctx, TupleList};
use crate::graph::Vertex;

/// Drops `v` from the bag, keeping the best tuple per bag assignment.
pub(super) fn handle_forget(ctx: &mut Ctx, bag: &[Vertex], v: Vertex, child: TupleList) -> TupleList {
    let mut kept: Vec<Tuple> = Vec::with_capacity(child.len());
    let mut index: HashMap<Vec<Cell>, usize> = HashMap::with_capacity(child.len());
    for mut t in child.into_tuples() {
        if t.label(v) == Label::PU {
            t.set_label(v, Label::H);
            t.score = ctx.config.weights.evaluate(t.counts());
        }
        let key: Vec<Cell> = bag.iter().map(|&u| t.cell(u)).collect();
        match index.entry(key) {
            Entry::Occupied(e) => {
                let slot = &mut kept[*e.get()];
                if better(&t, slot) {
                    *slot = t;
                }
            }
            Entry::Vacant(e) => {
                e.insert(kept.len());
                kept.push(t);
            }
        }
    }
    kept.sort_by_key(Tuple::score);
    TupleList::from_sorted(ctx.config.width, kept)
}
