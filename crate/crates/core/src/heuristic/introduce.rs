use super::tuple::{Cell, Label, Tuple};
use super::{Ctx, TupleList};
use crate::graph::{Colour, Vertex};

/// Colours the introduced vertex `v` in every child tuple.
pub(super) fn handle_introduce(ctx: &mut Ctx, v: Vertex, child: TupleList) -> TupleList {
    let mut main = ctx.new_list();
    let mut backup = ctx.new_list();
    let colours: Vec<Colour> = match ctx.pre.get(v) {
        Some(c) => vec![c],
        None => (1..=ctx.k).collect(),
    };
    let nbrs = ctx.g.neighbours(v);
    for tc in child.tuples() {
        let before = tc.label(v);
        for &i in &colours {
            if before == Label::UK {
                if ctx.conflict(tc, v, i) {
                    emit(ctx, &mut main, tc, v, i, Label::U, &[]);
                } else {
                    emit(ctx, &mut main, tc, v, i, Label::H, &[]);
                    emit(ctx, &mut main, tc, v, i, Label::PU, &[]);
                }
                continue;
            }
            let blocking: Vec<Vertex> = nbrs
                .iter()
                .copied()
                .filter(|&n| tc.label(n) == Label::H && tc.colour(n).is_some_and(|c| c != i))
                .collect();
            if !blocking.is_empty() {
                if main.is_empty() {
                    emit(ctx, &mut backup, tc, v, i, Label::U, &blocking);
                }
            } else if before == Label::PH && nbrs.iter().any(|&n| tc.colour(n) == Some(i)) {
                emit(ctx, &mut main, tc, v, i, Label::H, &[]);
                emit(ctx, &mut main, tc, v, i, Label::PU, &[]);
            } else {
                emit(ctx, &mut main, tc, v, i, Label::U, &[]);
            }
        }
    }
    if main.is_empty() {
        backup
    } else {
        main
    }
}

fn emit(ctx: &mut Ctx, list: &mut TupleList, tc: &Tuple, v: Vertex, i: Colour, label: Label, demote: &[Vertex]) {
    let mut t = tc.clone();
    for &d in demote {
        t.set_label(d, Label::U);
    }
    t.set_cell(v, Cell { colour: i as u16, label });
    for &n in ctx.g.neighbours(v) {
        match t.colour(n) {
            Some(c) => {
                debug_assert!(t.label(n) != Label::H || c == i);
                if t.label(n) == Label::PU && c != i {
                    t.set_label(n, Label::U);
                }
            }
            None => {
                let l = ctx.border_label(&t, n);
                t.set_label(n, l);
            }
        }
    }
    ctx.push(list, t);
}
