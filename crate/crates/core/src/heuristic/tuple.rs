use std::sync::Arc;

use crate::graph::{Colour, Vertex};

/// Per-vertex state of a heuristic tuple.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    /// Coloured and required to be happy.
    H,
    /// Known to end up unhappy.
    U,
    /// Uncoloured border vertex whose coloured neighbours agree.
    PH,
    /// Bag vertex that is happy so far but not required to be.
    PU,
    /// Not yet relevant.
    #[default]
    UK,
}

impl Label {
    pub fn as_str(self) -> &'static str {
        match self {
            Label::H => "H",
            Label::U => "U",
            Label::PH => "P_H",
            Label::PU => "P_U",
            Label::UK => "UK",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LabelCounts {
    pub h: i64,
    pub u: i64,
    pub ph: i64,
    pub pu: i64,
}

impl LabelCounts {
    fn slot(&mut self, label: Label) -> Option<&mut i64> {
        match label {
            Label::H => Some(&mut self.h),
            Label::U => Some(&mut self.u),
            Label::PH => Some(&mut self.ph),
            Label::PU => Some(&mut self.pu),
            Label::UK => None,
        }
    }

    pub(crate) fn add(&mut self, label: Label, by: i64) {
        if let Some(c) = self.slot(label) {
            *c += by;
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub(crate) struct Cell {
    /// 0 while uncoloured.
    pub colour: u16,
    pub label: Label,
}

const CHUNK: usize = 64;

/// Copy-on-write vertex array: clones share chunks until one is written.
#[derive(Debug, Clone)]
struct Cells {
    chunks: Vec<Arc<[Cell; CHUNK]>>,
}

impl Cells {
    fn new(n: usize) -> Self {
        let blank = Arc::new([Cell::default(); CHUNK]);
        Cells {
            chunks: vec![blank; n.div_ceil(CHUNK)],
        }
    }

    fn get(&self, v: Vertex) -> Cell {
        self.chunks[v / CHUNK][v % CHUNK]
    }

    fn set(&mut self, v: Vertex, cell: Cell) {
        if self.get(v) != cell {
            Arc::make_mut(&mut self.chunks[v / CHUNK])[v % CHUNK] = cell;
        }
    }
}

/// A partial colouring of the processed subgraph together with a label for
/// every vertex of the graph.
#[derive(Debug, Clone)]
pub struct Tuple {
    cells: Cells,
    counts: LabelCounts,
    pub(crate) score: i64,
}

impl Tuple {
    /// All vertices uncoloured and unknown.
    pub(crate) fn empty(n: usize) -> Self {
        Tuple {
            cells: Cells::new(n),
            counts: LabelCounts::default(),
            score: 0,
        }
    }

    pub fn colour(&self, v: Vertex) -> Option<Colour> {
        match self.cells.get(v).colour {
            0 => None,
            c => Some(c as Colour),
        }
    }

    pub fn label(&self, v: Vertex) -> Label {
        self.cells.get(v).label
    }

    pub fn counts(&self) -> LabelCounts {
        self.counts
    }

    /// Weighted score as of the last time the tuple entered a list.
    pub fn score(&self) -> i64 {
        self.score
    }

    pub(crate) fn cell(&self, v: Vertex) -> Cell {
        self.cells.get(v)
    }

    pub(crate) fn set_cell(&mut self, v: Vertex, cell: Cell) {
        let old = self.cells.get(v);
        self.counts.add(old.label, -1);
        self.counts.add(cell.label, 1);
        self.cells.set(v, cell);
    }

    pub(crate) fn set_label(&mut self, v: Vertex, label: Label) {
        let colour = self.cells.get(v).colour;
        self.set_cell(v, Cell { colour, label });
    }

    /// Counts recomputed from the cells.
    pub fn recount(&self, n: usize) -> LabelCounts {
        let mut c = LabelCounts::default();
        for v in 0..n {
            c.add(self.label(v), 1);
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clones_are_independent() {
        let mut a = Tuple::empty(200);
        a.set_cell(5, Cell { colour: 2, label: Label::H });
        let mut b = a.clone();
        b.set_cell(150, Cell { colour: 1, label: Label::U });
        b.set_label(5, Label::U);
        assert_eq!(a.label(5), Label::H);
        assert_eq!(a.colour(150), None);
        assert_eq!(b.colour(150), Some(1));
        assert_eq!(a.counts(), LabelCounts { h: 1, ..LabelCounts::default() });
        assert_eq!(b.counts(), LabelCounts { u: 2, ..LabelCounts::default() });
        assert_eq!(b.recount(200), b.counts());
    }
}
