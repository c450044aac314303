//! Exact dynamic program over a nice tree decomposition.
//!
//! A state at node `t` fixes a colour and a mark for every vertex of the bag:
//! `H` vertices must be happy inside `G_t`, `U` vertices are unconstrained.
//! Its value is the largest number of `H`-marked vertices (bag and forgotten)
//! over colourings of `G_t` that respect the marks. Only reachable states are
//! stored.
//!
//! By default one precoloured vertex per colour (the lowest-numbered one) is
//! added to every bag.

use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{Colour, FullColouring, Instance, Vertex};
use crate::solution::SolveResult;
use crate::treedec::{NiceTreeDecomposition, NodeId, NodeKind};

pub const DEFAULT_STATE_CAP: usize = 4_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactOptions {
    /// Largest number of states any single node may hold.
    pub state_cap: usize,
    /// Add the colour representatives to every bag.
    pub augment: bool,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            state_cap: DEFAULT_STATE_CAP,
            augment: true,
        }
    }
}

/// The lowest-numbered vertex of each colour.
pub fn s_star(inst: &Instance) -> Result<Vec<Vertex>> {
    inst.colouring
        .class_representatives()
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or(Error::MissingColourClass(i as u32 + 1)))
        .collect()
}

/// Colour and mark of one bag vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub colour: Colour,
    pub happy: bool,
}

fn encode(c: Cell) -> u8 {
    ((c.colour - 1) * 2) as u8 + c.happy as u8
}

fn decode(e: u8) -> Cell {
    Cell {
        colour: (e / 2) as Colour + 1,
        happy: e & 1 == 1,
    }
}

/// States of one node as flat, lexicographically sorted keys.
#[derive(Debug, Clone, Default)]
struct Table {
    stride: usize,
    keys: Vec<u8>,
    values: Vec<u32>,
    /// For forget nodes, the encoded cell of the forgotten vertex in the
    /// child state that attained the value.
    choices: Vec<u8>,
}

impl Table {
    fn new(stride: usize) -> Self {
        Table {
            stride,
            ..Table::default()
        }
    }

    fn len(&self) -> usize {
        self.values.len()
    }

    fn key(&self, i: usize) -> &[u8] {
        &self.keys[i * self.stride..(i + 1) * self.stride]
    }

    fn find(&self, key: &[u8]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.key(mid).cmp(key) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    fn push(&mut self, key: &[u8], value: u32, choice: u8) {
        self.keys.extend_from_slice(key);
        self.values.push(value);
        self.choices.push(choice);
    }

    /// Sorts by key and keeps the first maximum of each run of equal keys.
    fn finish(self) -> Table {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.key(a).cmp(self.key(b)));
        let mut out = Table::new(self.stride);
        for i in order {
            let last = out.len().checked_sub(1);
            match last {
                Some(l) if out.key(l) == self.key(i) => {
                    if self.values[i] > out.values[l] {
                        out.values[l] = self.values[i];
                        out.choices[l] = self.choices[i];
                    }
                }
                _ => out.push(self.key(i), self.values[i], self.choices[i]),
            }
        }
        out
    }
}

/// All state tables of a solved decomposition.
#[derive(Debug, Clone)]
pub struct ExactTables<'a> {
    inst: &'a Instance,
    nice: &'a NiceTreeDecomposition,
    bags: Vec<Vec<Vertex>>,
    /// Nodes that add or remove an always-present vertex share their
    /// child's table.
    table_of: Vec<usize>,
    tables: Vec<Table>,
}

impl<'a> ExactTables<'a> {
    pub fn build(inst: &'a Instance, nice: &'a NiceTreeDecomposition, opts: &ExactOptions) -> Result<Self> {
        let g = &inst.graph;
        let k = inst.k();
        if k == 0 || k > 127 {
            return Err(Error::InvalidParams(format!("k = {k} outside 1..=127")));
        }
        if nice.nodes().iter().flat_map(|n| &n.bag).any(|&v| v >= g.n()) {
            return Err(Error::InvalidDecomposition("bag vertex outside the graph".into()));
        }
        let fixed = if opts.augment { s_star(inst)? } else { Vec::new() };
        let mut fixed_sorted = fixed.clone();
        fixed_sorted.sort_unstable();
        let in_fixed = |v: Vertex| fixed_sorted.binary_search(&v).is_ok();

        let bags: Vec<Vec<Vertex>> = nice
            .nodes()
            .iter()
            .map(|node| {
                let mut b = node.bag.clone();
                b.extend(fixed_sorted.iter().filter(|v| node.bag.binary_search(v).is_err()));
                b.sort_unstable();
                b
            })
            .collect();

        let colour_choices = |v: Vertex| -> Vec<Colour> {
            match inst.colouring.get(v) {
                Some(c) => vec![c],
                None => (1..=k).collect(),
            }
        };

        let mut table_of = vec![usize::MAX; nice.len()];
        let mut tables: Vec<Table> = Vec::new();
        for t in 0..nice.len() {
            let node = nice.node(t);
            let bag = &bags[t];
            let stride = bag.len();
            let table = match node.kind {
                NodeKind::Leaf => {
                    // The bag holds exactly the fixed vertices.
                    let cols: Vec<Colour> = bag.iter().map(|&v| inst.colouring.get(v).unwrap()).collect();
                    let mut table = Table::new(stride);
                    let mut key = vec![0u8; stride];
                    for mask in 0u32..(1 << stride) {
                        let marked = |i: usize| mask >> i & 1 == 1;
                        let ok = (0..stride).filter(|&i| marked(i)).all(|i| {
                            (0..stride).all(|j| cols[j] == cols[i] || !g.has_edge(bag[i], bag[j]))
                        });
                        if ok {
                            for i in 0..stride {
                                key[i] = encode(Cell {
                                    colour: cols[i],
                                    happy: marked(i),
                                });
                            }
                            table.push(&key, mask.count_ones(), 0);
                        }
                    }
                    table.finish()
                }
                NodeKind::Introduce(v) | NodeKind::Forget(v) if in_fixed(v) => {
                    table_of[t] = table_of[node.children[0]];
                    continue;
                }
                NodeKind::Introduce(v) => {
                    let child = &tables[table_of[node.children[0]]];
                    let child_bag = &bags[node.children[0]];
                    let p = bag.binary_search(&v).unwrap();
                    let nbrs: Vec<usize> = (0..child_bag.len())
                        .filter(|&q| g.has_edge(v, child_bag[q]))
                        .collect();
                    let choices = colour_choices(v);
                    let mut out = Table::new(stride);
                    let mut key = vec![0u8; stride];
                    for s in 0..child.len() {
                        let ck = child.key(s);
                        key[..p].copy_from_slice(&ck[..p]);
                        key[p + 1..].copy_from_slice(&ck[p..]);
                        for &i in &choices {
                            // A happy neighbour of another colour rules out colour i.
                            let conflict = nbrs.iter().map(|&q| decode(ck[q])).filter(|c| c.colour != i);
                            let mut mixed = false;
                            let mut blocked = false;
                            for c in conflict {
                                mixed = true;
                                blocked |= c.happy;
                            }
                            if blocked {
                                continue;
                            }
                            for happy in [false, true] {
                                if happy && mixed {
                                    continue;
                                }
                                key[p] = encode(Cell { colour: i, happy });
                                out.push(&key, child.values[s] + happy as u32, 0);
                            }
                        }
                        if out.len() > opts.state_cap {
                            return Err(state_cap_error(t, opts.state_cap));
                        }
                    }
                    out.finish()
                }
                NodeKind::Forget(v) => {
                    let child = &tables[table_of[node.children[0]]];
                    let p = bags[node.children[0]].binary_search(&v).unwrap();
                    let mut out = Table::new(stride);
                    let mut key = vec![0u8; stride];
                    for s in 0..child.len() {
                        let ck = child.key(s);
                        key[..p].copy_from_slice(&ck[..p]);
                        key[p..].copy_from_slice(&ck[p + 1..]);
                        out.push(&key, child.values[s], ck[p]);
                    }
                    out.finish()
                }
                NodeKind::Join => {
                    let a = &tables[table_of[node.children[0]]];
                    let b = &tables[table_of[node.children[1]]];
                    let mut out = Table::new(stride);
                    for s in 0..a.len() {
                        let key = a.key(s);
                        if let Some(r) = b.find(key) {
                            let marked = key.iter().filter(|&&e| e & 1 == 1).count() as u32;
                            out.push(key, a.values[s] + b.values[r] - marked, 0);
                        }
                    }
                    out
                }
            };
            if table.len() > opts.state_cap {
                return Err(state_cap_error(t, opts.state_cap));
            }
            table_of[t] = tables.len();
            tables.push(table);
        }
        Ok(ExactTables {
            inst,
            nice,
            bags,
            table_of,
            tables,
        })
    }

    fn table(&self, t: NodeId) -> &Table {
        &self.tables[self.table_of[t]]
    }

    /// The bag of `t`, including any always-present vertices.
    pub fn bag(&self, t: NodeId) -> &[Vertex] {
        &self.bags[t]
    }

    pub fn state_count(&self, t: NodeId) -> usize {
        self.table(t).len()
    }

    /// Every stored state of `t` with its value, in key order.
    pub fn states(&self, t: NodeId) -> impl Iterator<Item = (Vec<Cell>, u32)> + '_ {
        let table = self.table(t);
        (0..table.len()).map(move |s| (table.key(s).iter().map(|&e| decode(e)).collect(), table.values[s]))
    }

    /// Value of the state given by one cell per bag vertex, if it is reachable.
    pub fn value(&self, t: NodeId, cells: &[Cell]) -> Option<u32> {
        let key: Vec<u8> = cells.iter().map(|&c| encode(c)).collect();
        let table = self.table(t);
        table.find(&key).map(|s| table.values[s])
    }

    /// Best value at the root, `None` when no state survived.
    pub fn optimum(&self) -> Option<u32> {
        self.table(self.nice.root()).values.iter().copied().max()
    }

    /// Colours every vertex of `G_t` by following a state's best derivation
    /// down to the leaves. Vertices outside `G_t` stay `None`.
    pub fn reconstruct(&self, t: NodeId, cells: &[Cell]) -> Option<Vec<Option<Colour>>> {
        let key: Vec<u8> = cells.iter().map(|&c| encode(c)).collect();
        self.table(t).find(&key)?;
        let mut colours = vec![None; self.inst.graph.n()];
        let mut stack = vec![(t, key)];
        while let Some((t, key)) = stack.pop() {
            for (&v, &e) in self.bags[t].iter().zip(&key) {
                colours[v] = Some(decode(e).colour);
            }
            let node = self.nice.node(t);
            match node.kind {
                NodeKind::Leaf => {}
                NodeKind::Join => {
                    stack.push((node.children[0], key.clone()));
                    stack.push((node.children[1], key));
                }
                NodeKind::Introduce(v) => {
                    let mut ck = key;
                    if self.bags[node.children[0]].len() != self.bags[t].len() {
                        ck.remove(self.bags[t].binary_search(&v).unwrap());
                    }
                    stack.push((node.children[0], ck));
                }
                NodeKind::Forget(v) => {
                    let mut ck = key;
                    let child_bag = &self.bags[node.children[0]];
                    if child_bag.len() != self.bags[t].len() {
                        let table = self.table(t);
                        let s = table.find(&ck).expect("state reached from a parent exists");
                        let p = child_bag.binary_search(&v).unwrap();
                        ck.insert(p, table.choices[s]);
                    }
                    stack.push((node.children[0], ck));
                }
            }
        }
        Some(colours)
    }

    /// A best root state's colouring of the whole graph.
    pub fn best_colouring(&self) -> Option<FullColouring> {
        let root = self.nice.root();
        let table = self.table(root);
        let best = (0..table.len()).max_by_key(|&s| (table.values[s], std::cmp::Reverse(s)))?;
        let cells: Vec<Cell> = table.key(best).iter().map(|&e| decode(e)).collect();
        let colours = self.reconstruct(root, &cells)?;
        let colours = colours.into_iter().map(|c| c.unwrap_or(1)).collect();
        FullColouring::new(self.inst.k(), colours).ok()
    }
}

fn state_cap_error(t: NodeId, cap: usize) -> Error {
    Error::ResourceLimit(format!("node {t} needs more than {cap} states"))
}

/// Solves the instance exactly on the given decomposition.
pub fn solve_exact(inst: &Instance, nice: &NiceTreeDecomposition, opts: &ExactOptions) -> Result<SolveResult> {
    let start = Instant::now();
    let tables = ExactTables::build(inst, nice, opts)?;
    let colouring = tables
        .best_colouring()
        .ok_or_else(|| Error::InvalidDecomposition("no state reaches the root".into()))?;
    let result = SolveResult::new(&inst.graph, colouring, true, start.elapsed());
    debug_assert_eq!(Some(result.happy as u32), tables.optimum());
    Ok(result)
}
