//! Graphs, colourings and happiness evaluation.
//!
//! Vertices are `0..n` internally. The file formats in [`crate::io`] use the
//! 1-indexed PACE convention and convert at the boundary.

use std::collections::VecDeque;

use crate::error::{Error, Result};

pub type Vertex = usize;
/// Colours are `1..=k`.
pub type Colour = u32;

/// Immutable simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    edge_count: usize,
    max_degree: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are collapsed,
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{}, {}}} out of range for {} vertices",
                    u + 1,
                    v + 1,
                    n
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {}", u + 1)));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
            nbrs.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        let max_degree = adjacency.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Graph {
            adjacency,
            edge_count,
            max_degree,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
            max_degree: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbour list.
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in self.neighbours(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }
}

/// A colouring that may leave vertices uncoloured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring {
    k: u32,
    assignment: Vec<Option<Colour>>,
}

impl PartialColouring {
    pub fn new(n: usize, k: u32) -> Self {
        PartialColouring {
            k,
            assignment: vec![None; n],
        }
    }

    pub fn from_assignment(k: u32, assignment: Vec<Option<Colour>>) -> Result<Self> {
        if let Some((v, c)) = assignment
            .iter()
            .enumerate()
            .find_map(|(v, c)| c.filter(|&c| c == 0 || c > k).map(|c| (v, c)))
        {
            return Err(Error::InvalidColouring(format!(
                "vertex {} has colour {} outside 1..={}",
                v + 1,
                c,
                k
            )));
        }
        Ok(PartialColouring { k, assignment })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn get(&self, v: Vertex) -> Option<Colour> {
        self.assignment[v]
    }

    pub fn set(&mut self, v: Vertex, colour: Colour) -> Result<()> {
        if colour == 0 || colour > self.k {
            return Err(Error::InvalidColouring(format!(
                "colour {} outside 1..={}",
                colour, self.k
            )));
        }
        self.assignment[v] = Some(colour);
        Ok(())
    }

    pub fn assignment(&self) -> &[Option<Colour>] {
        &self.assignment
    }

    pub fn coloured_count(&self) -> usize {
        self.assignment.iter().filter(|c| c.is_some()).count()
    }

    pub fn uncoloured(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .map(|(v, _)| v)
    }

    /// Lowest-numbered vertex of each colour, `None` for empty classes.
    pub fn class_representatives(&self) -> Vec<Option<Vertex>> {
        let mut reps = vec![None; self.k as usize];
        for (v, c) in self.assignment.iter().enumerate() {
            if let Some(c) = c {
                let slot = &mut reps[*c as usize - 1];
                if slot.is_none() {
                    *slot = Some(v);
                }
            }
        }
        reps
    }

    /// Returns the colouring as a total one when every vertex is coloured.
    pub fn to_full(&self) -> Option<FullColouring> {
        let colours = self.assignment.iter().copied().collect::<Option<Vec<_>>>()?;
        Some(FullColouring { k: self.k, colours })
    }
}

/// A total colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FullColouring {
    k: u32,
    colours: Vec<Colour>,
}

impl FullColouring {
    pub fn new(k: u32, colours: Vec<Colour>) -> Result<Self> {
        if let Some((v, &c)) = colours.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::InvalidColouring(format!(
                "vertex {} has colour {} outside 1..={}",
                v + 1,
                c,
                k
            )));
        }
        Ok(FullColouring { k, colours })
    }

    /// Colours every vertex with `colour`, keeping the fixed ones of `partial`.
    pub fn complete_with(partial: &PartialColouring, colour: Colour) -> Self {
        FullColouring {
            k: partial.k(),
            colours: partial.assignment().iter().map(|c| c.unwrap_or(colour)).collect(),
        }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn get(&self, v: Vertex) -> Colour {
        self.colours[v]
    }

    pub fn as_slice(&self) -> &[Colour] {
        &self.colours
    }

    /// True when this colouring agrees with `partial` on every coloured vertex.
    pub fn extends(&self, partial: &PartialColouring) -> bool {
        self.colours.len() == partial.n()
            && partial
                .assignment()
                .iter()
                .zip(&self.colours)
                .all(|(p, c)| p.is_none_or(|p| p == *c))
    }
}

/// A graph together with its precolouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub colouring: PartialColouring,
}

impl Instance {
    pub fn new(graph: Graph, colouring: PartialColouring) -> Result<Self> {
        if graph.n() != colouring.n() {
            return Err(Error::InvalidColouring(format!(
                "colouring covers {} vertices but graph has {}",
                colouring.n(),
                graph.n()
            )));
        }
        Ok(Instance { graph, colouring })
    }

    pub fn k(&self) -> u32 {
        self.colouring.k()
    }
}

/// A vertex is happy iff every neighbour shares its colour. Isolated vertices
/// are happy.
pub fn is_happy(g: &Graph, col: &FullColouring, v: Vertex) -> bool {
    let cv = col.get(v);
    g.neighbours(v).iter().all(|&u| col.get(u) == cv)
}

pub fn count_happy(g: &Graph, col: &FullColouring) -> usize {
    g.vertices().filter(|&v| is_happy(g, col, v)).count()
}

/// Fraction of happy vertices in `[0, 1]`; an empty graph counts as fully happy.
pub fn percent_happy(g: &Graph, happy: usize) -> f64 {
    if g.n() == 0 {
        1.0
    } else {
        happy as f64 / g.n() as f64
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceReport {
    pub n: usize,
    pub k: u32,
    pub coloured: usize,
    /// Colours in `1..=k` with no precoloured vertex.
    pub empty_classes: Vec<Colour>,
    pub connected: bool,
    pub components: usize,
}

impl InstanceReport {
    /// The exact solver needs one precoloured vertex of every colour.
    pub fn exact_solver_available(&self) -> bool {
        self.empty_classes.is_empty()
    }

    pub fn messages(&self) -> Vec<String> {
        let mut out = Vec::new();
        if !self.empty_classes.is_empty() {
            let list = self
                .empty_classes
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            out.push(format!("colour classes {list} empty; exact solver unavailable"));
        }
        if !self.connected {
            out.push(format!("graph has {} connected components", self.components));
        }
        out
    }
}

pub fn validate_instance(inst: &Instance) -> InstanceReport {
    let reps = inst.colouring.class_representatives();
    let empty_classes = reps
        .iter()
        .enumerate()
        .filter(|(_, r)| r.is_none())
        .map(|(i, _)| i as Colour + 1)
        .collect();
    let components = inst.graph.components().len();
    InstanceReport {
        n: inst.graph.n(),
        k: inst.k(),
        coloured: inst.colouring.coloured_count(),
        empty_classes,
        connected: components <= 1,
        components,
    }
}
