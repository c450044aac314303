//! Tree decompositions: validation, construction, PACE interop and the
//! conversion to nice form.

mod minfill;
mod nice;
mod pace;

pub use minfill::{elimination_order, min_fill_decompose};
pub use nice::{make_nice, td_stats, NiceNode, NiceTreeDecomposition, NodeKind, TdStats};
pub use pace::{parse_td, write_td};

use std::collections::VecDeque;

use crate::graph::{Graph, Vertex};

pub type NodeId = usize;

/// Unrooted tree decomposition. Bags are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    edges: Vec<(NodeId, NodeId)>,
}

impl TreeDecomposition {
    pub fn new(mut bags: Vec<Vec<Vertex>>, edges: Vec<(NodeId, NodeId)>) -> Self {
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        TreeDecomposition { bags, edges }
    }

    /// A single bag holding every vertex.
    pub fn trivial(g: &Graph) -> Self {
        TreeDecomposition::new(vec![g.vertices().collect()], Vec::new())
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn bag(&self, t: NodeId) -> &[Vertex] {
        &self.bags[t]
    }

    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub(crate) fn adjacency(&self) -> Vec<Vec<NodeId>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            if a < adj.len() && b < adj.len() {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        adj
    }

    /// `None` when the bag graph is a tree, otherwise a description.
    pub fn tree_defect(&self) -> Option<String> {
        let n = self.bags.len();
        if n == 0 {
            return Some("decomposition has no bags".into());
        }
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a >= n || b >= n || a == b) {
            return Some(format!("bad tree edge ({}, {})", a + 1, b + 1));
        }
        if self.edges.len() != n - 1 {
            return Some(format!(
                "{} bags need {} tree edges, found {}",
                n,
                n - 1,
                self.edges.len()
            ));
        }
        let adj = self.adjacency();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut queue = VecDeque::from([0]);
        let mut reached = 1;
        while let Some(t) = queue.pop_front() {
            for &s in &adj[t] {
                if !seen[s] {
                    seen[s] = true;
                    reached += 1;
                    queue.push_back(s);
                }
            }
        }
        (reached != n).then(|| "bag edges contain a cycle or are disconnected".to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TdViolation {
    NotATree(String),
    VertexOutOfRange { node: NodeId, vertex: Vertex },
    /// Property 1: a vertex in no bag.
    MissingVertex(Vertex),
    /// Property 2: an edge in no bag.
    UncoveredEdge(Vertex, Vertex),
    /// Property 3: the bags holding `vertex` split into these node groups.
    DisconnectedOccurrence { vertex: Vertex, parts: Vec<Vec<NodeId>> },
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NotATree(msg) => write!(f, "not a tree: {msg}"),
            TdViolation::VertexOutOfRange { node, vertex } => {
                write!(f, "bag {} holds unknown vertex {}", node + 1, vertex + 1)
            }
            TdViolation::MissingVertex(v) => write!(f, "vertex {} is in no bag", v + 1),
            TdViolation::UncoveredEdge(u, v) => {
                write!(f, "edge {{{}, {}}} is in no bag", u + 1, v + 1)
            }
            TdViolation::DisconnectedOccurrence { vertex, parts } => write!(
                f,
                "bags containing vertex {} form {} disconnected parts",
                vertex + 1,
                parts.len()
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TdReport {
    pub violations: Vec<TdViolation>,
    pub width: usize,
}

impl TdReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn validate_td(g: &Graph, td: &TreeDecomposition) -> TdReport {
    let mut violations = Vec::new();
    if let Some(msg) = td.tree_defect() {
        violations.push(TdViolation::NotATree(msg));
    }
    let n = g.n();
    let mut occurrences: Vec<Vec<NodeId>> = vec![Vec::new(); n];
    for (t, bag) in td.bags().iter().enumerate() {
        for &v in bag {
            if v >= n {
                violations.push(TdViolation::VertexOutOfRange { node: t, vertex: v });
            } else {
                occurrences[v].push(t);
            }
        }
    }
    for (v, occ) in occurrences.iter().enumerate() {
        if occ.is_empty() {
            violations.push(TdViolation::MissingVertex(v));
        }
    }
    for (u, v) in g.edges() {
        let covered = occurrences[u]
            .iter()
            .any(|&t| td.bag(t).binary_search(&v).is_ok());
        if !covered {
            violations.push(TdViolation::UncoveredEdge(u, v));
        }
    }

    let adj = td.adjacency();
    let mut mark = vec![usize::MAX; td.node_count()];
    for (v, occ) in occurrences.iter().enumerate() {
        if occ.len() < 2 {
            continue;
        }
        for &t in occ {
            mark[t] = v;
        }
        let mut parts: Vec<Vec<NodeId>> = Vec::new();
        let mut visited = vec![false; td.node_count()];
        for &start in occ {
            if visited[start] {
                continue;
            }
            let mut part = vec![start];
            visited[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(t) = queue.pop_front() {
                for &s in &adj[t] {
                    if mark[s] == v && !visited[s] {
                        visited[s] = true;
                        part.push(s);
                        queue.push_back(s);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        if parts.len() > 1 {
            violations.push(TdViolation::DisconnectedOccurrence { vertex: v, parts });
        }
    }
    TdReport {
        violations,
        width: td.width(),
    }
}
