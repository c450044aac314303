use std::collections::VecDeque;

use super::{validate_td, NodeId, TreeDecomposition};
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceNode {
    pub kind: NodeKind,
    /// Sorted.
    pub bag: Vec<Vertex>,
    pub children: Vec<NodeId>,
}

/// Rooted nice tree decomposition. Nodes are stored children-first, so
/// iterating `0..len()` is a bottom-up traversal and the root is last.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NiceTreeDecomposition {
    nodes: Vec<NiceNode>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TdStats {
    pub width: usize,
    pub node_count: usize,
    pub leaves: usize,
    pub introduces: usize,
    pub forgets: usize,
    pub joins: usize,
}

impl NiceTreeDecomposition {
    pub fn nodes(&self) -> &[NiceNode] {
        &self.nodes
    }

    pub fn node(&self, t: NodeId) -> &NiceNode {
        &self.nodes[t]
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> NodeId {
        self.nodes.len() - 1
    }

    pub fn width(&self) -> usize {
        self.nodes
            .iter()
            .map(|n| n.bag.len())
            .max()
            .unwrap_or(0)
            .saturating_sub(1)
    }

    /// Parent of every node; the root maps to `None`.
    pub fn parents(&self) -> Vec<Option<NodeId>> {
        let mut parent = vec![None; self.nodes.len()];
        for (t, node) in self.nodes.iter().enumerate() {
            for &c in &node.children {
                parent[c] = Some(t);
            }
        }
        parent
    }

    /// The same bags as a plain (unrooted) decomposition.
    pub fn to_tree_decomposition(&self) -> TreeDecomposition {
        let bags = self.nodes.iter().map(|n| n.bag.clone()).collect();
        let edges = self
            .nodes
            .iter()
            .enumerate()
            .flat_map(|(t, n)| n.children.iter().map(move |&c| (c, t)))
            .collect();
        TreeDecomposition::new(bags, edges)
    }

    /// Lists every violated structural condition (empty when nice and valid).
    pub fn violations(&self, g: &Graph) -> Vec<String> {
        let mut out = Vec::new();
        if self.nodes.is_empty() {
            out.push("no nodes".to_string());
            return out;
        }
        let root = self.root();
        if !self.nodes[root].bag.is_empty() {
            out.push("root bag is not empty".into());
        }
        for (t, node) in self.nodes.iter().enumerate() {
            if node.children.iter().any(|&c| c >= t) {
                out.push(format!("node {t} is stored before one of its children"));
            }
            let child_bag = |i: usize| &self.nodes[node.children[i]].bag;
            match node.kind {
                NodeKind::Leaf => {
                    if !node.children.is_empty() || !node.bag.is_empty() {
                        out.push(format!("leaf {t} has children or a nonempty bag"));
                    }
                }
                NodeKind::Introduce(v) => {
                    let mut expected = child_bag(0).clone();
                    let ok = node.children.len() == 1 && expected.binary_search(&v).is_err() && {
                        expected.push(v);
                        expected.sort_unstable();
                        expected == node.bag
                    };
                    if !ok {
                        out.push(format!("introduce node {t} of vertex {} is malformed", v + 1));
                    }
                }
                NodeKind::Forget(v) => {
                    let ok = node.children.len() == 1 && {
                        let mut expected = child_bag(0).clone();
                        match expected.binary_search(&v) {
                            Ok(i) => {
                                expected.remove(i);
                                expected == node.bag
                            }
                            Err(_) => false,
                        }
                    };
                    if !ok {
                        out.push(format!("forget node {t} of vertex {} is malformed", v + 1));
                    }
                }
                NodeKind::Join => {
                    if node.children.len() != 2
                        || *child_bag(0) != node.bag
                        || *child_bag(1) != node.bag
                    {
                        out.push(format!("join node {t} is malformed"));
                    }
                }
            }
        }
        let parents = self.parents();
        if parents.iter().filter(|p| p.is_none()).count() != 1 {
            out.push("more than one parentless node".into());
        }
        let rep = validate_td(g, &self.to_tree_decomposition());
        out.extend(rep.violations.iter().map(|v| v.to_string()));
        out
    }

    fn push(&mut self, kind: NodeKind, bag: Vec<Vertex>, children: Vec<NodeId>) -> NodeId {
        self.nodes.push(NiceNode {
            kind,
            bag,
            children,
        });
        self.nodes.len() - 1
    }

    /// Forgets `from \ to` then introduces `to \ from`, both ascending.
    fn chain(&mut self, mut top: NodeId, to: &[Vertex]) -> NodeId {
        let from = self.nodes[top].bag.clone();
        let mut bag = from.clone();
        for &v in from.iter().filter(|v| to.binary_search(v).is_err()) {
            let i = bag.binary_search(&v).unwrap();
            bag.remove(i);
            top = self.push(NodeKind::Forget(v), bag.clone(), vec![top]);
        }
        for &v in to.iter().filter(|v| from.binary_search(v).is_err()) {
            let i = bag.binary_search(&v).unwrap_err();
            bag.insert(i, v);
            top = self.push(NodeKind::Introduce(v), bag.clone(), vec![top]);
        }
        top
    }
}

/// Converts a valid decomposition into a nice one of no larger width, rooted
/// at bag 0.
pub fn make_nice(td: &TreeDecomposition, g: &Graph) -> Result<NiceTreeDecomposition> {
    let report = validate_td(g, td);
    if !report.is_valid() {
        let msg = report
            .violations
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join("; ");
        return Err(Error::InvalidDecomposition(msg));
    }

    let adj = td.adjacency();
    let mut order = Vec::with_capacity(td.node_count());
    let mut parent = vec![usize::MAX; td.node_count()];
    let mut seen = vec![false; td.node_count()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(t) = queue.pop_front() {
        order.push(t);
        for &s in &adj[t] {
            if !seen[s] {
                seen[s] = true;
                parent[s] = t;
                queue.push_back(s);
            }
        }
    }

    let mut nice = NiceTreeDecomposition {
        nodes: Vec::with_capacity(2 * td.node_count() * (td.width() + 2)),
    };
    // Nice node whose bag equals the bag of each processed TD node.
    let mut top: Vec<NodeId> = vec![usize::MAX; td.node_count()];
    let mut pending: Vec<Vec<NodeId>> = vec![Vec::new(); td.node_count()];
    for &t in order.iter().rev() {
        let target = td.bag(t);
        let mut branches = std::mem::take(&mut pending[t]);
        if branches.is_empty() {
            let leaf = nice.push(NodeKind::Leaf, Vec::new(), Vec::new());
            branches.push(leaf);
        }
        let tops: Vec<NodeId> = branches.into_iter().map(|b| nice.chain(b, target)).collect();
        let mut current = tops[0];
        for &other in &tops[1..] {
            current = nice.push(NodeKind::Join, target.to_vec(), vec![current, other]);
        }
        top[t] = current;
        if t != 0 {
            pending[parent[t]].push(current);
        }
    }
    nice.chain(top[0], &[]);
    Ok(nice)
}

pub fn td_stats(nice: &NiceTreeDecomposition) -> TdStats {
    let mut stats = TdStats {
        width: nice.width(),
        node_count: nice.len(),
        ..TdStats::default()
    };
    for node in nice.nodes() {
        match node.kind {
            NodeKind::Leaf => stats.leaves += 1,
            NodeKind::Introduce(_) => stats.introduces += 1,
            NodeKind::Forget(_) => stats.forgets += 1,
            NodeKind::Join => stats.joins += 1,
        }
    }
    stats
}
