//! The triangle graph T and equality graphs of patterns.
//!
//! Nodes are pattern positions (i, j): row i (0 on top, so row i has n - i
//! entries) and 1-based position j. Node (i, j) with i >= 1 is adjacent to
//! its two upper neighbours (i-1, j) and (i-1, j+1); the defining
//! inequalities run `x[i-1, j] >= x[i, j] >= x[i-1, j+1]`,
//! so each edge carries an orientation: across an `UpperLeft` edge the upper
//! node dominates, across an `UpperRight` edge the lower node dominates.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pattern::GTPattern;

/// (row, position), both as in the pattern: row 0 is the fixed top row.
pub type Node = (usize, usize);

/// All C(n+1, 2) nodes in (i, j)-major order, the coordinate order used for
/// every flattened vector in this crate.
pub fn triangle_nodes(n: usize) -> Vec<Node> {
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for i in 0..n {
        for j in 1..=(n - i) {
            out.push((i, j));
        }
    }
    out
}

pub fn node_in_triangle(n: usize, node: Node) -> bool {
    node.0 < n && node.1 >= 1 && node.1 <= n - node.0
}

/// Index of a node in the (i, j)-major flattening.
pub fn coord_index(n: usize, node: Node) -> usize {
    debug_assert!(node_in_triangle(n, node));
    let (i, j) = node;
    // rows 0..i contribute n, n-1, ..., n-i+1 entries
    let before: usize = (0..i).map(|r| n - r).sum();
    before + (j - 1)
}

pub fn ambient_dim(n: usize) -> usize {
    n * (n + 1) / 2
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub enum EdgeKind {
    /// Edge {(i,j), (i-1,j)}: constraint x[upper] - x[lower] >= 0.
    UpperLeft,
    /// Edge {(i,j), (i-1,j+1)}: constraint x[lower] - x[upper] >= 0.
    UpperRight,
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Edge {
    pub upper: Node,
    pub lower: Node,
    pub kind: EdgeKind,
}

impl Edge {
    /// The functional that is >= 0 on the feasible side, as
    /// (dominating node, dominated node).
    pub fn ge_pair(&self) -> (Node, Node) {
        match self.kind {
            EdgeKind::UpperLeft => (self.upper, self.lower),
            EdgeKind::UpperRight => (self.lower, self.upper),
        }
    }

    pub fn touches(&self, node: Node) -> bool {
        self.upper == node || self.lower == node
    }
}

/// Both potential upward edges of a node, while they exist in T(n).
pub fn upward_edges(n: usize, node: Node) -> Vec<Edge> {
    let (i, j) = node;
    let mut out = Vec::new();
    if i == 0 {
        return out;
    }
    if node_in_triangle(n, (i - 1, j)) {
        out.push(Edge {
            upper: (i - 1, j),
            lower: node,
            kind: EdgeKind::UpperLeft,
        });
    }
    if node_in_triangle(n, (i - 1, j + 1)) {
        out.push(Edge {
            upper: (i - 1, j + 1),
            lower: node,
            kind: EdgeKind::UpperRight,
        });
    }
    out
}

/// All edges of the triangle graph T(n).
pub fn triangle_edges(n: usize) -> Vec<Edge> {
    triangle_nodes(n)
        .into_iter()
        .flat_map(|node| upward_edges(n, node))
        .collect()
}

fn connected(nodes: &BTreeSet<Node>, edges: &[Edge]) -> bool {
    let Some(&start) = nodes.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for e in edges {
            if e.touches(v) {
                let other = if e.upper == v { e.lower } else { e.upper };
                if nodes.contains(&other) && seen.insert(other) {
                    stack.push(other);
                }
            }
        }
    }
    seen.len() == nodes.len()
}

/// The equality graph of a pattern: the subgraph of T(n) on all nodes, with
/// an edge wherever the two endpoint entries are equal. A pattern is a
/// polytope vertex exactly when every node below row 0 has at least one
/// upward edge here.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    n: usize,
    edges: Vec<Edge>,
}

impl GammaGraph {
    pub fn from_pattern(p: &GTPattern) -> Self {
        let n = p.n();
        let edges = triangle_edges(n)
            .into_iter()
            .filter(|e| p.entry(e.upper) == p.entry(e.lower))
            .collect();
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn num_nodes(&self) -> usize {
        ambient_dim(self.n)
    }

    /// Connected components as sorted node lists, sorted by first node.
    pub fn components(&self) -> Vec<Vec<Node>> {
        let nodes = triangle_nodes(self.n);
        let mut parent: BTreeMap<Node, Node> = nodes.iter().map(|&v| (v, v)).collect();

        fn find(parent: &mut BTreeMap<Node, Node>, v: Node) -> Node {
            let mut root = v;
            while parent[&root] != root {
                root = parent[&root];
            }
            let mut cur = v;
            while parent[&cur] != root {
                let next = parent[&cur];
                parent.insert(cur, root);
                cur = next;
            }
            root
        }

        for e in &self.edges {
            let a = find(&mut parent, e.upper);
            let b = find(&mut parent, e.lower);
            if a != b {
                parent.insert(a, b);
            }
        }

        let mut groups: BTreeMap<Node, Vec<Node>> = BTreeMap::new();
        for &v in &nodes {
            let root = find(&mut parent, v);
            groups.entry(root).or_default().push(v);
        }
        let mut out: Vec<Vec<Node>> = groups.into_values().collect();
        for g in &mut out {
            g.sort();
        }
        out.sort();
        out
    }

    /// A graph on N nodes with E edges and C components is a forest iff
    /// E = N - C.
    pub fn is_acyclic(&self) -> bool {
        self.edges.len() == self.num_nodes() - self.components().len()
    }

    /// Edges induced on a node subset.
    pub fn edges_within(&self, nodes: &BTreeSet<Node>) -> Vec<Edge> {
        self.edges
            .iter()
            .filter(|e| nodes.contains(&e.upper) && nodes.contains(&e.lower))
            .copied()
            .collect()
    }
}

/// A connected induced subgraph of T(n) with "property A" (whenever it
/// contains the row neighbours (i,j) and (i,j+1) it also contains their two
/// common neighbours (i-1,j+1) and (i+1,j)) and a single node in its top
/// occupied row.
///
/// These are exactly the shapes that occur as equality-graph components for
/// regular top rows, and the shapes into which extreme rays split.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinarySubgraph {
    n: usize,
    nodes: BTreeSet<Node>,
    top: Node,
}

impl OrdinarySubgraph {
    pub fn try_new(n: usize, nodes: BTreeSet<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::NotOrdinary("empty node set".into()));
        }
        for &v in &nodes {
            if !node_in_triangle(n, v) {
                return Err(Error::NodeOutOfRange(v, n));
            }
        }
        let top_row = nodes.iter().map(|v| v.0).min().unwrap();
        let top_nodes: Vec<Node> = nodes.iter().filter(|v| v.0 == top_row).copied().collect();
        if top_nodes.len() != 1 {
            return Err(Error::NotOrdinary(format!(
                "top row {top_row} holds {} nodes",
                top_nodes.len()
            )));
        }
        if !property_a(n, &nodes) {
            return Err(Error::NotOrdinary("property A fails".into()));
        }
        let edges: Vec<Edge> = triangle_edges(n)
            .into_iter()
            .filter(|e| nodes.contains(&e.upper) && nodes.contains(&e.lower))
            .collect();
        if !connected(&nodes, &edges) {
            return Err(Error::NotOrdinary("not connected".into()));
        }
        Ok(Self {
            n,
            nodes,
            top: top_nodes[0],
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    pub fn top(&self) -> Node {
        self.top
    }

    /// Induced edges from T(n).
    pub fn edges(&self) -> Vec<Edge> {
        triangle_edges(self.n)
            .into_iter()
            .filter(|e| self.nodes.contains(&e.upper) && self.nodes.contains(&e.lower))
            .collect()
    }
}

/// Property A over the nodes of T(n): containing (i,j) and (i,j+1) requires
/// containing both common neighbours, which must exist ((i-1,j+1) does not
/// for i = 0, so adjacent row-0 pairs always fail).
pub fn property_a(n: usize, nodes: &BTreeSet<Node>) -> bool {
    for &(i, j) in nodes.iter() {
        if nodes.contains(&(i, j + 1)) && node_in_triangle(n, (i, j + 1)) {
            if i == 0 {
                return false;
            }
            if !nodes.contains(&(i - 1, j + 1)) || !nodes.contains(&(i + 1, j)) {
                return false;
            }
        }
    }
    true
}

/// Connectivity of a node set inside T(n) using induced triangle edges.
pub fn connected_in_triangle(n: usize, nodes: &BTreeSet<Node>) -> bool {
    let edges: Vec<Edge> = triangle_edges(n)
        .into_iter()
        .filter(|e| nodes.contains(&e.upper) && nodes.contains(&e.lower))
        .collect();
    connected(nodes, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::Weight;

    fn pattern(rows: &[&[i64]]) -> GTPattern {
        GTPattern::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn coordinate_order_is_row_major() {
        let nodes = triangle_nodes(3);
        assert_eq!(nodes, vec![(0, 1), (0, 2), (0, 3), (1, 1), (1, 2), (2, 1)]);
        assert_eq!(coord_index(3, (1, 2)), 4);
        assert_eq!(coord_index(3, (2, 1)), 5);
    }

    #[test]
    fn edge_count_of_triangle() {
        // every node below row 0 has exactly two upward edges except the
        // row-ends: total = 2 * C(n,2) ... counted directly instead:
        assert_eq!(triangle_edges(2).len(), 2);
        assert_eq!(triangle_edges(3).len(), 6);
        assert_eq!(triangle_edges(4).len(), 12);
    }

    #[test]
    fn cyclic_vertex_graph_detected() {
        // rows (5,4,2,0) / (4,4,0) / (4,0) / (4): the four nodes of value 4
        // below row 0 close a 4-cycle with (0,2).
        let p = pattern(&[&[5, 4, 2, 0], &[4, 4, 0], &[4, 0], &[4]]);
        let g = GammaGraph::from_pattern(&p);
        assert!(!g.is_acyclic());
        let comps = g.components();
        assert_eq!(comps.len(), 4);
        assert!(comps.contains(&vec![(0, 2), (1, 1), (1, 2), (2, 1), (3, 1)]));
        assert!(comps.contains(&vec![(0, 4), (1, 3), (2, 2)]));
    }

    #[test]
    fn acyclic_vertex_graph() {
        // rows (5,4,2,0) / (5,4,0) / (4,0) / (4): chains only.
        let p = pattern(&[&[5, 4, 2, 0], &[5, 4, 0], &[4, 0], &[4]]);
        let g = GammaGraph::from_pattern(&p);
        assert!(g.is_acyclic());
        assert_eq!(g.components().len(), 4);
    }

    #[test]
    fn singular_top_row_can_merge_components() {
        let p = pattern(&[&[1, 1], &[1]]);
        let g = GammaGraph::from_pattern(&p);
        assert_eq!(g.components().len(), 1);
        let comps = g.components();
        let set: BTreeSet<Node> = comps[0].iter().copied().collect();
        // merged component is not an ordinary subgraph
        assert!(OrdinarySubgraph::try_new(2, set).is_err());
    }

    #[test]
    fn ordinary_subgraph_validation() {
        // single chain (0,2), (1,1) is ordinary
        let ok = OrdinarySubgraph::try_new(3, BTreeSet::from([(0, 2), (1, 1)])).unwrap();
        assert_eq!(ok.top(), (0, 2));
        // two same-row nodes without their common neighbours: not ordinary
        assert!(OrdinarySubgraph::try_new(3, BTreeSet::from([(1, 1), (1, 2)])).is_err());
        // diamond with both common neighbours is ordinary
        let diamond = BTreeSet::from([(1, 1), (1, 2), (0, 2), (2, 1)]);
        assert!(OrdinarySubgraph::try_new(3, diamond).is_ok());
        // disconnected pair
        assert!(OrdinarySubgraph::try_new(4, BTreeSet::from([(1, 1), (3, 1)])).is_err());
    }

    #[test]
    fn components_of_regular_vertex_are_ordinary() {
        let lam = Weight::from_vec(vec![5, 4, 2, 0]);
        assert!(lam.is_regular());
        let p = pattern(&[&[5, 4, 2, 0], &[4, 4, 0], &[4, 0], &[4]]);
        let g = GammaGraph::from_pattern(&p);
        for comp in g.components() {
            let set: BTreeSet<Node> = comp.into_iter().collect();
            OrdinarySubgraph::try_new(4, set).unwrap();
        }
    }
}
