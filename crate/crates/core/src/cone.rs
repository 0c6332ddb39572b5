//! Tangent cones at polytope vertices and their component cones.
//!
//! The tangent cone at a vertex v is cut out by the constraints tight at v:
//! row 0 stays frozen and each equality edge of the graph keeps its
//! inequality. Because tight edges never join two components, the cone
//! splits as a direct sum of one cone per component, and extreme rays can
//! be enumerated component by component.
//!
//! For an ordinary component (single top-row node) the rays are found by
//! splitting the component into two pieces: the candidate ray is constant
//! ±1 on the piece away from the top node and 0 elsewhere. The sign is
//! forced by the inequalities crossing the split, and a candidate is kept
//! only if its tight constraints have corank one. Components with several
//! top-row nodes (repeated λ entries) fall back to enumerating all 0/±1
//! vectors: the constraint matrix is totally unimodular, so every extreme
//! ray is of that form.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{
    ambient_dim, connected_in_triangle, coord_index, property_a, triangle_edges, Edge, GammaGraph,
    Node, OrdinarySubgraph,
};
use crate::linalg::row_rank;
use crate::pattern::GTPattern;
use crate::vertex::{is_vertex_pattern, vertex_permutation};

/// Cone attached to one component of a vertex's equality graph, living in
/// full pattern-coordinate space but supported on the component's nodes.
/// Top-row nodes are pinned to zero.
#[derive(Clone, Debug)]
pub struct ComponentCone {
    n: usize,
    nodes: BTreeSet<Node>,
    pins: BTreeSet<Node>,
    edges: Vec<Edge>,
    ordinary: Option<OrdinarySubgraph>,
    rays: Vec<Vec<i64>>,
}

impl ComponentCone {
    pub fn new(n: usize, nodes: BTreeSet<Node>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::Internal("empty component".into()));
        }
        for &node in &nodes {
            if !crate::graph::node_in_triangle(n, node) {
                return Err(Error::NodeOutOfRange(node, n));
            }
        }
        if !connected_in_triangle(n, &nodes) {
            return Err(Error::Internal(format!(
                "component {nodes:?} is not connected"
            )));
        }
        let pins: BTreeSet<Node> = nodes.iter().copied().filter(|&(i, _)| i == 0).collect();
        if pins.is_empty() {
            return Err(Error::Internal(format!(
                "component {nodes:?} has no top-row node; its cone would contain a line"
            )));
        }
        let edges: Vec<Edge> = triangle_edges(n)
            .into_iter()
            .filter(|e| {
                let (a, b) = e.ge_pair();
                nodes.contains(&a) && nodes.contains(&b)
            })
            .collect();
        let ordinary = OrdinarySubgraph::try_new(n, nodes.clone()).ok();
        let mut cone = ComponentCone {
            n,
            nodes,
            pins,
            edges,
            ordinary,
            rays: Vec::new(),
        };
        cone.rays = if cone.ordinary.is_some() {
            cone.split_rays()
        } else {
            cone.sign_pattern_rays()
        };
        Ok(cone)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn nodes(&self) -> &BTreeSet<Node> {
        &self.nodes
    }

    pub fn pins(&self) -> &BTreeSet<Node> {
        &self.pins
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_ordinary(&self) -> bool {
        self.ordinary.is_some()
    }

    /// Has the component a cycle? With e edges on k nodes in one connected
    /// piece this is e > k − 1.
    pub fn is_cyclic(&self) -> bool {
        self.edges.len() > self.nodes.len() - 1
    }

    /// Extreme rays as full-length coordinate vectors, sorted.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Is the direction inside this component's cone? The vector must be
    /// supported on the component, vanish on pinned nodes and respect every
    /// edge inequality.
    pub fn contains_direction(&self, eps: &[i64]) -> bool {
        if eps.len() != ambient_dim(self.n) {
            return false;
        }
        for (k, &value) in eps.iter().enumerate() {
            if value != 0 {
                let node = crate::graph::triangle_nodes(self.n)[k];
                if !self.nodes.contains(&node) || self.pins.contains(&node) {
                    return false;
                }
            }
        }
        self.edges.iter().all(|e| {
            let (dom, sub) = e.ge_pair();
            eps[coord_index(self.n, dom)] >= eps[coord_index(self.n, sub)]
        })
    }

    fn embed(&self, values: &BTreeMap<Node, i64>) -> Vec<i64> {
        let mut out = vec![0i64; ambient_dim(self.n)];
        for (&node, &v) in values {
            out[coord_index(self.n, node)] = v;
        }
        out
    }

    /// Corank-one test: the pins plus the edge inequalities tight at the
    /// given direction must have rank |nodes| − 1.
    fn is_extreme(&self, values: &BTreeMap<Node, i64>) -> bool {
        let cols: Vec<Node> = self.nodes.iter().copied().collect();
        let at = |node: Node| cols.binary_search(&node).unwrap();
        let val = |node: Node| values.get(&node).copied().unwrap_or(0);
        let mut rows: Vec<Vec<i64>> = Vec::new();
        for &p in &self.pins {
            let mut row = vec![0i64; cols.len()];
            row[at(p)] = 1;
            rows.push(row);
        }
        for e in &self.edges {
            let (dom, sub) = e.ge_pair();
            if val(dom) == val(sub) {
                let mut row = vec![0i64; cols.len()];
                row[at(dom)] = 1;
                row[at(sub)] -= 1;
                rows.push(row);
            }
        }
        row_rank(&rows) == self.nodes.len() - 1
    }

    /// Ray search for ordinary components: enumerate splits whose far piece
    /// is connected and both pieces keep the horizontal-closure property,
    /// orient the sign by the crossing inequalities, then keep the extreme
    /// ones.
    fn split_rays(&self) -> Vec<Vec<i64>> {
        let top = self.ordinary.as_ref().expect("ordinary").top();
        let free: Vec<Node> = self.nodes.iter().copied().filter(|&a| a != top).collect();
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        for mask in 1u64..(1 << free.len()) {
            let part: BTreeSet<Node> = free
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &a)| a)
                .collect();
            if !connected_in_triangle(self.n, &part) || !property_a(self.n, &part) {
                continue;
            }
            let rest: BTreeSet<Node> = self.nodes.difference(&part).copied().collect();
            if !property_a(self.n, &rest) {
                continue;
            }
            let Some(sign) = self.crossing_sign(&part) else {
                continue;
            };
            let values: BTreeMap<Node, i64> = part.iter().map(|&a| (a, sign)).collect();
            if !self.is_extreme(&values) {
                log::warn!(
                    "component {:?}: sign-consistent split {:?} is not extreme, dropped",
                    self.nodes,
                    part
                );
                continue;
            }
            found.insert(self.embed(&values));
        }
        found.into_iter().collect()
    }

    /// The sign a constant-on-`part` direction must carry so that every
    /// edge crossing the split holds; `None` if the crossing edges disagree.
    fn crossing_sign(&self, part: &BTreeSet<Node>) -> Option<i64> {
        let mut sign = 0i64;
        for e in &self.edges {
            let (dom, sub) = e.ge_pair();
            let need = match (part.contains(&dom), part.contains(&sub)) {
                (true, false) => 1,
                (false, true) => -1,
                _ => continue,
            };
            if sign == 0 {
                sign = need;
            } else if sign != need {
                return None;
            }
        }
        (sign != 0).then_some(sign)
    }

    /// Exhaustive ray search over 0/±1 vectors; complete because the pin
    /// and edge-difference rows form a totally unimodular matrix, so every
    /// primitive extreme ray has entries in {−1, 0, 1}. Used for components
    /// with several pinned nodes, and as an independent oracle in tests.
    fn sign_pattern_rays(&self) -> Vec<Vec<i64>> {
        let free: Vec<Node> = self
            .nodes
            .iter()
            .copied()
            .filter(|a| !self.pins.contains(a))
            .collect();
        let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut pattern = vec![-1i8; free.len()];
        loop {
            if pattern.iter().any(|&s| s != 0) {
                let values: BTreeMap<Node, i64> = free
                    .iter()
                    .zip(&pattern)
                    .filter(|(_, &s)| s != 0)
                    .map(|(&a, &s)| (a, s as i64))
                    .collect();
                let feasible = self.edges.iter().all(|e| {
                    let (dom, sub) = e.ge_pair();
                    values.get(&dom).copied().unwrap_or(0) >= values.get(&sub).copied().unwrap_or(0)
                });
                if feasible && self.is_extreme(&values) {
                    found.insert(self.embed(&values));
                }
            }
            let Some(k) = pattern.iter().position(|&s| s < 1) else {
                break;
            };
            pattern[k] += 1;
            for s in &mut pattern[..k] {
                *s = -1;
            }
        }
        found.into_iter().collect()
    }
}

/// Tangent cone of the pattern polytope at a vertex: integral apex, the
/// tight interlacing edges, and extreme rays grouped by component.
#[derive(Clone, Debug)]
pub struct TangentCone {
    n: usize,
    apex: Vec<i64>,
    edges: Vec<Edge>,
    components: Vec<ComponentCone>,
    rays: Vec<Vec<i64>>,
}

impl TangentCone {
    pub fn at_vertex(pattern: &GTPattern) -> Result<Self> {
        if !is_vertex_pattern(pattern) {
            return Err(Error::NotAVertex {
                pattern: pattern.rows().to_vec(),
                row: 0,
                pos: 0,
            });
        }
        let n = pattern.n();
        let gamma = GammaGraph::from_pattern(pattern);
        let components = gamma
            .components()
            .into_iter()
            .map(|nodes| ComponentCone::new(n, nodes.into_iter().collect()))
            .collect::<Result<Vec<_>>>()?;
        let rays: Vec<Vec<i64>> = components
            .iter()
            .flat_map(|c| c.rays().iter().cloned())
            .collect();
        Ok(TangentCone {
            n,
            apex: pattern.coords(),
            edges: gamma.edges().to_vec(),
            components,
            rays,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apex(&self) -> &[i64] {
        &self.apex
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn components(&self) -> &[ComponentCone] {
        &self.components
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Lattice-point membership: row 0 frozen at the apex, every tight
    /// edge inequality preserved.
    pub fn contains_point(&self, z: &[i64]) -> bool {
        if z.len() != self.apex.len() {
            return false;
        }
        let delta: Vec<i64> = z.iter().zip(&self.apex).map(|(a, b)| a - b).collect();
        for j in 1..=self.n {
            if delta[coord_index(self.n, (0, j))] != 0 {
                return false;
            }
        }
        self.edges.iter().all(|e| {
            let (dom, sub) = e.ge_pair();
            delta[coord_index(self.n, dom)] >= delta[coord_index(self.n, sub)]
        })
    }
}

/// One extreme ray of a simplicial vertex cone, labelled by the row range
/// it spans: the support is rows `a..=b` of the component chain ending in
/// row `b`, constant ±1 there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialRay {
    pub a: usize,
    pub b: usize,
    pub sign: i64,
    pub coords: Vec<i64>,
}

/// Extreme rays of the cone at a simplicial vertex of a regular polytope,
/// one per pair 1 ≤ a ≤ b ≤ n−1. The sign is read off the row-deletion
/// permutation (+1 iff w⁻¹(a) < w⁻¹(b+1)) and independently re-derived
/// from the crossing inequality; a mismatch is an internal error.
pub fn simplicial_vertex_rays(pattern: &GTPattern) -> Result<Vec<SimplicialRay>> {
    let n = pattern.n();
    let w = vertex_permutation(pattern)?;
    let winv = w.inverse();
    let gamma = GammaGraph::from_pattern(pattern);

    // Each component must be a chain holding one node in every row 0..=b.
    let mut chain_by_end: BTreeMap<usize, Vec<Node>> = BTreeMap::new();
    for comp in gamma.components() {
        let mut by_row: BTreeMap<usize, Node> = BTreeMap::new();
        for &node in &comp {
            if by_row.insert(node.0, node).is_some() {
                return Err(Error::Internal(format!(
                    "component {comp:?} of a simplicial vertex has two nodes in row {}",
                    node.0
                )));
            }
        }
        let end = *by_row.keys().last().expect("nonempty");
        if by_row.len() != end + 1 {
            return Err(Error::Internal(format!(
                "component {comp:?} skips a row above {end}"
            )));
        }
        if chain_by_end
            .insert(end, by_row.into_values().collect())
            .is_some()
        {
            return Err(Error::Internal(format!(
                "two chain components end in row {end}"
            )));
        }
    }
    if chain_by_end.len() != n {
        return Err(Error::Internal(
            "simplicial vertex does not split into n chains".into(),
        ));
    }

    let mut rays = Vec::new();
    for b in 1..n {
        let chain = &chain_by_end[&b];
        for a in 1..=b {
            let sign = if winv.apply(a - 1) < winv.apply(b) {
                1
            } else {
                -1
            };
            let entering = gamma
                .edges()
                .iter()
                .find(|e| e.touches(chain[a - 1]) && e.touches(chain[a]))
                .ok_or_else(|| Error::Internal(format!("chain {chain:?} broken at row {a}")))?;
            let crossing_sign = if entering.ge_pair().0 == chain[a] {
                1
            } else {
                -1
            };
            if sign != crossing_sign {
                return Err(Error::Internal(format!(
                    "permutation sign {sign} disagrees with constraint sign {crossing_sign} \
                     for rows {a}..={b}"
                )));
            }
            let mut coords = vec![0i64; ambient_dim(n)];
            for node in &chain[a..=b] {
                coords[coord_index(n, *node)] = sign;
            }
            rays.push(SimplicialRay { a, b, sign, coords });
        }
    }
    Ok(rays)
}
