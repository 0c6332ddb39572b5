//! Vertices of the pattern polytope.
//!
//! A pattern is a vertex of its polytope exactly when every entry below the
//! top row equals at least one of its two upper neighbours. Vertices are
//! therefore enumerated by propagating choices downward from λ. The equality
//! graph of a vertex decides everything else: a vertex of a regular polytope
//! is simplicial iff its equality graph is acyclic, and each simplicial
//! vertex selects the permutation recording which λ-coordinate disappears
//! from each row.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{ambient_dim, coord_index, GammaGraph};
use crate::linalg::row_rank;
use crate::pattern::GTPattern;
use crate::perm::Permutation;
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct PolytopeVertex {
    pub pattern: GTPattern,
    pub graph: GammaGraph,
    /// Equality graph is a forest.
    pub acyclic: bool,
    /// `Some` only when λ is regular, where acyclicity coincides with the
    /// tangent cone being simplicial.
    pub simplicial: Option<bool>,
    /// The row-deletion permutation w with μ_v = w·λ; present for
    /// simplicial vertices of regular λ.
    pub permutation: Option<Permutation>,
    pub mu: Weight,
}

/// Does every entry below row 0 equal an upper neighbour?
pub fn is_vertex_pattern(p: &GTPattern) -> bool {
    vertex_defect(p).is_none()
}

fn vertex_defect(p: &GTPattern) -> Option<(usize, usize)> {
    let n = p.n();
    for i in 1..n {
        for j in 1..=(n - i) {
            let v = p.entry((i, j));
            if v != p.entry((i - 1, j)) && v != p.entry((i - 1, j + 1)) {
                return Some((i, j));
            }
        }
    }
    None
}

/// Enumerates all vertices of the polytope of λ, sorted by flattened entry
/// list. Works for regular and singular dominant λ; duplicates produced by
/// coinciding neighbour values are merged.
pub fn enumerate_vertices(lambda: &Weight) -> Result<Vec<PolytopeVertex>> {
    lambda.require_dominant()?;
    let n = lambda.n();
    let mut seen: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut rows: Vec<Vec<i64>> = vec![lambda.entries().to_vec()];
    descend(n, &mut rows, &mut seen);
    seen.into_iter()
        .map(|rows| classify_vertex(GTPattern::new(rows)?, lambda))
        .collect()
}

fn descend(n: usize, rows: &mut Vec<Vec<i64>>, seen: &mut BTreeSet<Vec<Vec<i64>>>) {
    let i = rows.len();
    if i == n {
        seen.insert(rows.clone());
        return;
    }
    let len = n - i;
    let mut row = vec![0i64; len];
    choose(n, rows, &mut row, 0, seen);
}

fn choose(
    n: usize,
    rows: &mut Vec<Vec<i64>>,
    row: &mut Vec<i64>,
    j: usize,
    seen: &mut BTreeSet<Vec<Vec<i64>>>,
) {
    let i = rows.len();
    if j == n - i {
        rows.push(row.clone());
        descend(n, rows, seen);
        rows.pop();
        return;
    }
    let left = rows[i - 1][j];
    let right = rows[i - 1][j + 1];
    row[j] = left;
    choose(n, rows, row, j + 1, seen);
    if right != left {
        row[j] = right;
        choose(n, rows, row, j + 1, seen);
    }
}

/// Classifies a pattern as a polytope vertex, running both vertex criteria:
/// the upper-neighbour test and zero-dimensionality of the tight-constraint
/// system (row-0 pins plus equality edges). A pattern passing one but not
/// the other is reported as an internal inconsistency.
pub fn classify_pattern(pattern: GTPattern) -> Result<PolytopeVertex> {
    let lambda = pattern.lambda();
    classify_vertex(pattern, &lambda)
}

fn classify_vertex(pattern: GTPattern, lambda: &Weight) -> Result<PolytopeVertex> {
    if let Some((row, pos)) = vertex_defect(&pattern) {
        return Err(Error::NotAVertex {
            pattern: pattern.rows().to_vec(),
            row,
            pos,
        });
    }
    let graph = GammaGraph::from_pattern(&pattern);
    if tight_system_rank(&graph) != ambient_dim(pattern.n()) {
        return Err(Error::Internal(format!(
            "pattern {:?} passes the upper-neighbour test but its tight system is degenerate",
            pattern.rows()
        )));
    }
    let acyclic = graph.is_acyclic();
    let regular = lambda.is_regular();
    if regular {
        let comps = graph.components();
        if comps.len() != lambda.n() {
            return Err(Error::Internal(format!(
                "vertex of regular {lambda} has {} equality components, expected {}",
                comps.len(),
                lambda.n()
            )));
        }
    }
    let permutation = if regular && acyclic {
        Some(vertex_permutation(&pattern)?)
    } else {
        None
    };
    let mu = pattern.weight_of();
    if let Some(w) = &permutation {
        if w.apply_to_weight(lambda) != mu {
            return Err(Error::Internal(format!(
                "row-deletion permutation disagrees with pattern weight for {lambda}"
            )));
        }
    }
    Ok(PolytopeVertex {
        pattern,
        graph,
        acyclic,
        simplicial: regular.then_some(acyclic),
        permutation,
        mu,
    })
}

/// Rank of the system fixing row 0 plus one equation per equality edge; a
/// pattern is a vertex iff this pins all coordinates.
fn tight_system_rank(graph: &GammaGraph) -> usize {
    let n = graph.n();
    let dim = ambient_dim(n);
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for j in 1..=n {
        let mut row = vec![0i64; dim];
        row[coord_index(n, (0, j))] = 1;
        rows.push(row);
    }
    for e in graph.edges() {
        let (dom, sub) = e.ge_pair();
        let mut row = vec![0i64; dim];
        row[coord_index(n, dom)] = 1;
        row[coord_index(n, sub)] = -1;
        rows.push(row);
    }
    row_rank(&rows)
}

/// The permutation w with w⁻¹(i+1) = index of the λ-coordinate deleted when
/// passing from row i to row i+1. Requires each row's value multiset to be
/// contained in the previous one (true for simplicial vertices) and λ
/// regular, so the deleted value picks out a unique λ-coordinate.
pub fn vertex_permutation(p: &GTPattern) -> Result<Permutation> {
    let lambda = p.lambda();
    if !lambda.is_regular() {
        return Err(Error::NotRegular(lambda.entries().to_vec()));
    }
    let n = p.n();
    let mut winv_images = Vec::with_capacity(n);
    for i in 0..n {
        let mut upper: Vec<i64> = p.rows()[i].clone();
        let lower: &[i64] = if i + 1 < n { &p.rows()[i + 1] } else { &[] };
        for v in lower {
            match upper.iter().position(|u| u == v) {
                Some(k) => {
                    upper.remove(k);
                }
                None => return Err(Error::NotSimplicial(i + 1)),
            }
        }
        if upper.len() != 1 {
            return Err(Error::NotSimplicial(i + 1));
        }
        let deleted = upper[0];
        let k =
            lambda
                .entries()
                .iter()
                .position(|&l| l == deleted)
                .ok_or(Error::ValueNotInLambda {
                    value: deleted,
                    lambda: lambda.entries().to_vec(),
                })?;
        winv_images.push(k);
    }
    Ok(Permutation::from_images(winv_images)?.inverse())
}

/// Sends a vertex of a regular polytope to the corresponding vertex of any
/// dominant λ with the same length by replacing each entry λ'_j -> λ_j.
pub fn project_vertex(vertex: &GTPattern, lambda: &Weight) -> Result<GTPattern> {
    let source = vertex.lambda();
    if !source.is_regular() {
        return Err(Error::NotRegular(source.entries().to_vec()));
    }
    lambda.require_dominant()?;
    if lambda.n() != source.n() {
        return Err(Error::LengthMismatch(lambda.n(), source.n()));
    }
    let rows = vertex
        .rows()
        .iter()
        .map(|row| {
            row.iter()
                .map(|v| {
                    source
                        .entries()
                        .iter()
                        .position(|s| s == v)
                        .map(|k| lambda.entries()[k])
                        .ok_or(Error::ValueNotInLambda {
                            value: *v,
                            lambda: source.entries().to_vec(),
                        })
                })
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<Vec<i64>>>>()?;
    GTPattern::new(rows)
}
