//! Exact computation of irreducible gl_n characters three independent ways:
//! by enumerating triangular interlacing patterns, by the Weyl character
//! formula, and by summing integer-point transforms of vertex tangent cones
//! of the pattern polytope (Brion's theorem), together with the machinery to
//! verify how the three decompositions match up vertex by vertex.
//!
//! Everything is exact rational arithmetic; equality checks throughout the
//! crate are true equalities, never tolerance comparisons.

pub mod brion;
pub mod cone;
pub mod error;
pub mod exponent;
pub mod graph;
pub mod laurent;
pub mod linalg;
pub mod pattern;
pub mod perm;
pub mod rational;
pub mod report;
pub mod sample;
pub mod sigma;
pub mod specialize;
pub mod unipoly;
pub mod vertex;
pub mod weight;

pub use brion::{
    all_rays, brion_character, component_contribution, f_ray_images, grouped_contribution,
    verify_degbri, vertex_cones, vertex_contribution, vertex_contribution_from_components,
    weyl_character, weyl_summand,
};
pub use cone::{simplicial_vertex_rays, ComponentCone, SimplicialRay, TangentCone};
pub use error::{Error, Result};
pub use exponent::{ExponentVector, Var};
pub use graph::{coord_index, triangle_nodes, Edge, EdgeKind, GammaGraph, Node, OrdinarySubgraph};
pub use laurent::LaurentPolynomial;
pub use linalg::Matrix;
pub use pattern::{
    enumerate_patterns, pattern_count, schur_eval, schur_polynomial, GTPattern, DEFAULT_PATTERN_CAP,
};
pub use perm::Permutation;
pub use rational::{format_rational, parse_rational, rat, ratio, Rational};
pub use report::{
    contributions_report, prepare_run, run_verification, verify_report, vertex_values,
    vertices_report, CheckOutcome, ContributionRecord, ContributionsReport, RunInputs,
    VerifyReport, VertexRecord, VerticesReport,
};
pub use sample::{validate_perturbation, validate_t_point, validate_x_point, Sampler};
pub use sigma::{
    eval_sigma, half_open_triangulate, series_multiplicity, sigma_terms, HalfOpenCone, SigmaTerm,
};
pub use specialize::{apply_f, f_image_coords};
pub use unipoly::{UniPoly, UniRational};
pub use vertex::{
    classify_pattern, enumerate_vertices, is_vertex_pattern, project_vertex, vertex_permutation,
    PolytopeVertex,
};
pub use weight::Weight;
