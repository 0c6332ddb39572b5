//! Serializable run reports and the verification suite they are built from.
//!
//! The same assembly code backs the command-line `verify` subcommand and the
//! acceptance tests, so a passing report means the same thing everywhere.
//! Rationals serialize as "p/q" strings ("p" when the denominator is 1), and
//! every collection is emitted in a deterministic order: identical seed and
//! configuration give byte-identical reports.
//!
//! The per-vertex contribution sweep is split out of report assembly
//! (`prepare_run` / `vertex_values` / `verify_report`) so a caller may
//! compute the values for the prepared inputs in parallel and still share
//! the assembly logic.

use std::collections::BTreeSet;

use num_traits::Zero;
use serde::Serialize;

use crate::brion::{
    all_rays, f_ray_images, grouped_contribution, verify_degbri, vertex_cones, vertex_contribution,
    vertex_contribution_from_components, weyl_character, weyl_summand,
};
use crate::cone::TangentCone;
use crate::error::{Error, Result};
use crate::graph::ambient_dim;
use crate::pattern::schur_eval;
use crate::rational::{format_rational, Rational};
use crate::sample::{validate_x_point, Sampler};
use crate::vertex::PolytopeVertex;
use crate::weight::Weight;

/// One polytope vertex as it appears in JSON output. Regular weights label
/// vertices simplicial or not; singular weights label them acyclic or not,
/// since the facet count behind simpliciality assumes regularity.
#[derive(Serialize, Clone, Debug)]
pub struct VertexRecord {
    pub pattern: Vec<Vec<i64>>,
    pub edges: Vec<[[usize; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acyclic: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutation: Option<Vec<usize>>,
    pub mu: Vec<i64>,
}

impl VertexRecord {
    pub fn new(v: &PolytopeVertex, regular: bool) -> Self {
        Self {
            pattern: v.pattern.rows().to_vec(),
            edges: v
                .graph
                .edges()
                .iter()
                .map(|e| [[e.upper.0, e.upper.1], [e.lower.0, e.lower.1]])
                .collect(),
            simplicial: if regular { v.simplicial } else { None },
            acyclic: if regular { None } else { Some(v.acyclic) },
            permutation: v.permutation.as_ref().map(|w| w.one_based()),
            mu: v.mu.entries().to_vec(),
        }
    }
}

/// A vertex contribution together with what it matched: the Weyl summand of
/// its permutation (regular simplicial vertices), the grouped Weyl sum of
/// its weight (singular vertices with nonzero contribution), or nothing.
#[derive(Serialize, Clone, Debug)]
pub struct ContributionRecord {
    pub vertex: VertexRecord,
    pub contribution: String,
    pub zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_weyl_summand: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matched_group: Option<Vec<i64>>,
}

#[derive(Serialize, Clone, Debug)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize, Debug)]
pub struct VerticesReport {
    pub lambda: Vec<i64>,
    pub n: usize,
    pub regular: bool,
    pub vertex_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial_count: Option<usize>,
    pub acyclic_count: usize,
    pub vertices: Vec<VertexRecord>,
}

#[derive(Serialize, Debug)]
pub struct ContributionsReport {
    pub lambda: Vec<i64>,
    pub n: usize,
    pub regular: bool,
    pub seed: u64,
    pub x_point: Vec<String>,
    pub perturbation: Vec<i64>,
    pub total: String,
    pub contributions: Vec<ContributionRecord>,
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub lambda: Vec<i64>,
    pub n: usize,
    pub regular: bool,
    pub seed: u64,
    pub x_point: Vec<String>,
    pub perturbation: Vec<i64>,
    pub vertex_count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub simplicial_count: Option<usize>,
    pub acyclic_count: usize,
    pub brion_total: String,
    pub weyl_total: String,
    pub schur_oracle: String,
    pub all_equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub companion: Option<Vec<i64>>,
    pub checks: Vec<CheckOutcome>,
    pub contributions: Vec<ContributionRecord>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// Everything a contribution sweep needs: the vertex cones and the sampled
/// (or validated user-supplied) evaluation data. Two independently drawn
/// perturbation vectors support the invariance check.
pub struct RunInputs {
    pub lambda: Weight,
    pub seed: u64,
    pub cones: Vec<(PolytopeVertex, TangentCone)>,
    pub x: Vec<Rational>,
    pub c: Vec<i64>,
    pub c_alt: Vec<i64>,
}

pub fn prepare_run(
    lambda: &Weight,
    seed: u64,
    x_override: Option<&[Rational]>,
) -> Result<RunInputs> {
    lambda.require_dominant()?;
    let cones = vertex_cones(lambda)?;
    let n = lambda.n();
    let f_imgs = f_ray_images(n, &cones);
    let rays = all_rays(&cones);
    let mut sampler = Sampler::new(seed);
    let x = match x_override {
        Some(x) => {
            if x.len() != n {
                return Err(Error::LengthMismatch(x.len(), n));
            }
            validate_x_point(x, &f_imgs)?;
            x.to_vec()
        }
        None => sampler.x_point(n, &f_imgs)?,
    };
    let dim = ambient_dim(n);
    let c = sampler.perturbation(dim, &rays)?;
    let c_alt = sampler.perturbation(dim, &rays)?;
    Ok(RunInputs {
        lambda: lambda.clone(),
        seed,
        cones,
        x,
        c,
        c_alt,
    })
}

/// Sequential contribution sweep; callers with a thread pool can replace
/// this with a parallel map over `inputs.cones` as long as the output stays
/// index-aligned.
pub fn vertex_values(inputs: &RunInputs, c: &[i64]) -> Result<Vec<Rational>> {
    inputs
        .cones
        .iter()
        .map(|(_, cone)| vertex_contribution(cone, &inputs.x, c))
        .collect()
}

fn contribution_records(
    inputs: &RunInputs,
    values: &[Rational],
    regular: bool,
) -> Result<Vec<ContributionRecord>> {
    let lambda = &inputs.lambda;
    let mut records = Vec::with_capacity(values.len());
    for ((v, _), value) in inputs.cones.iter().zip(values) {
        let mut matched_weyl = None;
        let mut matched_group = None;
        if regular {
            if let (Some(w), Some(true)) = (&v.permutation, v.simplicial) {
                if *value == weyl_summand(w, lambda, &inputs.x)? {
                    matched_weyl = Some(w.one_based());
                }
            }
        } else if !value.is_zero() && *value == grouped_contribution(&v.mu, lambda, &inputs.x)? {
            matched_group = Some(v.mu.entries().to_vec());
        }
        records.push(ContributionRecord {
            vertex: VertexRecord::new(v, regular),
            contribution: format_rational(value),
            zero: value.is_zero(),
            matched_weyl_summand: matched_weyl,
            matched_group,
        });
    }
    Ok(records)
}

pub fn vertices_report(lambda: &Weight) -> Result<VerticesReport> {
    lambda.require_dominant()?;
    let regular = lambda.is_regular();
    let cones = vertex_cones(lambda)?;
    let vertices: Vec<VertexRecord> = cones
        .iter()
        .map(|(v, _)| VertexRecord::new(v, regular))
        .collect();
    Ok(VerticesReport {
        lambda: lambda.entries().to_vec(),
        n: lambda.n(),
        regular,
        vertex_count: vertices.len(),
        simplicial_count: regular.then(|| {
            cones
                .iter()
                .filter(|(v, _)| v.simplicial == Some(true))
                .count()
        }),
        acyclic_count: cones.iter().filter(|(v, _)| v.acyclic).count(),
        vertices,
    })
}

pub fn contributions_report(
    inputs: &RunInputs,
    values: &[Rational],
) -> Result<ContributionsReport> {
    let regular = inputs.lambda.is_regular();
    Ok(ContributionsReport {
        lambda: inputs.lambda.entries().to_vec(),
        n: inputs.lambda.n(),
        regular,
        seed: inputs.seed,
        x_point: inputs.x.iter().map(format_rational).collect(),
        perturbation: inputs.c.clone(),
        total: format_rational(&values.iter().sum::<Rational>()),
        contributions: contribution_records(inputs, values, regular)?,
    })
}

fn check(name: &str, passed: bool, detail: String) -> CheckOutcome {
    CheckOutcome {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn pattern_label(v: &PolytopeVertex) -> String {
    v.pattern
        .rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

/// Appends the offending vertices to a detail string so a failed check names
/// what broke, not just how many comparisons ran.
fn with_failures(base: String, failing: &[String]) -> String {
    if failing.is_empty() {
        base
    } else {
        format!("{base}; failing: {}", failing.join(", "))
    }
}

/// Assembles the full verification report from precomputed contribution
/// sweeps (`values` under `inputs.c`, `alt_values` under `inputs.c_alt`).
pub fn verify_report(
    inputs: &RunInputs,
    values: &[Rational],
    alt_values: &[Rational],
    cap: u64,
    companion: Option<&Weight>,
    t_override: Option<&[Rational]>,
) -> Result<VerifyReport> {
    let lambda = &inputs.lambda;
    let n = lambda.n();
    let regular = lambda.is_regular();
    if values.len() != inputs.cones.len() || alt_values.len() != inputs.cones.len() {
        return Err(Error::LengthMismatch(values.len(), inputs.cones.len()));
    }

    let mut checks = Vec::new();

    let brion_total: Rational = values.iter().sum();
    let weyl_total = weyl_character(lambda, &inputs.x)?;
    let schur_oracle = schur_eval(lambda, &inputs.x, cap)?;
    let all_equal = brion_total == weyl_total && weyl_total == schur_oracle;
    checks.push(check(
        "brion sum equals weyl sum equals pattern sum",
        all_equal,
        format!(
            "{} / {} / {}",
            format_rational(&brion_total),
            format_rational(&weyl_total),
            format_rational(&schur_oracle)
        ),
    ));

    if regular {
        let simplicial: Vec<&PolytopeVertex> = inputs
            .cones
            .iter()
            .filter(|(v, _)| v.simplicial == Some(true))
            .map(|(v, _)| v)
            .collect();
        let expected: usize = (1..=n).product();
        let perms: BTreeSet<Vec<usize>> = simplicial
            .iter()
            .filter_map(|v| v.permutation.as_ref().map(|w| w.one_based()))
            .collect();
        checks.push(check(
            "simplicial vertices number n! with distinct permutations",
            simplicial.len() == expected && perms.len() == expected,
            format!(
                "{} simplicial vertices, {} distinct permutations, expected {}",
                simplicial.len(),
                perms.len(),
                expected
            ),
        ));

        let mut bad_summand = Vec::new();
        let mut bad_vanish = Vec::new();
        for ((v, _), value) in inputs.cones.iter().zip(values) {
            if v.simplicial == Some(true) {
                let w = v.permutation.as_ref().expect("simplicial vertex carries w");
                if *value != weyl_summand(w, lambda, &inputs.x)? {
                    bad_summand.push(pattern_label(v));
                }
            } else if !value.is_zero() {
                bad_vanish.push(pattern_label(v));
            }
        }
        checks.push(check(
            "simplicial contributions equal their weyl summands",
            bad_summand.is_empty(),
            with_failures(
                format!("{} simplicial vertices compared", simplicial.len()),
                &bad_summand,
            ),
        ));
        checks.push(check(
            "non-simplicial contributions vanish",
            bad_vanish.is_empty(),
            with_failures(
                format!(
                    "{} non-simplicial vertices checked",
                    inputs.cones.len() - simplicial.len()
                ),
                &bad_vanish,
            ),
        ));
    } else {
        let nonzero: Vec<(&PolytopeVertex, &Rational)> = inputs
            .cones
            .iter()
            .zip(values)
            .filter(|(_, value)| !value.is_zero())
            .map(|((v, _), value)| (v, value))
            .collect();
        let orbit: BTreeSet<Vec<i64>> = lambda
            .orbit()
            .into_iter()
            .map(|m| m.entries().to_vec())
            .collect();
        let seen: Vec<Vec<i64>> = nonzero
            .iter()
            .map(|(v, _)| v.mu.entries().to_vec())
            .collect();
        let distinct: BTreeSet<Vec<i64>> = seen.iter().cloned().collect();
        checks.push(check(
            "nonzero contributions biject with the weight orbit",
            distinct.len() == seen.len() && distinct == orbit,
            format!(
                "{} nonzero vertices against an orbit of {}",
                seen.len(),
                orbit.len()
            ),
        ));
        let mut bad_grouped = Vec::new();
        for (v, value) in &nonzero {
            if **value != grouped_contribution(&v.mu, lambda, &inputs.x)? {
                bad_grouped.push(pattern_label(v));
            }
        }
        checks.push(check(
            "nonzero contributions equal their grouped weyl sums",
            bad_grouped.is_empty(),
            with_failures(format!("{} groups compared", nonzero.len()), &bad_grouped),
        ));
    }

    let mut cyclic_seen = 0usize;
    let mut acyclic_seen = 0usize;
    let mut merged_seen = 0usize;
    let mut bad_components = Vec::new();
    let mut bad_factor = Vec::new();
    for ((v, cone), value) in inputs.cones.iter().zip(values) {
        for comp in cone.components() {
            // The vanishing statement is about ordinary subgraphs; merged
            // components (several row-0 pins, singular λ only) carry no
            // vanishing claim either way.
            if !comp.is_ordinary() {
                merged_seen += 1;
                continue;
            }
            let cv = crate::brion::component_contribution(comp, &inputs.x, &inputs.c)?;
            if comp.is_cyclic() {
                cyclic_seen += 1;
                if !cv.is_zero() {
                    bad_components.push(format!(
                        "{} (cyclic, {} nodes)",
                        pattern_label(v),
                        comp.nodes().len()
                    ));
                }
            } else {
                acyclic_seen += 1;
                if cv.is_zero() {
                    bad_components.push(format!(
                        "{} (acyclic, {} nodes)",
                        pattern_label(v),
                        comp.nodes().len()
                    ));
                }
            }
        }
        if *value != vertex_contribution_from_components(cone, &inputs.x, &inputs.c)? {
            bad_factor.push(pattern_label(v));
        }
    }
    checks.push(check(
        "cyclic ordinary components vanish and acyclic ones do not",
        bad_components.is_empty(),
        with_failures(
            format!(
                "{cyclic_seen} cyclic and {acyclic_seen} acyclic ordinary components, {merged_seen} merged"
            ),
            &bad_components,
        ),
    ));
    checks.push(check(
        "contributions factor through component cones",
        bad_factor.is_empty(),
        with_failures(
            format!("{} vertices compared", inputs.cones.len()),
            &bad_factor,
        ),
    ));

    let bad_invariance: Vec<String> = inputs
        .cones
        .iter()
        .zip(values.iter().zip(alt_values))
        .filter(|(_, (a, b))| a != b)
        .map(|((v, _), _)| pattern_label(v))
        .collect();
    checks.push(check(
        "contributions invariant under an independent perturbation",
        bad_invariance.is_empty(),
        with_failures(
            format!("{:?} against {:?}", inputs.c, inputs.c_alt),
            &bad_invariance,
        ),
    ));

    if let Some(prime) = companion {
        let mut rays = all_rays(&inputs.cones);
        rays.extend(all_rays(&vertex_cones(prime)?));
        let dim = ambient_dim(n);
        let mut sampler = Sampler::new(inputs.seed);
        let t_points: Vec<Vec<Rational>> = match t_override {
            Some(t) => {
                crate::sample::validate_t_point(t, &rays)?;
                vec![t.to_vec()]
            }
            None => vec![sampler.t_point(dim, &rays)?, sampler.t_point(dim, &rays)?],
        };
        let mut degbri_ok = true;
        for t in &t_points {
            degbri_ok &= verify_degbri(lambda, prime, t)?;
        }
        checks.push(check(
            "tangent cone transforms degenerate through the companion projection",
            degbri_ok,
            format!(
                "companion {:?}, {} t-point(s)",
                prime.entries(),
                t_points.len()
            ),
        ));
    }

    Ok(VerifyReport {
        lambda: lambda.entries().to_vec(),
        n,
        regular,
        seed: inputs.seed,
        x_point: inputs.x.iter().map(format_rational).collect(),
        perturbation: inputs.c.clone(),
        vertex_count: inputs.cones.len(),
        simplicial_count: regular.then(|| {
            inputs
                .cones
                .iter()
                .filter(|(v, _)| v.simplicial == Some(true))
                .count()
        }),
        acyclic_count: inputs.cones.iter().filter(|(v, _)| v.acyclic).count(),
        brion_total: format_rational(&brion_total),
        weyl_total: format_rational(&weyl_total),
        schur_oracle: format_rational(&schur_oracle),
        all_equal,
        companion: companion.map(|p| p.entries().to_vec()),
        checks,
        contributions: contribution_records(inputs, values, regular)?,
    })
}

/// Runs the whole suite sequentially: prepare, sweep twice, assemble.
pub fn run_verification(
    lambda: &Weight,
    seed: u64,
    cap: u64,
    companion: Option<&Weight>,
    x_override: Option<&[Rational]>,
    t_override: Option<&[Rational]>,
) -> Result<VerifyReport> {
    let inputs = prepare_run(lambda, seed, x_override)?;
    let values = vertex_values(&inputs, &inputs.c)?;
    let alt_values = vertex_values(&inputs, &inputs.c_alt)?;
    verify_report(&inputs, &values, &alt_values, cap, companion, t_override)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::DEFAULT_PATTERN_CAP;
    use crate::rational::rat;

    fn w(entries: &[i64]) -> Weight {
        Weight::from_vec(entries.to_vec())
    }

    #[test]
    fn regular_suite_passes() {
        let report =
            run_verification(&w(&[2, 1, 0]), 7, DEFAULT_PATTERN_CAP, None, None, None).unwrap();
        assert!(report.all_passed(), "{:?}", report.checks);
        assert_eq!(report.vertex_count, 7);
        assert_eq!(report.simplicial_count, Some(6));
        assert!(report
            .contributions
            .iter()
            .all(|r| { r.vertex.simplicial.is_some() && r.vertex.acyclic.is_none() }));
    }

    #[test]
    fn singular_suite_with_companion_passes() {
        let lam = w(&[2, 2, 0]);
        let prime = w(&[3, 2, 0]);
        let report =
            run_verification(&lam, 7, DEFAULT_PATTERN_CAP, Some(&prime), None, None).unwrap();
        assert!(report.all_passed(), "{:?}", report.checks);
        assert_eq!(report.simplicial_count, None);
        assert_eq!(report.companion.as_deref(), Some(&[3, 2, 0][..]));
        assert!(report
            .contributions
            .iter()
            .all(|r| r.vertex.acyclic.is_some() && r.vertex.simplicial.is_none()));
        let nonzero = report.contributions.iter().filter(|r| !r.zero).count();
        assert_eq!(nonzero, 3);
    }

    #[test]
    fn reports_are_byte_identical_for_a_seed() {
        let lam = w(&[2, 1, 0]);
        let a = run_verification(&lam, 11, DEFAULT_PATTERN_CAP, None, None, None).unwrap();
        let b = run_verification(&lam, 11, DEFAULT_PATTERN_CAP, None, None, None).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn vertex_records_serialize_per_contract() {
        let report = vertices_report(&w(&[1, 0])).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["vertex_count"], 2);
        let vertex = &json["vertices"][0];
        assert!(vertex.get("pattern").is_some());
        assert!(vertex.get("edges").is_some());
        assert!(vertex.get("simplicial").is_some());
        assert!(vertex.get("acyclic").is_none());
        assert!(vertex.get("mu").is_some());
    }

    #[test]
    fn degenerate_override_is_rejected() {
        let err = prepare_run(&w(&[1, 0]), 3, Some(&[rat(2), rat(2)]));
        assert!(matches!(err, Err(Error::DegeneratePoint(_))));
    }

    #[test]
    fn parallel_style_value_injection_matches_sequential() {
        let inputs = prepare_run(&w(&[2, 2, 0]), 5, None).unwrap();
        let values = vertex_values(&inputs, &inputs.c).unwrap();
        let alt = vertex_values(&inputs, &inputs.c_alt).unwrap();
        let a = verify_report(&inputs, &values, &alt, DEFAULT_PATTERN_CAP, None, None).unwrap();
        let b = run_verification(&w(&[2, 2, 0]), 5, DEFAULT_PATTERN_CAP, None, None, None).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }
}
