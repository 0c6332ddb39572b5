//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `--nocapture` to see the lines when green).
//! Every equality below is exact rational equality, never a tolerance.

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::Zero;

use gtbrion::graph::ambient_dim;
use gtbrion::{
    all_rays, brion_character, component_contribution, enumerate_vertices, f_ray_images,
    grouped_contribution, pattern_count, prepare_run, rat, schur_eval, series_multiplicity,
    sigma_terms, verify_degbri, vertex_cones, vertex_contribution,
    vertex_contribution_from_components, vertex_values, weyl_character, weyl_summand, GTPattern,
    Permutation, Sampler, Weight, DEFAULT_PATTERN_CAP,
};

fn w(entries: &[i64]) -> Weight {
    Weight::from_vec(entries.to_vec())
}

fn report(criterion: &str, ok: bool) {
    println!(
        "criterion {criterion}: {}",
        if ok { "pass" } else { "FAIL" }
    );
    assert!(ok, "criterion {criterion} failed");
}

const SEEDS: [u64; 3] = [11, 22, 33];

#[test]
fn criterion_1_oracle_equivalence() {
    let started = Instant::now();
    let mut ok = true;
    for entries in [
        vec![1i64, 0],
        vec![2, 0],
        vec![1, 1],
        vec![2, 1, 0],
        vec![2, 2, 0],
        vec![5, 4, 2, 0],
        vec![3, 2, 1, 0],
        vec![3, 1, 1, 0],
    ] {
        let lambda = w(&entries);
        let cones = vertex_cones(&lambda).unwrap();
        let f_imgs = f_ray_images(lambda.n(), &cones);
        for seed in SEEDS {
            let x = Sampler::new(seed).x_point(lambda.n(), &f_imgs).unwrap();
            let brion = brion_character(&lambda, &x, seed).unwrap();
            let weyl = weyl_character(&lambda, &x).unwrap();
            let schur = schur_eval(&lambda, &x, DEFAULT_PATTERN_CAP).unwrap();
            ok &= brion == weyl && weyl == schur;
        }
    }
    let elapsed = started.elapsed();
    ok &= elapsed.as_secs() < 60;
    report(
        &format!("1 (three-way character equality, {elapsed:.2?})"),
        ok,
    );
}

#[test]
fn criterion_2_simplicial_vertex_count() {
    let mut sampler = Sampler::new(1729);
    let mut ok = true;
    for i in 0..10u32 {
        let n = [2usize, 3, 4][(i % 3) as usize];
        let lambda = sampler.regular_lambda(n, 8);
        let vertices = enumerate_vertices(&lambda).unwrap();
        let perms: BTreeSet<Vec<usize>> = vertices
            .iter()
            .filter(|v| v.simplicial == Some(true))
            .filter_map(|v| v.permutation.as_ref().map(|p| p.one_based()))
            .collect();
        let simplicial = vertices
            .iter()
            .filter(|v| v.simplicial == Some(true))
            .count();
        let all: BTreeSet<Vec<usize>> = Permutation::all(n).iter().map(|p| p.one_based()).collect();
        ok &= simplicial == all.len() && perms == all;
    }
    report("2 (simplicial vertices biject with permutations)", ok);
}

#[test]
fn criterion_3_per_vertex_summand_match() {
    let lambda = w(&[5, 4, 2, 0]);
    let recorded = GTPattern::new(vec![vec![5, 4, 2, 0], vec![4, 4, 0], vec![4, 0], vec![4]])
        .unwrap()
        .coords();
    let mut ok = true;
    let mut saw_recorded = false;
    for seed in SEEDS {
        let inputs = prepare_run(&lambda, seed, None).unwrap();
        let values = vertex_values(&inputs, &inputs.c).unwrap();
        for ((v, _), value) in inputs.cones.iter().zip(&values) {
            match v.simplicial {
                Some(true) => {
                    let wv = v.permutation.as_ref().unwrap();
                    ok &= *value == weyl_summand(wv, &lambda, &inputs.x).unwrap();
                }
                _ => {
                    ok &= value.is_zero();
                    if v.pattern.coords() == recorded {
                        saw_recorded = true;
                    }
                }
            }
        }
    }
    ok &= saw_recorded;
    report(
        "3 (simplicial contributions are weyl summands, others vanish)",
        ok,
    );
}

#[test]
fn criterion_4_component_vanishing_and_factorization() {
    let mut ok = true;
    let mut cyclic_seen = 0usize;
    for entries in [vec![5i64, 4, 2, 0], vec![3, 2, 1, 0]] {
        let lambda = w(&entries);
        let inputs = prepare_run(&lambda, 47, None).unwrap();
        let values = vertex_values(&inputs, &inputs.c).unwrap();
        for ((_, cone), value) in inputs.cones.iter().zip(&values) {
            for comp in cone.components() {
                let cv = component_contribution(comp, &inputs.x, &inputs.c).unwrap();
                if comp.is_cyclic() {
                    cyclic_seen += 1;
                    ok &= cv.is_zero();
                } else {
                    ok &= !cv.is_zero();
                }
            }
            ok &=
                *value == vertex_contribution_from_components(cone, &inputs.x, &inputs.c).unwrap();
        }
    }
    ok &= cyclic_seen > 0;
    report("4 (cyclic components vanish, contributions factor)", ok);
}

#[test]
fn criterion_5_orbit_grouping() {
    let mut ok = true;
    for entries in [
        vec![1i64, 1],
        vec![2, 2, 0],
        vec![3, 1, 1, 0],
        vec![2, 2, 1, 0],
    ] {
        let lambda = w(&entries);
        let inputs = prepare_run(&lambda, 59, None).unwrap();
        let values = vertex_values(&inputs, &inputs.c).unwrap();
        let orbit: BTreeSet<Vec<i64>> = lambda
            .orbit()
            .into_iter()
            .map(|m| m.entries().to_vec())
            .collect();
        let mut seen = BTreeSet::new();
        for ((v, _), value) in inputs.cones.iter().zip(&values) {
            if value.is_zero() {
                continue;
            }
            ok &= seen.insert(v.mu.entries().to_vec());
            ok &= *value == grouped_contribution(&v.mu, &lambda, &inputs.x).unwrap();
        }
        ok &= seen == orbit;
    }
    report("5 (nonzero contributions grouped by the weight orbit)", ok);
}

#[test]
fn criterion_6_projection_degeneration() {
    let mut ok = true;
    for (a, b) in [
        (vec![1i64, 1], vec![1i64, 0]),
        (vec![2, 2, 0], vec![3, 2, 0]),
        (vec![2, 2, 1, 0], vec![3, 2, 1, 0]),
    ] {
        let lambda = w(&a);
        let prime = w(&b);
        let mut rays = all_rays(&vertex_cones(&lambda).unwrap());
        rays.extend(all_rays(&vertex_cones(&prime).unwrap()));
        let dim = ambient_dim(lambda.n());
        let mut sampler = Sampler::new(61);
        for _ in 0..2 {
            let t = sampler.t_point(dim, &rays).unwrap();
            ok &= verify_degbri(&lambda, &prime, &t).unwrap();
        }
    }
    report("6 (cone transforms degenerate through the projection)", ok);
}

#[test]
fn criterion_7_counting_sanity() {
    let mut ok = true;
    for (entries, count) in [
        (vec![1i64, 0], 2u32),
        (vec![2, 1, 0], 8),
        (vec![3, 2, 1, 0], 64),
    ] {
        ok &= pattern_count(&w(&entries)).unwrap() == BigInt::from(count);
    }
    let ones = vec![rat(1); 4];
    ok &= schur_eval(&w(&[3, 2, 1, 0]), &ones, DEFAULT_PATTERN_CAP).unwrap() == rat(64);
    report("7 (pattern counts and dimension evaluation)", ok);
}

#[test]
fn criterion_8_cone_series_box_check() {
    let mut ok = true;
    for entries in [
        vec![1i64, 0],
        vec![2, 0],
        vec![1, 1],
        vec![2, 1, 0],
        vec![2, 2, 0],
        vec![3, 1, 0],
    ] {
        let lambda = w(&entries);
        for (_, cone) in vertex_cones(&lambda).unwrap() {
            let terms = sigma_terms(cone.apex(), cone.rays()).unwrap();
            let support: Vec<usize> = (0..cone.apex().len())
                .filter(|&k| cone.rays().iter().any(|r| r[k] != 0))
                .collect();
            let mut offsets = vec![-4i64; support.len()];
            loop {
                let mut z = cone.apex().to_vec();
                for (k, &d) in support.iter().zip(&offsets) {
                    z[*k] += d;
                }
                let expected = usize::from(cone.contains_point(&z));
                ok &= series_multiplicity(&terms, &z).unwrap() == expected;
                let mut carry = 0;
                while carry < offsets.len() {
                    offsets[carry] += 1;
                    if offsets[carry] <= 4 {
                        break;
                    }
                    offsets[carry] = -4;
                    carry += 1;
                }
                if carry == offsets.len() {
                    break;
                }
            }
        }
    }
    report("8 (series terms tile each cone, box radius 4)", ok);
}

#[test]
fn criterion_9_perturbation_robustness() {
    let mut ok = true;
    for entries in [vec![2i64, 1, 0], vec![2, 2, 0]] {
        let lambda = w(&entries);
        let inputs = prepare_run(&lambda, 73, None).unwrap();
        for (_, cone) in &inputs.cones {
            let a = vertex_contribution(cone, &inputs.x, &inputs.c).unwrap();
            let b = vertex_contribution(cone, &inputs.x, &inputs.c_alt).unwrap();
            ok &= a == b;
        }
    }
    report("9 (contributions invariant across perturbations)", ok);
}
