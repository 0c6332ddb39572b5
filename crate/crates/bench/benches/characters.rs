//! Benchmarks for the combinatorial enumerations and the three character
//! evaluation routes. Sample sizes are small because each iteration runs an
//! exact bignum pipeline, not a microkernel.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gtbrion::{
    brion_character, enumerate_patterns, enumerate_vertices, schur_eval, weyl_character,
    DEFAULT_PATTERN_CAP,
};
use gtbrion_bench::{generic_point, ladder};

fn label(entries: &[i64]) -> String {
    entries
        .iter()
        .map(|e| e.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumeration");
    for lambda in ladder() {
        let id = label(lambda.entries());
        group.bench_with_input(BenchmarkId::new("patterns", &id), &lambda, |b, l| {
            b.iter(|| enumerate_patterns(black_box(l), DEFAULT_PATTERN_CAP).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("vertices", &id), &lambda, |b, l| {
            b.iter(|| enumerate_vertices(black_box(l)).unwrap())
        });
    }
    group.finish();
}

fn evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluation");
    group.sample_size(10);
    for lambda in ladder() {
        let id = label(lambda.entries());
        let x = generic_point(&lambda);
        group.bench_with_input(BenchmarkId::new("patterns", &id), &lambda, |b, l| {
            b.iter(|| schur_eval(black_box(l), &x, DEFAULT_PATTERN_CAP).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("weyl", &id), &lambda, |b, l| {
            b.iter(|| weyl_character(black_box(l), &x).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("brion", &id), &lambda, |b, l| {
            b.iter(|| brion_character(black_box(l), &x, 97).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumeration, evaluation);
criterion_main!(benches);
