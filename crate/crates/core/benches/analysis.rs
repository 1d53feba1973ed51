//! Parallel against sequential timings. Each benchmark id carries the
//! execution mode, so running
//!
//!     cargo bench -p grady-core
//!     cargo bench -p grady-core --no-default-features
//!
//! leaves `rayon` and `sequential` entries side by side in one criterion group.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use grady_core::decomposition::peel;
use grady_core::grading::{analyze, is_epsilon_strong, Bounds, GradedRing};
use grady_core::lpa::lpa_z8;
use grady_core::modules::{regular_module, GradedModule};
use grady_core::par::MODE;
use grady_core::sc::fixtures::dade6;
use grady_core::CoeffRing;

fn analyze_dade6(c: &mut Criterion) {
    let fx = dade6();
    let mut group = c.benchmark_group("analyze-dade6");
    group.sample_size(10);
    group.bench_function(BenchmarkId::from_parameter(MODE), |b| {
        b.iter(|| analyze(black_box(fx.ring()), &Bounds::default()).unwrap())
    });
    group.finish();
}

fn dade_condition_regular(c: &mut Criterion) {
    let fx = dade6();
    let s = fx.ring();
    let (eps, _) = is_epsilon_strong(s, &s.resolve(&Bounds::default())).unwrap();
    let m = GradedModule::build(s, regular_module(s)).unwrap();
    let mut group = c.benchmark_group("dade-condition-regular");
    group.sample_size(10);
    group.bench_function(BenchmarkId::from_parameter(MODE), |b| {
        b.iter(|| m.dade_condition(black_box(&eps), 1 << 21).unwrap())
    });
    group.finish();
}

fn peel_lpa8(c: &mut Criterion) {
    let alg = lpa_z8(&CoeffRing::zn(2).unwrap());
    let bounds = alg.resolve(&Bounds::default());
    let (_, eps) = is_epsilon_strong(&alg, &bounds).unwrap();
    let eps = eps.unwrap();
    let mut group = c.benchmark_group("peel-lpa8");
    group.bench_function(BenchmarkId::from_parameter(MODE), |b| {
        b.iter(|| peel(black_box(&alg), &eps, &bounds).unwrap())
    });
    group.finish();
}

criterion_group!(benches, analyze_dade6, dade_condition_regular, peel_lpa8);
criterion_main!(benches);
