use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use npreproj_bench::fixtures;
use npreproj_core::checks::{analyze, is_n_rep_finite, Caps};
use npreproj_core::preproj::{preprojective_algebra, preprojective_module, DEFAULT_TAU_CAP};
use npreproj_core::quivalg::quiver_presentation;

fn preprojective(c: &mut Criterion) {
    let mut g = c.benchmark_group("preprojective");
    for (name, a, n) in fixtures() {
        g.bench_with_input(BenchmarkId::new("tensor", name), &a, |b, a| b.iter(|| preprojective_algebra(a, n, DEFAULT_TAU_CAP).unwrap()));
        g.bench_with_input(BenchmarkId::new("module", name), &a, |b, a| b.iter(|| preprojective_module(a, n, DEFAULT_TAU_CAP).unwrap()));
        let t = preprojective_algebra(&a, n, DEFAULT_TAU_CAP).unwrap();
        g.bench_with_input(BenchmarkId::new("presentation", name), &t.algebra, |b, t| b.iter(|| quiver_presentation(t).unwrap()));
    }
    g.finish();
}

fn checks(c: &mut Criterion) {
    let mut g = c.benchmark_group("checks");
    g.sample_size(10);
    for (name, a, n) in fixtures() {
        g.bench_with_input(BenchmarkId::new("n_rep_finite", name), &a, |b, a| b.iter(|| is_n_rep_finite(a, n, DEFAULT_TAU_CAP).unwrap()));
        g.bench_with_input(BenchmarkId::new("analyze", name), &a, |b, a| b.iter(|| analyze(name, a, n, Caps::default()).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, preprojective, checks);
criterion_main!(benches);
