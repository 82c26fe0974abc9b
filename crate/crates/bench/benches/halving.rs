use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use halving_bench::{convex, random};
use halving_core::{audit, cross, halving_edges, halving_edges_reference};
use std::hint::black_box;

fn sweep_vs_reference(c: &mut Criterion) {
    let mut group = c.benchmark_group("halving-edges");
    for n in [16, 64, 256] {
        let config = random(n, n as u64);
        group.bench_with_input(BenchmarkId::new("sweep", n), &config, |b, c| {
            b.iter(|| halving_edges(black_box(c)))
        });
        if n <= 64 {
            group.bench_with_input(BenchmarkId::new("reference", n), &config, |b, c| {
                b.iter(|| halving_edges_reference(black_box(c)))
            });
        }
    }
    group.finish();
}

fn cross_pairs(c: &mut Criterion) {
    let mut group = c.benchmark_group("cross");
    group.sample_size(10);
    for n in [8, 16, 32] {
        let (a, b) = (random(n, 1), convex(n));
        group.bench_with_input(BenchmarkId::from_parameter(n), &(a, b), |bench, (a, b)| {
            bench.iter(|| cross(black_box(a), black_box(b)).expect("cross converges"))
        });
    }
    group.finish();
}

fn audits(c: &mut Criterion) {
    let mut group = c.benchmark_group("audit");
    group.sample_size(10);
    for n in [16, 32] {
        let config = random(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &config, |b, c| {
            b.iter(|| audit(black_box(c)))
        });
    }
    group.finish();
}

criterion_group!(benches, sweep_vs_reference, cross_pairs, audits);
criterion_main!(benches);
