use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use weda_bench::planted;
use weda_core::approx_lce::{approx_lce_query, build_approx_lce};
use weda_core::lce::{build_lce, lce_query};
use weda_core::sketch::build_naive_sampler;
use weda_core::RandomSource;

fn lce(c: &mut Criterion) {
    let mut g = c.benchmark_group("lce");
    g.sample_size(10);
    let n = 1 << 15;
    let (x, y) = planted(n, 0, 256, 5);
    g.bench_function("exact_build", |b| b.iter(|| build_lce(black_box(&x), black_box(&y))));
    let idx = build_lce(&x, &y);
    g.bench_function("exact_query", |b| b.iter(|| lce_query(&idx, black_box(17), black_box(17)).unwrap()));
    for d in [16u64, 64] {
        g.bench_with_input(BenchmarkId::new("approx_build", d), &d, |b, &d| {
            b.iter(|| build_approx_lce(black_box(&x), black_box(&y), d, 0.5, 4, &mut RandomSource::new(1)).unwrap())
        });
        let a = build_approx_lce(&x, &y, d, 0.5, 4, &mut RandomSource::new(1)).unwrap();
        g.bench_with_input(BenchmarkId::new("approx_query", d), &d, |b, _| {
            b.iter(|| approx_lce_query(&a, black_box(1000), black_box(1000)).unwrap())
        });
    }
    g.finish();
}

fn naive_sampler(c: &mut Criterion) {
    let (x, y) = planted(1 << 16, 0, 512, 6);
    c.bench_function("naive_sampler_build", |b| {
        b.iter(|| build_naive_sampler(black_box(&x), black_box(&y), 0.05, &mut RandomSource::new(2)).unwrap())
    });
}

criterion_group!(benches, lce, naive_sampler);
criterion_main!(benches);
