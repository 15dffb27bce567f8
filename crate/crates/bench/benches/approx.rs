use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use weda_bench::planted;
use weda_core::approx::{approx_eda, bicriteria_approx};
use weda_core::{parse_rational, RandomSource, Rational, Threshold};

fn half() -> Rational {
    parse_rational("1/2").unwrap()
}

fn approx_by_length(c: &mut Criterion) {
    let mut g = c.benchmark_group("approx_eda");
    g.sample_size(10);
    let k = Threshold::integer(4, 64).unwrap();
    for log_n in [14u32, 16, 18] {
        let (x, y) = planted(1 << log_n, 2, 64, 3);
        g.bench_with_input(BenchmarkId::from_parameter(1usize << log_n), &log_n, |b, _| {
            b.iter(|| approx_eda(black_box(&x), black_box(&y), &k, half(), &mut RandomSource::new(7)).unwrap())
        });
    }
    g.finish();
}

fn bicriteria_by_length(c: &mut Criterion) {
    let mut g = c.benchmark_group("bicriteria_approx");
    g.sample_size(10);
    for log_n in [14u32, 16] {
        let (x, y) = planted(1 << log_n, 2, 200, 4);
        g.bench_with_input(BenchmarkId::from_parameter(1usize << log_n), &log_n, |b, _| {
            b.iter(|| bicriteria_approx(black_box(&x), black_box(&y), 2, 200, half(), &mut RandomSource::new(7)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, approx_by_length, bicriteria_by_length);
criterion_main!(benches);
