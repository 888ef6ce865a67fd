use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rdom_core::constructions::{default_tripartition, extremal_pattern};
use rdom_core::graph::build_generalized_petersen;
use rdom_core::rdf::verify_trdf;
use rdom_core::solver::{discharge_lower_bound, solve_branch_bound, solve_profile_dp, SearchBudget};
use rdom_core::PetersenParams;

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    for n in [60, 600] {
        let g = build_generalized_petersen(PetersenParams::new(n, 5).unwrap());
        let a = extremal_pattern(n, 5, 4, &default_tripartition(4).unwrap()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| {
            b.iter(|| verify_trdf(black_box(&g), black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn lower_bound(c: &mut Criterion) {
    let g = build_generalized_petersen(PetersenParams::new(600, 5).unwrap());
    c.bench_function("discharge_lower_bound/600", |b| b.iter(|| discharge_lower_bound(black_box(&g), 3)));
}

fn solvers(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let cases = [(7, 1, 3), (8, 3, 2), (9, 2, 3), (10, 2, 2)];
    let mut group = c.benchmark_group("branch_bound");
    group.sample_size(10);
    for (n, k, t) in cases {
        let g = build_generalized_petersen(PetersenParams::new(n, k).unwrap());
        group.bench_function(format!("P({n},{k})/t={t}"), |b| {
            b.iter(|| solve_branch_bound(&g, t, budget).unwrap().optimum)
        });
    }
    group.finish();
    let mut group = c.benchmark_group("profile_dp");
    group.sample_size(10);
    for (n, k, t) in cases {
        let p = PetersenParams::new(n, k).unwrap();
        group.bench_function(format!("P({n},{k})/t={t}"), |b| {
            b.iter(|| solve_profile_dp(p, t, budget).unwrap().optimum)
        });
    }
    group.finish();
}

criterion_group!(benches, verify, lower_bound, solvers);
criterion_main!(benches);
