use std::hint::black_box;

use cmfdb::cm_fdb::{antipode_a, antipode_delta, coproduct_a, coproduct_delta, recursive_coproduct_delta};
use cmfdb::coefficients::{coeff_q_closed, coeff_q_dual};
use cmfdb::combinatorics::enumerate_compositions;
use cmfdb::random::{random_diffeo, seeded_rng};
use cmfdb::series::{compose, invert};
use cmfdb::shuffle::{conjugacy_phi, gamma, verify_gamma_coproduct};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn closed_formulas(c: &mut Criterion) {
    let mut g = c.benchmark_group("closed");
    for n in [4u32, 6, 8] {
        g.bench_with_input(BenchmarkId::new("coproduct_delta", n), &n, |b, &n| {
            b.iter(|| coproduct_delta(black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("antipode_delta", n), &n, |b, &n| {
            b.iter(|| antipode_delta(black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("coproduct_a", n), &n, |b, &n| {
            b.iter(|| coproduct_a(black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("antipode_a", n), &n, |b, &n| {
            b.iter(|| antipode_a(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn oracles(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracles");
    g.sample_size(10);
    for n in [4u32, 6] {
        g.bench_with_input(BenchmarkId::new("pbw_recursion", n), &n, |b, &n| {
            b.iter(|| recursive_coproduct_delta(black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("gamma_coproduct", n), &n, |b, &n| {
            b.iter(|| verify_gamma_coproduct(black_box(n)).unwrap())
        });
    }
    g.bench_function("gamma_8", |b| b.iter(|| gamma(black_box(8)).unwrap()));
    let comps = enumerate_compositions(6).unwrap();
    g.bench_function("q_closed_6", |b| b.iter(|| comps.iter().map(coeff_q_closed).count()));
    g.bench_function("q_dual_6", |b| b.iter(|| comps.iter().map(coeff_q_dual).count()));
    g.finish();
}

fn series(c: &mut Criterion) {
    let mut rng = seeded_rng(1);
    let f = random_diffeo(&mut rng, 10);
    let h = random_diffeo(&mut rng, 10);
    let mut g = c.benchmark_group("series");
    g.bench_function("compose_10", |b| b.iter(|| compose(black_box(&f), black_box(&h)).unwrap()));
    g.bench_function("invert_10", |b| b.iter(|| invert(black_box(&f))));
    let u = f.coefficients().to_vec();
    g.bench_function("conjugacy_phi_10", |b| b.iter(|| conjugacy_phi(black_box(&u), 10).unwrap()));
    g.finish();
}

criterion_group!(benches, closed_formulas, oracles, series);
criterion_main!(benches);
