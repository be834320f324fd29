use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use nilmat::comb::{c_coeff_closed, expand_ax_l, CoeffTable};
use nilmat::exactmat::{det_bareiss, rref, sylvester_singular};
use nilmat::riccati::{build_t, enumerate_chain_solutions, jordan_chains_nilpotent};
use nilmat::solver::solve_full_jordan;
use nilmat_bench::{dense, harmonic_free, two_blocks};

fn elimination(c: &mut Criterion) {
    let mut group = c.benchmark_group("elimination");
    for n in [4, 8, 12] {
        let m = dense(n);
        group.bench_with_input(BenchmarkId::new("det_bareiss", n), &m, |b, m| {
            b.iter(|| det_bareiss(black_box(m)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rref", n), &m, |b, m| b.iter(|| rref(black_box(m))));
    }
    let a = dense(3);
    group.bench_function("sylvester_singular/3", |b| b.iter(|| sylvester_singular(black_box(&a)).unwrap()));
    group.finish();
}

fn band_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_full_jordan");
    for (n, p) in [(6, 2), (10, 2), (10, 3), (14, 2)] {
        let f = harmonic_free(n, p);
        group.bench_with_input(BenchmarkId::new(format!("p{p}"), n), &f, |b, f| {
            b.iter(|| solve_full_jordan(black_box(f)).unwrap())
        });
    }
    group.finish();
}

fn riccati(c: &mut Criterion) {
    let a = two_blocks();
    let t = build_t(&a).unwrap();
    c.bench_function("riccati/chains", |b| b.iter(|| jordan_chains_nilpotent(black_box(&t)).unwrap()));
    c.bench_function("riccati/enumerate", |b| b.iter(|| enumerate_chain_solutions(black_box(&a)).unwrap()));
}

fn coefficients(c: &mut Criterion) {
    c.bench_function("coeffs/recurrence_l40", |b| b.iter(|| CoeffTable::by_recurrence(black_box(3), 40)));
    c.bench_function("coeffs/closed_l10", |b| {
        b.iter(|| (0..10).map(|k| c_coeff_closed(10, k, black_box(3)).unwrap()).collect::<Vec<_>>())
    });
    c.bench_function("coeffs/expand_ax_l4_p3", |b| b.iter(|| expand_ax_l(4, black_box(3), 12).unwrap()));
}

criterion_group!(benches, elimination, band_solver, riccati, coefficients);
criterion_main!(benches);
