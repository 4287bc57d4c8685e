use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ks_bench::{shock_solver, shock_system};
use ks_core::{lu_factor, solve, InitMode, Pivoting};

fn banded_lu(c: &mut Criterion) {
    let mut group = c.benchmark_group("banded_lu");
    for n in [150, 600, 2400] {
        let (a, rhs) = shock_system(n);
        for pivoting in [Pivoting::Partial, Pivoting::None] {
            group.bench_with_input(
                BenchmarkId::new(format!("factor_solve/{pivoting}"), n),
                &n,
                |b, _| {
                    b.iter(|| {
                        let f = lu_factor(black_box(&a), pivoting).unwrap();
                        solve(&f, black_box(&rhs)).unwrap()
                    })
                },
            );
        }
    }
    group.finish();
}

fn time_step(c: &mut Criterion) {
    let mut group = c.benchmark_group("step");
    for n in [150, 600] {
        let solver = shock_solver(n);
        let state = solver.initial_state(InitMode::FunctionFit).unwrap();
        group.bench_with_input(BenchmarkId::new("shock", n), &n, |b, _| {
            b.iter(|| solver.step(black_box(&state)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, banded_lu, time_step);
criterion_main!(benches);
