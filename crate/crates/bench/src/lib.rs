//! Shared fixtures for the solver benchmarks.

use ks_core::scheme::assemble_a;
use ks_core::{
    build_case, fit_initial, BandedMatrix, CaseId, CaseSettings, InitMode, KnotConstants, Pivoting,
    Solver, SolverState,
};

/// Shock case with `n` intervals, default step.
pub fn shock_solver(n: usize) -> Solver {
    let case = build_case(
        CaseId::A,
        CaseSettings {
            n,
            ..CaseId::A.defaults()
        },
    )
    .expect("valid shock case");
    Solver::new(case.problem, Pivoting::Partial).expect("valid solver")
}

/// Left-hand matrix and right-hand side of the first step of the shock case.
pub fn shock_system(n: usize) -> (BandedMatrix, Vec<f64>) {
    let solver = shock_solver(n);
    let p = solver.problem();
    let c = KnotConstants::for_grid(&p.grid).expect("admissible spacing");
    let coeffs = fit_initial(p, InitMode::FunctionFit).expect("fit");
    let a = assemble_a(p, &c, &coeffs);
    let rhs = solver
        .rhs(&SolverState {
            level: 0,
            time: 0.0,
            coeffs,
        })
        .expect("rhs");
    (a, rhs)
}
