//! Trigonometric cubic B-spline collocation for the Kuramoto-Sivashinsky
//! equation `u_t + u u_x + alpha u_xx + theta u_xxxx = 0`.
//!
//! The fourth-order equation is split into `u_t + u u_x + alpha v + theta v_xx = 0`,
//! `v = u_xx`; both fields are expanded in trigonometric cubic B-splines,
//! collocated at the knots and advanced with a linearised Crank-Nicolson step.
//! Each step solves one banded linear system.
//!
//! ```no_run
//! use ks_core::{scenarios, InitMode, Pivoting, Solver};
//!
//! let case = scenarios::case_a();
//! let solver = Solver::new(case.problem.clone(), Pivoting::Partial)?;
//! let trajectory = solver.run(1.0, &[1.0], InitMode::FunctionFit)?;
//! let err = case.gre_of(&trajectory.snapshots[1]).unwrap()?;
//! println!("GRE at t = 1: {err:e}");
//! # Ok::<(), ks_core::Error>(())
//! ```

#![allow(clippy::needless_range_loop)]

pub mod banded;
pub mod basis;
pub mod error;
pub mod fd;
pub mod output;
pub mod scenarios;
pub mod scheme;
pub mod stepper;

pub use banded::{dense_solve, lu_factor, solve, BandedFactorization, BandedMatrix, Pivoting};
pub use basis::{
    eval_basis, eval_basis_derivative, eval_basis_recursive, eval_piece, knot_constants,
    nodal_values, KnotConstants, NodalValues, UniformGrid,
};
pub use error::{Error, Result};
pub use scenarios::{
    build_case, case_a, case_b, case_c, exact_shock, gre, CaseDefinition, CaseId, CaseSettings,
    ReferenceGre, ShockParams, SHOCK_REFERENCE_GRE,
};
pub use scheme::{
    assemble_a, assemble_b, eliminate_ghosts, recover_ghosts, row_coefficients, BoundaryData,
    Coefficients, End, InitialFn, KsProblem, RowCoefficients,
};
pub use stepper::{fit_initial, run, InitMode, Snapshot, Solver, SolverState, Trajectory};
