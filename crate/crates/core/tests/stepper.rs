mod common;

use std::sync::Arc;

use common::{max_abs, shock_uxx};
use ks_core::{
    case_a, fit_initial, BoundaryData, Error, InitMode, KnotConstants, KsProblem, Pivoting,
    ShockParams, Solver, UniformGrid,
};

#[test]
fn function_fit_interpolates_the_shock() {
    let case = case_a();
    let p = &case.problem;
    let c = KnotConstants::for_grid(&p.grid).unwrap();
    let coeffs = fit_initial(p, InitMode::FunctionFit).unwrap();
    let (u, _) = coeffs.knot_values(&c);
    let u0: Vec<f64> = p.grid.nodes().iter().map(|&x| (p.initial_u)(x)).collect();
    let err = u
        .iter()
        .zip(&u0)
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    assert!(err <= 1e-8 * max_abs(&u0), "{err:e}");
    assert!(coeffs
        .constraint_residuals(&c)
        .iter()
        .all(|r| r.abs() < 1e-12));
}

#[test]
fn v_fit_matches_hand_derived_second_derivative() {
    let case = case_a();
    let p = &case.problem;
    let s = ShockParams::standard();
    let c = KnotConstants::for_grid(&p.grid).unwrap();
    let uxx: Vec<f64> = p
        .grid
        .nodes()
        .iter()
        .map(|&x| shock_uxx(&s, x, 0.0))
        .collect();
    let scale = max_abs(&uxx);
    for mode in [InitMode::FunctionFit, InitMode::UxxFit] {
        let coeffs = fit_initial(p, mode).unwrap();
        let (_, v) = coeffs.knot_values(&c);
        let n = p.n();
        let err = (1..n).fold(0.0f64, |m, i| m.max((v[i] - uxx[i]).abs()));
        assert!(err <= 1e-8 * scale, "{mode}: {err:e}");
    }
}

#[test]
fn zero_data_fits_to_zero() {
    let grid = UniformGrid::new(0.0, 3.0, 12).unwrap();
    let p = KsProblem::new(
        1.0,
        1.0,
        grid,
        0.01,
        Arc::new(|_| 0.0),
        BoundaryData::default(),
    )
    .unwrap();
    for mode in [InitMode::FunctionFit, InitMode::UxxFit] {
        let coeffs = fit_initial(&p, mode).unwrap();
        assert!(coeffs
            .delta_full()
            .iter()
            .chain(coeffs.phi_full())
            .all(|&v| v == 0.0));
    }
}

#[test]
fn uxx_fit_keeps_the_splitting_residual_small() {
    let case = case_a();
    let solver = Solver::new(case.problem.clone(), Pivoting::Partial).unwrap();
    let c = *solver.constants();
    let mut state = solver.initial_state(InitMode::UxxFit).unwrap();
    for _ in 0..400 {
        let r = state.coeffs.splitting_residual(&c);
        assert!(
            max_abs(&r) <= 1e-8,
            "level {}: {:e}",
            state.level,
            max_abs(&r)
        );
        state = solver.step(&state).unwrap();
    }
}

#[test]
fn splitting_residual_flips_sign_and_ghosts_hold() {
    let case = case_a();
    let solver = Solver::new(case.problem.clone(), Pivoting::Partial).unwrap();
    let c = *solver.constants();
    let mut state = solver.initial_state(InitMode::FunctionFit).unwrap();
    let mut r = state.coeffs.splitting_residual(&c);
    for _ in 0..400 {
        state = solver.step(&state).unwrap();
        let next = state.coeffs.splitting_residual(&c);
        let sum = next
            .iter()
            .zip(&r)
            .fold(0.0f64, |m, (a, b)| m.max((a + b).abs()));
        assert!(
            sum <= 1e-10 * (1.0 + max_abs(&r)),
            "level {}: {sum:e}",
            state.level
        );
        let cr = state.coeffs.constraint_residuals(&c);
        assert!(
            cr.iter().all(|v| v.abs() <= 1e-12),
            "level {}: {cr:?}",
            state.level
        );
        r = next;
    }
}

#[test]
fn zero_state_stays_zero() {
    let grid = UniformGrid::new(-5.0, 5.0, 40).unwrap();
    let p = KsProblem::new(
        1.0,
        1.0,
        grid,
        0.01,
        Arc::new(|_| 0.0),
        BoundaryData::default(),
    )
    .unwrap();
    let solver = Solver::new(p, Pivoting::Partial).unwrap();
    let mut state = solver.initial_state(InitMode::FunctionFit).unwrap();
    for _ in 0..100 {
        state = solver.step(&state).unwrap();
        let m = max_abs(state.coeffs.delta_full()).max(max_abs(state.coeffs.phi_full()));
        assert!(m <= 1e-14);
    }
}

#[test]
fn runs_are_bit_identical() {
    let case = case_a();
    let run = || {
        Solver::new(case.problem.clone(), Pivoting::Partial)
            .unwrap()
            .run(0.5, &[0.1, 0.5], InitMode::FunctionFit)
            .unwrap()
    };
    let (a, b) = (run(), run());
    assert_eq!(a, b);
    let bits = |t: &ks_core::Trajectory| -> Vec<u64> {
        t.snapshots
            .iter()
            .flat_map(|s| s.u.iter().map(|v| v.to_bits()))
            .collect()
    };
    assert_eq!(bits(&a), bits(&b));
}

#[test]
fn zero_end_time_gives_only_the_initial_snapshot() {
    let case = case_a();
    let t = ks_core::run(&case.problem, 0.0, &[], InitMode::FunctionFit).unwrap();
    assert_eq!(t.snapshots.len(), 1);
    assert_eq!(t.snapshots[0].level, 0);
    assert_eq!(t.snapshots[0].u.len(), case.problem.n() + 1);
}

#[test]
fn snapshots_land_on_requested_levels() {
    let case = case_a();
    let t = ks_core::run(&case.problem, 0.3, &[0.1, 0.2, 0.3], InitMode::FunctionFit).unwrap();
    let levels: Vec<usize> = t.snapshots.iter().map(|s| s.level).collect();
    assert_eq!(levels, vec![0, 10, 20, 30]);
    assert!((t.snapshots[3].time - 0.3).abs() < 1e-12);
}

#[test]
fn snapshot_past_the_end_is_rejected() {
    let case = case_a();
    let err = ks_core::run(&case.problem, 0.1, &[0.5], InitMode::FunctionFit).unwrap_err();
    assert!(matches!(err, Error::InvalidParameter { .. }), "{err}");
}

#[test]
fn non_finite_values_abort_the_run() {
    let grid = UniformGrid::new(0.0, 10.0, 20).unwrap();
    let p = KsProblem::new(
        1.0,
        1.0,
        grid,
        0.01,
        Arc::new(|x: f64| {
            if (x - 5.0).abs() < 1e-9 {
                f64::NAN
            } else {
                0.0
            }
        }),
        BoundaryData::default(),
    )
    .unwrap();
    let e = ks_core::run(&p, 1.0, &[], InitMode::FunctionFit).unwrap_err();
    assert!(matches!(e, Error::NonFinite { step: 0, .. }), "{e}");
}
