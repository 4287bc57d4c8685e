#![allow(dead_code)]

use std::sync::Arc;

use ks_core::{
    dense_solve, knot_constants, BoundaryData, Coefficients, KnotConstants, KsProblem, UniformGrid,
};
use rand::Rng;

/// One linearised Crank-Nicolson step written directly from the collocation
/// equations over all `2N + 6` coefficients (ghosts included): `u`-rows at
/// every knot, `v`-rows at the interior knots, Dirichlet rows at the two end
/// knots, and the four boundary constraints as extra rows. Solved densely.
///
/// Returns `(delta, phi)` indexed from `i = -1`.
pub fn dense_augmented_step(p: &KsProblem, delta: &[f64], phi: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let n = p.grid.n();
    let c = knot_constants(p.grid.h()).unwrap();
    let (a1, a2, b1, g1, g2) = (c.alpha1, c.alpha2, c.beta1, c.gamma1, c.gamma2);
    let (dt, al, th) = (p.dt, p.alpha, p.theta);
    let size = 2 * (n + 3);
    // column of delta_i / phi_i, i from -1
    let d = |i: usize| i;
    let f = |i: usize| n + 3 + i;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut rhs = Vec::new();
    for m in 0..=n {
        // window indices for knot m are m, m+1, m+2 in the shifted arrays
        let (l, cen, r) = (m, m + 1, m + 2);
        let k1 = a1 * delta[l] + a2 * delta[cen] + a1 * delta[r];
        let k2 = b1 * delta[l] - b1 * delta[r];
        let mut row = vec![0.0; size];
        row[d(l)] = (2.0 / dt + k2) * a1 + k1 * b1;
        row[f(l)] = al * a1 + th * g1;
        row[d(cen)] = (2.0 / dt + k2) * a2;
        row[f(cen)] = al * a2 + th * g2;
        row[d(r)] = (2.0 / dt + k2) * a1 - k1 * b1;
        row[f(r)] = al * a1 + th * g1;
        rows.push(row);
        rhs.push(
            2.0 / dt * a1 * delta[l] - (al * a1 + th * g1) * phi[l] + 2.0 / dt * a2 * delta[cen]
                - (al * a2 + th * g2) * phi[cen]
                + 2.0 / dt * a1 * delta[r]
                - (al * a1 + th * g1) * phi[r],
        );
        let mut row = vec![0.0; size];
        if m == 0 || m == n {
            row[d(l)] = a1;
            row[d(cen)] = a2;
            row[d(r)] = a1;
            rows.push(row);
            rhs.push(if m == 0 { p.boundary.g0 } else { p.boundary.g1 });
        } else {
            row[d(l)] = -g1;
            row[f(l)] = a1;
            row[d(cen)] = -g2;
            row[f(cen)] = a2;
            row[d(r)] = -g1;
            row[f(r)] = a1;
            rows.push(row);
            rhs.push(
                g1 * delta[l] - a1 * phi[l] + g2 * delta[cen] - a2 * phi[cen] + g1 * delta[r]
                    - a1 * phi[r],
            );
        }
    }
    for m in [0, n] {
        let mut row = vec![0.0; size];
        row[d(m)] = g1;
        row[d(m + 1)] = g2;
        row[d(m + 2)] = g1;
        rows.push(row);
        rhs.push(0.0);
        let mut row = vec![0.0; size];
        row[f(m)] = a1;
        row[f(m + 1)] = a2;
        row[f(m + 2)] = a1;
        rows.push(row);
        rhs.push(0.0);
    }
    let z = dense_solve(&rows, &rhs).unwrap();
    (z[..n + 3].to_vec(), z[n + 3..].to_vec())
}

/// Random coefficients that satisfy the four boundary constraints.
pub fn random_state(rng: &mut impl Rng, n: usize, c: &KnotConstants, scale: f64) -> Coefficients {
    let mut delta: Vec<f64> = (0..n + 3).map(|_| rng.gen_range(-scale..scale)).collect();
    let mut phi: Vec<f64> = (0..n + 3).map(|_| rng.gen_range(-scale..scale)).collect();
    delta[0] = -(c.gamma2 * delta[1] + c.gamma1 * delta[2]) / c.gamma1;
    delta[n + 2] = -(c.gamma2 * delta[n + 1] + c.gamma1 * delta[n]) / c.gamma1;
    phi[0] = -(c.alpha2 * phi[1] + c.alpha1 * phi[2]) / c.alpha1;
    phi[n + 2] = -(c.alpha2 * phi[n + 1] + c.alpha1 * phi[n]) / c.alpha1;
    Coefficients::from_full(delta, phi).unwrap()
}

pub fn random_problem(rng: &mut impl Rng, n: usize) -> KsProblem {
    let h = rng.gen_range(0.05..1.2);
    let a = rng.gen_range(-5.0..5.0);
    let grid = UniformGrid::new(a, a + h * n as f64, n).unwrap();
    KsProblem::new(
        rng.gen_range(-1.5..1.5),
        rng.gen_range(0.01..2.0),
        grid,
        rng.gen_range(1e-3..0.1),
        Arc::new(|_| 0.0),
        BoundaryData {
            g0: rng.gen_range(-2.0..2.0),
            g1: rng.gen_range(-2.0..2.0),
        },
    )
    .unwrap()
}

pub fn max_abs(v: &[f64]) -> f64 {
    v.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

pub fn max_rel_diff(a: &[f64], b: &[f64]) -> f64 {
    let scale = max_abs(b).max(1e-300);
    a.iter()
        .zip(b)
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
        / scale
}

/// Second derivative of the case-(a) shock profile, differentiated by hand:
/// with `T = tanh(k xi)`, `T' = k (1 - T^2)`, `T'' = -2 k T T'`,
/// `u'' = c (6 f T T'^2 + (e + 3 f T^2) T'')`, `c = 15 d / 19`.
pub fn shock_uxx(p: &ks_core::ShockParams, x: f64, t: f64) -> f64 {
    let tt = (p.k * (x - p.b * t - p.x0)).tanh();
    let t1 = p.k * (1.0 - tt * tt);
    let t2 = -2.0 * p.k * tt * t1;
    15.0 / 19.0 * p.d * (6.0 * p.f * tt * t1 * t1 + (p.e + 3.0 * p.f * tt * tt) * t2)
}
