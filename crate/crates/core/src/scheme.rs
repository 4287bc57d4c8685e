//! Linearised Crank-Nicolson collocation system for the order-reduced
//! Kuramoto-Sivashinsky equation
//!
//! ```text
//! u_t + u u_x + alpha v + theta v_xx = 0,    v - u_xx = 0.
//! ```
//!
//! The unknowns at a time level are the spline coefficients `delta_i` of `U`
//! and `phi_i` of `V`, `i = -1..=N+1`. Collocating both equations at every knot
//! gives two rows per knot over the six coefficients
//! `(delta_{m-1}, phi_{m-1}, delta_m, phi_m, delta_{m+1}, phi_{m+1})`. The four
//! ghost coefficients are fixed by `U_xx = 0` and `V = 0` at both ends and are
//! folded into the interior columns, leaving a banded system over the
//! interleaved vector `(delta_0, phi_0, delta_1, phi_1, ..., delta_N, phi_N)`.
//!
//! At `x_0` and `x_N` the `v`-row reads `V - U_xx = 0`, which the ghost
//! constraints already satisfy identically; after elimination it is a zero row.
//! Those two rows are replaced by the Dirichlet conditions `U(x_0) = g0` and
//! `U(x_N) = g1`.

use std::fmt;
use std::sync::Arc;

use crate::banded::BandedMatrix;
use crate::basis::{nodal_values, KnotConstants, UniformGrid};
use crate::error::{Error, Result};
use crate::fd;

/// Lower and upper bandwidth of the interleaved collocation matrices.
pub const BANDWIDTH: usize = 3;

pub type InitialFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Endpoint values `u(a, t) = g0`, `u(b, t) = g1`. The scheme also enforces
/// `U_xx = 0` and `V = 0` at both ends through the ghost coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct BoundaryData {
    pub g0: f64,
    pub g1: f64,
}

#[derive(Clone)]
pub struct KsProblem {
    pub alpha: f64,
    pub theta: f64,
    pub grid: UniformGrid,
    pub dt: f64,
    pub initial_u: InitialFn,
    /// `u_xx(x, 0)`; a finite-difference estimate of `initial_u` is used when
    /// absent.
    pub initial_v: Option<InitialFn>,
    pub boundary: BoundaryData,
}

impl fmt::Debug for KsProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KsProblem")
            .field("alpha", &self.alpha)
            .field("theta", &self.theta)
            .field("grid", &self.grid)
            .field("dt", &self.dt)
            .field("initial_v", &self.initial_v.as_ref().map(|_| "analytic"))
            .field("boundary", &self.boundary)
            .finish_non_exhaustive()
    }
}

impl KsProblem {
    pub fn new(
        alpha: f64,
        theta: f64,
        grid: UniformGrid,
        dt: f64,
        initial_u: InitialFn,
        boundary: BoundaryData,
    ) -> Result<Self> {
        if !(dt > 0.0 && dt.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "dt",
                reason: format!("must be positive and finite, got {dt}"),
            });
        }
        if theta == 0.0 || !theta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "theta",
                reason: format!("must be nonzero and finite, got {theta}"),
            });
        }
        if !alpha.is_finite() {
            return Err(Error::InvalidParameter {
                name: "alpha",
                reason: format!("must be finite, got {alpha}"),
            });
        }
        if grid.n() < 2 {
            return Err(Error::InvalidParameter {
                name: "n",
                reason: "the collocation system needs at least 2 intervals".into(),
            });
        }
        Ok(Self {
            alpha,
            theta,
            grid,
            dt,
            initial_u,
            initial_v: None,
            boundary,
        })
    }

    pub fn with_initial_v(mut self, v: InitialFn) -> Self {
        self.initial_v = Some(v);
        self
    }

    /// `u_xx(x, 0)`: the supplied function, or a fourth-order central
    /// difference of `initial_u` with step `h/10` (one-sided at the ends).
    pub fn initial_v_at(&self, x: f64) -> f64 {
        match &self.initial_v {
            Some(v) => v(x),
            None => fd::second_derivative(
                self.initial_u.as_ref(),
                x,
                self.grid.h() / 10.0,
                self.grid.a(),
                self.grid.b(),
            ),
        }
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    /// Size of the reduced system, `2N + 2`.
    pub fn system_dim(&self) -> usize {
        2 * self.n() + 2
    }
}

/// Spline coefficients `delta_i`, `phi_i` for `i = -1..=N+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Coefficients {
    delta: Vec<f64>,
    phi: Vec<f64>,
}

impl Coefficients {
    pub fn zeros(n: usize) -> Self {
        Self {
            delta: vec![0.0; n + 3],
            phi: vec![0.0; n + 3],
        }
    }

    /// Builds from full coefficient vectors indexed from `i = -1`.
    pub fn from_full(delta: Vec<f64>, phi: Vec<f64>) -> Result<Self> {
        if delta.len() != phi.len() {
            return Err(Error::DimensionMismatch {
                expected: delta.len(),
                got: phi.len(),
            });
        }
        if delta.len() < 5 {
            return Err(Error::InvalidParameter {
                name: "coefficients",
                reason: "need at least N = 2".into(),
            });
        }
        Ok(Self { delta, phi })
    }

    /// Number of intervals `N`.
    pub fn n(&self) -> usize {
        self.delta.len() - 3
    }

    pub fn delta(&self, i: isize) -> f64 {
        self.delta[(i + 1) as usize]
    }

    pub fn phi(&self, i: isize) -> f64 {
        self.phi[(i + 1) as usize]
    }

    /// `delta_{-1}, ..., delta_{N+1}`
    pub fn delta_full(&self) -> &[f64] {
        &self.delta
    }

    /// `phi_{-1}, ..., phi_{N+1}`
    pub fn phi_full(&self) -> &[f64] {
        &self.phi
    }

    pub fn delta_window(&self, m: usize) -> [f64; 3] {
        [self.delta[m], self.delta[m + 1], self.delta[m + 2]]
    }

    pub fn phi_window(&self, m: usize) -> [f64; 3] {
        [self.phi[m], self.phi[m + 1], self.phi[m + 2]]
    }

    /// Interior coefficients interleaved as `(delta_0, phi_0, ..., delta_N, phi_N)`.
    pub fn interleaved(&self) -> Vec<f64> {
        (0..=self.n())
            .flat_map(|m| [self.delta[m + 1], self.phi[m + 1]])
            .collect()
    }

    /// Residuals of `U_xx(a) = 0`, `V(a) = 0`, `U_xx(b) = 0`, `V(b) = 0`.
    pub fn constraint_residuals(&self, c: &KnotConstants) -> [f64; 4] {
        let n = self.n();
        [
            nodal_values(self.delta_window(0), c).second,
            nodal_values(self.phi_window(0), c).value,
            nodal_values(self.delta_window(n), c).second,
            nodal_values(self.phi_window(n), c).value,
        ]
    }

    /// Knot values `U(x_i)` and `V(x_i)`, `i = 0..=N`.
    pub fn knot_values(&self, c: &KnotConstants) -> (Vec<f64>, Vec<f64>) {
        (0..=self.n())
            .map(|m| {
                (
                    nodal_values(self.delta_window(m), c).value,
                    nodal_values(self.phi_window(m), c).value,
                )
            })
            .unzip()
    }

    /// `V(x_i) - U_xx(x_i)` at every knot.
    pub fn splitting_residual(&self, c: &KnotConstants) -> Vec<f64> {
        (0..=self.n())
            .map(|m| {
                nodal_values(self.phi_window(m), c).value
                    - nodal_values(self.delta_window(m), c).second
            })
            .collect()
    }

    pub fn is_finite(&self) -> bool {
        self.delta.iter().chain(&self.phi).all(|v| v.is_finite())
    }
}

/// Per-row quantities of the linearised collocation equations at knot `m`.
/// `k1`, `k2` are `U^n(x_m)` and `U_x^n(x_m)`; `nu1..nu5` multiply level `n+1`,
/// `nu6..nu9` level `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RowCoefficients {
    pub k1: f64,
    pub k2: f64,
    pub nu1: f64,
    pub nu2: f64,
    pub nu3: f64,
    pub nu4: f64,
    pub nu5: f64,
    pub nu6: f64,
    pub nu7: f64,
    pub nu8: f64,
    pub nu9: f64,
}

pub fn row_coefficients(
    c: &KnotConstants,
    delta_window: [f64; 3],
    dt: f64,
    alpha: f64,
    theta: f64,
) -> RowCoefficients {
    let nodal = nodal_values(delta_window, c);
    let (k1, k2) = (nodal.value, nodal.first);
    let lead = 2.0 / dt + k2;
    let side = alpha * c.alpha1 + theta * c.gamma1;
    let centre = alpha * c.alpha2 + theta * c.gamma2;
    RowCoefficients {
        k1,
        k2,
        nu1: lead * c.alpha1 + k1 * c.beta1,
        nu2: side,
        nu3: lead * c.alpha2,
        nu4: centre,
        nu5: lead * c.alpha1 - k1 * c.beta1,
        nu6: 2.0 / dt * c.alpha1,
        nu7: -side,
        nu8: 2.0 / dt * c.alpha2,
        nu9: -centre,
    }
}

/// Coefficients of one collocation row over
/// `(delta_{m-1}, phi_{m-1}, delta_m, phi_m, delta_{m+1}, phi_{m+1})`.
pub type RowBlock = [f64; 6];

/// `u`-equation, level `n+1`.
pub fn lhs_u_row(rc: &RowCoefficients) -> RowBlock {
    [rc.nu1, rc.nu2, rc.nu3, rc.nu4, rc.nu5, rc.nu2]
}

/// `v`-equation, level `n+1`: `V - U_xx`.
pub fn lhs_v_row(c: &KnotConstants) -> RowBlock {
    [
        -c.gamma1, c.alpha1, -c.gamma2, c.alpha2, -c.gamma1, c.alpha1,
    ]
}

/// `u`-equation, level `n`.
pub fn rhs_u_row(rc: &RowCoefficients) -> RowBlock {
    [rc.nu6, rc.nu7, rc.nu8, rc.nu9, rc.nu6, rc.nu7]
}

/// `v`-equation, level `n`: `U_xx - V`.
pub fn rhs_v_row(c: &KnotConstants) -> RowBlock {
    lhs_v_row(c).map(|v| -v)
}

/// `U(x_m)`, the row that replaces the degenerate end `v`-rows.
pub fn dirichlet_row(c: &KnotConstants) -> RowBlock {
    [c.alpha1, 0.0, c.alpha2, 0.0, c.alpha1, 0.0]
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum End {
    Left,
    Right,
}

/// Folds the ghost columns of an end row into the interior columns using
///
/// ```text
/// delta_{-1}  = -(gamma2/gamma1) delta_0 - delta_1
/// phi_{-1}    = -(alpha2/alpha1) phi_0   - phi_1
/// ```
///
/// and the mirrored relations at `N`. The ghost slots of the result are zero.
pub fn eliminate_ghosts(row: RowBlock, end: End, c: &KnotConstants) -> RowBlock {
    let delta_ratio = c.gamma2 / c.gamma1;
    let phi_ratio = c.alpha2 / c.alpha1;
    let mut out = row;
    // (ghost slot, centre slot, inner neighbour slot, ratio) for delta and phi
    let folds = match end {
        End::Left => [(0, 2, 4, delta_ratio), (1, 3, 5, phi_ratio)],
        End::Right => [(4, 2, 0, delta_ratio), (5, 3, 1, phi_ratio)],
    };
    for (ghost, centre, inner, ratio) in folds {
        let g = out[ghost];
        out[centre] -= g * ratio;
        out[inner] -= g;
        out[ghost] = 0.0;
    }
    out
}

/// Fills the four ghost coefficients from an interleaved interior vector so
/// the boundary constraints hold.
pub fn recover_ghosts(interior: &[f64], c: &KnotConstants) -> Result<Coefficients> {
    if !interior.len().is_multiple_of(2) || interior.len() < 6 {
        return Err(Error::DimensionMismatch {
            expected: interior.len() + interior.len() % 2,
            got: interior.len(),
        });
    }
    let n = interior.len() / 2 - 1;
    let mut delta = vec![0.0; n + 3];
    let mut phi = vec![0.0; n + 3];
    for m in 0..=n {
        delta[m + 1] = interior[2 * m];
        phi[m + 1] = interior[2 * m + 1];
    }
    delta[0] = -(c.gamma2 * delta[1] + c.gamma1 * delta[2]) / c.gamma1;
    phi[0] = -(c.alpha2 * phi[1] + c.alpha1 * phi[2]) / c.alpha1;
    delta[n + 2] = -(c.gamma2 * delta[n + 1] + c.gamma1 * delta[n]) / c.gamma1;
    phi[n + 2] = -(c.alpha2 * phi[n + 1] + c.alpha1 * phi[n]) / c.alpha1;
    Ok(Coefficients { delta, phi })
}

fn place_block(
    m: &mut BandedMatrix,
    row: usize,
    block: usize,
    n: usize,
    values: RowBlock,
    c: &KnotConstants,
) {
    let values = if block == 0 {
        eliminate_ghosts(values, End::Left, c)
    } else if block == n {
        eliminate_ghosts(values, End::Right, c)
    } else {
        values
    };
    for (slot, v) in values.into_iter().enumerate() {
        if v == 0.0 {
            continue;
        }
        let col = 2 * block + slot;
        // slots 0..2 belong to knot block-1
        let col = col
            .checked_sub(2)
            .expect("ghost slots are zero after elimination");
        m.set(row, col, v)
            .expect("collocation stencil lies within the band");
    }
}

/// Level-`n+1` matrix `A` for the current coefficients.
pub fn assemble_a(problem: &KsProblem, c: &KnotConstants, coeffs: &Coefficients) -> BandedMatrix {
    let n = problem.n();
    let mut a = BandedMatrix::zeros(problem.system_dim(), BANDWIDTH, BANDWIDTH);
    let v_row = lhs_v_row(c);
    for m in 0..=n {
        let rc = row_coefficients(
            c,
            coeffs.delta_window(m),
            problem.dt,
            problem.alpha,
            problem.theta,
        );
        place_block(&mut a, 2 * m, m, n, lhs_u_row(&rc), c);
        let second = if m == 0 || m == n {
            dirichlet_row(c)
        } else {
            v_row
        };
        place_block(&mut a, 2 * m + 1, m, n, second, c);
    }
    a
}

/// Level-`n` matrix `B`. It does not depend on the solution and is assembled
/// once per run. The Dirichlet rows are zero; their data enters through
/// [`boundary_vector`].
pub fn assemble_b(problem: &KsProblem, c: &KnotConstants) -> BandedMatrix {
    let n = problem.n();
    let mut b = BandedMatrix::zeros(problem.system_dim(), BANDWIDTH, BANDWIDTH);
    let rc = row_coefficients(c, [0.0; 3], problem.dt, problem.alpha, problem.theta);
    let u_row = rhs_u_row(&rc);
    let v_row = rhs_v_row(c);
    for m in 0..=n {
        place_block(&mut b, 2 * m, m, n, u_row, c);
        if m != 0 && m != n {
            place_block(&mut b, 2 * m + 1, m, n, v_row, c);
        }
    }
    b
}

/// Right-hand-side contribution of the Dirichlet rows.
pub fn boundary_vector(problem: &KsProblem) -> Vec<f64> {
    let mut g = vec![0.0; problem.system_dim()];
    g[1] = problem.boundary.g0;
    g[2 * problem.n() + 1] = problem.boundary.g1;
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::knot_constants;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn problem(n: usize, h: f64, dt: f64, alpha: f64, theta: f64) -> KsProblem {
        let grid = UniformGrid::new(0.0, h * n as f64, n).unwrap();
        KsProblem::new(
            alpha,
            theta,
            grid,
            dt,
            Arc::new(|_| 0.0),
            BoundaryData::default(),
        )
        .unwrap()
    }

    #[test]
    fn zero_window_row_coefficients() {
        let c = knot_constants(0.4).unwrap();
        let (dt, alpha, theta) = (0.01, 1.0, 1.0);
        let rc = row_coefficients(&c, [0.0; 3], dt, alpha, theta);
        assert_eq!((rc.k1, rc.k2), (0.0, 0.0));
        assert_eq!(rc.nu1, 2.0 / dt * c.alpha1);
        assert_eq!(rc.nu5, 2.0 / dt * c.alpha1);
        assert_eq!(rc.nu3, 2.0 / dt * c.alpha2);
        assert_eq!(rc.nu2, alpha * c.alpha1 + theta * c.gamma1);
        assert_eq!(rc.nu4, alpha * c.alpha2 + theta * c.gamma2);
        assert_eq!(rc.nu6, 2.0 / dt * c.alpha1);
        assert_eq!(rc.nu8, 2.0 / dt * c.alpha2);
        assert_eq!(rc.nu7, -(alpha * c.alpha1 + theta * c.gamma1));
        assert_eq!(rc.nu9, -(alpha * c.alpha2 + theta * c.gamma2));
    }

    #[test]
    fn odd_window_gives_pure_slope() {
        let c = knot_constants(0.4).unwrap();
        let rc = row_coefficients(&c, [1.0, 0.0, -1.0], 0.01, 1.0, 1.0);
        assert_eq!(rc.k1, 0.0);
        assert_eq!(rc.k2, 2.0 * c.beta1);
    }

    #[test]
    fn row_coefficient_identities() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let h = rng.gen_range(0.01..1.5);
            let c = knot_constants(h).unwrap();
            let w = [
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
                rng.gen_range(-10.0..10.0),
            ];
            let dt = rng.gen_range(1e-4..0.1);
            let rc = row_coefficients(
                &c,
                w,
                dt,
                rng.gen_range(-2.0..2.0),
                rng.gen_range(0.001..2.0),
            );
            assert_eq!(rc.nu2, -rc.nu7);
            assert_eq!(rc.nu4, -rc.nu9);
            let target = 2.0 * (2.0 / dt + rc.k2) * c.alpha1;
            assert!((rc.nu1 + rc.nu5 - target).abs() <= 1e-12 * target.abs().max(1.0));
        }
    }

    #[test]
    fn ghost_elimination_by_substitution() {
        let c = knot_constants(0.4).unwrap();
        let coef = 2.5;
        let out = eliminate_ghosts([coef, 0.0, 0.0, 0.0, 0.0, 0.0], End::Left, &c);
        assert_eq!(out[0], 0.0);
        assert!((out[2] - (-coef * c.gamma2 / c.gamma1)).abs() < 1e-15);
        assert_eq!(out[4], -coef);
        let out = eliminate_ghosts([0.0, 0.0, 0.0, 0.0, 0.0, coef], End::Right, &c);
        assert_eq!(out[5], 0.0);
        assert!((out[3] - (-coef * c.alpha2 / c.alpha1)).abs() < 1e-15);
        assert_eq!(out[1], -coef);
    }

    #[test]
    fn end_v_rows_degenerate_under_constraints() {
        // the reason the end v-rows are replaced by Dirichlet rows
        let c = knot_constants(0.4).unwrap();
        for end in [End::Left, End::Right] {
            let folded = eliminate_ghosts(lhs_v_row(&c), end, &c);
            assert!(folded.iter().all(|v| v.abs() < 1e-12), "{folded:?}");
        }
    }

    #[test]
    fn recovered_ghosts_satisfy_constraints() {
        let c = knot_constants(0.4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x: Vec<f64> = (0..14).map(|_| rng.gen_range(-5.0..5.0)).collect();
        let coeffs = recover_ghosts(&x, &c).unwrap();
        assert_eq!(coeffs.n(), 6);
        assert_eq!(coeffs.interleaved(), x);
        for r in coeffs.constraint_residuals(&c) {
            assert!(r.abs() < 1e-12);
        }
        assert!(recover_ghosts(&x[..5], &c).is_err());
    }

    #[test]
    fn hand_assembled_a_for_two_intervals() {
        let (h, dt) = (0.4, 1.0);
        let p = problem(2, h, dt, 1.0, 1.0);
        let c = knot_constants(h).unwrap();
        let a = assemble_a(&p, &c, &Coefficients::zeros(2));
        let (a1, a2, g1, g2) = (c.alpha1, c.alpha2, c.gamma1, c.gamma2);
        let (n1, n3) = (2.0 * a1, 2.0 * a2);
        let (n2, n4) = (a1 + g1, a2 + g2);
        let r = g2 / g1;
        let s = a2 / a1;
        // brute force: rows written out from the collocation equations with
        // the ghosts substituted by hand
        let expected = [
            [n3 - n1 * r, n4 - n2 * s, n1 - n1, n2 - n2, 0.0, 0.0],
            [a2 - a1 * r, 0.0, 0.0, 0.0, 0.0, 0.0],
            [n1, n2, n3, n4, n1, n2],
            [-g1, a1, -g2, a2, -g1, a1],
            [0.0, 0.0, n1 - n1, n2 - n2, n3 - n1 * r, n4 - n2 * s],
            [0.0, 0.0, 0.0, 0.0, a2 - a1 * r, 0.0],
        ];
        for (i, row) in expected.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert!(
                    (a.get(i, j) - v).abs() < 1e-12,
                    "({i},{j}): {} vs {v}",
                    a.get(i, j)
                );
            }
        }
    }

    #[test]
    fn bandwidth_of_assembled_matrices() {
        let p = problem(8, 0.4, 0.01, 1.0, 1.0);
        let c = knot_constants(0.4).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let x: Vec<f64> = (0..18).map(|_| rng.gen_range(-1.0..1.0)).collect();
        let coeffs = recover_ghosts(&x, &c).unwrap();
        for m in [assemble_a(&p, &c, &coeffs), assemble_b(&p, &c)] {
            let dense = m.to_dense();
            for (r, row) in dense.iter().enumerate() {
                for (col, &v) in row.iter().enumerate() {
                    if col > r + 3 || r > col + 3 {
                        assert_eq!(v, 0.0);
                    }
                }
            }
        }
    }

    #[test]
    fn interior_v_rows_have_printed_pattern() {
        let p = problem(6, 0.4, 0.01, 1.0, 1.0);
        let c = knot_constants(0.4).unwrap();
        let a = assemble_a(&p, &c, &Coefficients::zeros(6));
        let b = assemble_b(&p, &c);
        for m in 1..6 {
            let row = 2 * m + 1;
            let base = 2 * m - 2;
            let got: Vec<f64> = (0..6).map(|s| a.get(row, base + s)).collect();
            assert_eq!(got, lhs_v_row(&c).to_vec());
            let neg: Vec<f64> = (0..6).map(|s| b.get(row, base + s)).collect();
            assert_eq!(neg, got.iter().map(|v| -v).collect::<Vec<_>>());
        }
    }

    #[test]
    fn a_and_b_differ_only_by_time_terms_at_zero_state() {
        let p = problem(6, 0.4, 0.01, 1.0, 0.5);
        let c = knot_constants(0.4).unwrap();
        let a = assemble_a(&p, &c, &Coefficients::zeros(6));
        let b = assemble_b(&p, &c);
        for m in 1..6 {
            let (row, base) = (2 * m, 2 * m - 2);
            for s in 0..6 {
                let (av, bv) = (a.get(row, base + s), b.get(row, base + s));
                if s % 2 == 0 {
                    assert_eq!(av, bv, "delta columns carry 2/dt terms in both");
                } else {
                    assert_eq!(av, -bv);
                }
            }
        }
    }

    #[test]
    fn problem_validation() {
        let grid = UniformGrid::new(0.0, 1.0, 4).unwrap();
        let f: InitialFn = Arc::new(|_| 0.0);
        let bd = BoundaryData::default();
        assert!(KsProblem::new(1.0, 1.0, grid.clone(), 0.0, f.clone(), bd).is_err());
        assert!(KsProblem::new(1.0, 0.0, grid.clone(), 0.1, f.clone(), bd).is_err());
        let one = UniformGrid::new(0.0, 1.0, 1).unwrap();
        assert!(KsProblem::new(1.0, 1.0, one, 0.1, f.clone(), bd).is_err());
        assert!(KsProblem::new(1.0, 1.0, grid, 0.1, f, bd).is_ok());
    }
}
