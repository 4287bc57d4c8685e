//! Initial spline fit and Crank-Nicolson time stepping.

use std::fmt;
use std::str::FromStr;

use crate::banded::{lu_factor, solve, BandedMatrix, Pivoting};
use crate::basis::KnotConstants;
use crate::error::{Error, Result};
use crate::fd;
use crate::scheme::{
    assemble_a, assemble_b, boundary_vector, recover_ghosts, Coefficients, KsProblem,
};

/// How the initial `delta` coefficients are determined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum InitMode {
    /// Interpolate `u_0` at every knot, with `U_xx = 0` at both ends.
    #[default]
    FunctionFit,
    /// Interpolate `u_xx(x, 0)` at the interior knots; the end values of `U`
    /// are taken from `u_0` since second-derivative data alone leaves two
    /// degrees of freedom open.
    UxxFit,
}

impl InitMode {
    pub fn as_str(self) -> &'static str {
        match self {
            InitMode::FunctionFit => "function-fit",
            InitMode::UxxFit => "uxx-fit",
        }
    }
}

impl fmt::Display for InitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InitMode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "function-fit" => Ok(InitMode::FunctionFit),
            "uxx-fit" => Ok(InitMode::UxxFit),
            other => Err(format!(
                "unknown init mode `{other}` (expected function-fit or uxx-fit)"
            )),
        }
    }
}

/// Solves a three-term collocation system for one coefficient vector.
///
/// `rows[i]` is the stencil over `(c_{i-1}, c_i, c_{i+1})` for knot `i`,
/// `constraint` the stencil whose end values vanish and which determines the
/// ghosts. Returns the full vector `c_{-1}..c_{N+1}`.
fn fit_coefficients(rows: &[[f64; 3]], rhs: &[f64], constraint: [f64; 3]) -> Result<Vec<f64>> {
    let n = rows.len() - 1;
    let ratio = constraint[1] / constraint[0];
    let mut m = BandedMatrix::zeros(n + 1, 1, 1);
    for (i, row) in rows.iter().enumerate() {
        let mut r = *row;
        if i == 0 {
            r[1] -= r[0] * ratio;
            r[2] -= r[0];
            r[0] = 0.0;
        }
        if i == n {
            r[1] -= r[2] * ratio;
            r[0] -= r[2];
            r[2] = 0.0;
        }
        for (k, v) in r.into_iter().enumerate() {
            if v != 0.0 {
                m.set(i, i + k - 1, v)?;
            }
        }
    }
    let inner = solve(&lu_factor(&m, Pivoting::Partial)?, rhs)?;
    let mut full = Vec::with_capacity(n + 3);
    full.push(-(constraint[1] * inner[0] + constraint[2] * inner[1]) / constraint[0]);
    full.extend_from_slice(&inner);
    full.push(-(constraint[1] * inner[n] + constraint[0] * inner[n - 1]) / constraint[2]);
    Ok(full)
}

/// Initial coefficients for the given mode.
///
/// `phi` interpolates `v = u_xx(x, 0)` at the interior knots with `V = 0` at
/// the ends; the two remaining conditions match `V_xx` to a finite-difference
/// estimate of `v_xx` at the end points.
pub fn fit_initial(problem: &KsProblem, mode: InitMode) -> Result<Coefficients> {
    let grid = &problem.grid;
    let h = grid.h();
    let c = KnotConstants::for_grid(grid)?;
    let n = grid.n();
    let nodes = grid.nodes();
    let wrap = |e: Error| Error::FitFailed {
        mode: mode.as_str(),
        h,
        source: Box::new(e),
    };

    let v_at = |x: f64| problem.initial_v_at(x);
    let v_values: Vec<f64> = nodes.iter().map(|&x| v_at(x)).collect();

    let delta = match mode {
        InitMode::FunctionFit => {
            let rows = vec![c.value_stencil(); n + 1];
            let rhs: Vec<f64> = nodes.iter().map(|&x| (problem.initial_u)(x)).collect();
            fit_coefficients(&rows, &rhs, c.second_stencil())
        }
        InitMode::UxxFit => {
            let mut rows = vec![c.second_stencil(); n + 1];
            rows[0] = c.value_stencil();
            rows[n] = c.value_stencil();
            let mut rhs = v_values.clone();
            rhs[0] = (problem.initial_u)(grid.a());
            rhs[n] = (problem.initial_u)(grid.b());
            fit_coefficients(&rows, &rhs, c.second_stencil())
        }
    }
    .map_err(wrap)?;

    let phi = {
        let mut rows = vec![c.value_stencil(); n + 1];
        rows[0] = c.second_stencil();
        rows[n] = c.second_stencil();
        let step = h / 2.0;
        let mut rhs = v_values;
        rhs[0] = fd::second_derivative(&v_at, grid.a(), step, grid.a(), grid.b());
        rhs[n] = fd::second_derivative(&v_at, grid.b(), step, grid.a(), grid.b());
        fit_coefficients(&rows, &rhs, c.value_stencil())
    }
    .map_err(wrap)?;

    Coefficients::from_full(delta, phi)
}

/// Solution at time level `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SolverState {
    pub level: usize,
    pub time: f64,
    pub coeffs: Coefficients,
}

/// Knot values of `U` and `V` at one output time.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub level: usize,
    pub time: f64,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Trajectory {
    /// Requested output times.
    pub cadence: Vec<f64>,
    /// The initial state followed by one snapshot per distinct requested step.
    pub snapshots: Vec<Snapshot>,
}

/// Number of steps needed to reach `t_end`.
pub fn steps_to(t_end: f64, dt: f64) -> usize {
    // 4.0 / 0.01 is 400.00000000000006 in binary floating point
    ((t_end / dt) * (1.0 - 1e-12)).ceil().max(0.0) as usize
}

/// Drives the linearised Crank-Nicolson iteration `A(x^n) x^{n+1} = B x^n + g`.
#[derive(Debug, Clone)]
pub struct Solver {
    problem: KsProblem,
    constants: KnotConstants,
    rhs_matrix: BandedMatrix,
    boundary: Vec<f64>,
    pivoting: Pivoting,
}

impl Solver {
    pub fn new(problem: KsProblem, pivoting: Pivoting) -> Result<Self> {
        let constants = KnotConstants::for_grid(&problem.grid)?;
        let rhs_matrix = assemble_b(&problem, &constants);
        let boundary = boundary_vector(&problem);
        Ok(Self {
            problem,
            constants,
            rhs_matrix,
            boundary,
            pivoting,
        })
    }

    pub fn problem(&self) -> &KsProblem {
        &self.problem
    }

    pub fn constants(&self) -> &KnotConstants {
        &self.constants
    }

    pub fn rhs_matrix(&self) -> &BandedMatrix {
        &self.rhs_matrix
    }

    pub fn pivoting(&self) -> Pivoting {
        self.pivoting
    }

    pub fn initial_state(&self, mode: InitMode) -> Result<SolverState> {
        let coeffs = fit_initial(&self.problem, mode)?;
        if !coeffs.is_finite() {
            return Err(Error::NonFinite { step: 0, time: 0.0 });
        }
        Ok(SolverState {
            level: 0,
            time: 0.0,
            coeffs,
        })
    }

    /// Right-hand side `B x^n + g` for the given state.
    pub fn rhs(&self, state: &SolverState) -> Result<Vec<f64>> {
        let mut rhs = self.rhs_matrix.mul_vec(&state.coeffs.interleaved())?;
        for (r, g) in rhs.iter_mut().zip(&self.boundary) {
            *r += g;
        }
        Ok(rhs)
    }

    /// Advances one time level.
    pub fn step(&self, state: &SolverState) -> Result<SolverState> {
        let next = state.level + 1;
        let time = next as f64 * self.problem.dt;
        let failed = |e: Error| Error::StepFailed {
            step: next,
            source: Box::new(e),
        };
        let a = assemble_a(&self.problem, &self.constants, &state.coeffs);
        let rhs = self.rhs(state).map_err(failed)?;
        let factors = lu_factor(&a, self.pivoting).map_err(failed)?;
        let x = solve(&factors, &rhs).map_err(failed)?;
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite { step: next, time });
        }
        let coeffs = recover_ghosts(&x, &self.constants).map_err(failed)?;
        if !coeffs.is_finite() {
            return Err(Error::NonFinite { step: next, time });
        }
        Ok(SolverState {
            level: next,
            time,
            coeffs,
        })
    }

    pub fn snapshot(&self, state: &SolverState) -> Snapshot {
        let (u, v) = state.coeffs.knot_values(&self.constants);
        Snapshot {
            level: state.level,
            time: state.time,
            u,
            v,
        }
    }

    /// Fits the initial state and integrates to `t_end`.
    pub fn run(&self, t_end: f64, snapshot_times: &[f64], mode: InitMode) -> Result<Trajectory> {
        let state = self.initial_state(mode)?;
        self.run_from(state, t_end, snapshot_times)
    }

    /// Integrates from `state` (assumed at level 0) for `ceil(t_end / dt)`
    /// steps, recording the initial state and every requested time rounded to
    /// the nearest step.
    pub fn run_from(
        &self,
        state: SolverState,
        t_end: f64,
        snapshot_times: &[f64],
    ) -> Result<Trajectory> {
        if !(t_end >= 0.0 && t_end.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "t_end",
                reason: format!("must be non-negative and finite, got {t_end}"),
            });
        }
        let dt = self.problem.dt;
        let n_steps = steps_to(t_end, dt);
        let mut levels = Vec::with_capacity(snapshot_times.len() + 1);
        levels.push(0usize);
        for &t in snapshot_times {
            if !(t >= 0.0 && t <= t_end + 0.5 * dt) {
                return Err(Error::InvalidParameter {
                    name: "snapshot_times",
                    reason: format!("{t} lies outside [0, {t_end}]"),
                });
            }
            levels.push(((t / dt).round() as usize).min(n_steps));
        }
        levels.sort_unstable();
        levels.dedup();

        let mut trajectory = Trajectory {
            cadence: snapshot_times.to_vec(),
            snapshots: Vec::with_capacity(levels.len()),
        };
        let mut pending = levels.into_iter().peekable();
        let mut state = state;
        loop {
            if pending.peek() == Some(&state.level) {
                trajectory.snapshots.push(self.snapshot(&state));
                pending.next();
            }
            if state.level >= n_steps {
                break;
            }
            state = self.step(&state)?;
        }
        Ok(trajectory)
    }
}

/// Fits and integrates `problem` with partial pivoting.
pub fn run(
    problem: &KsProblem,
    t_end: f64,
    snapshot_times: &[f64],
    mode: InitMode,
) -> Result<Trajectory> {
    Solver::new(problem.clone(), Pivoting::Partial)?.run(t_end, snapshot_times, mode)
}
