//! Trigonometric cubic B-splines on a uniform grid.
//!
//! Each basis function `T_i` is built from cubes and products of
//! `sin((x - x_j) / 2)` and is supported on the four intervals
//! `[x_{i-2}, x_{i+2}]`. At the knots only three functions are nonzero, so the
//! value and first two derivatives of a spline expansion at a knot reduce to
//! three-term stencils with the constants in [`KnotConstants`].

use std::f64::consts::PI;
use std::ops::{Add, Mul};

use crate::error::{Error, Result};

/// Upper bound (exclusive) on the knot spacing. At `h = 2pi/3` the normaliser
/// `sin(h/2) sin(h) sin(3h/2)` vanishes.
pub const MAX_SPACING: f64 = 2.0 * PI / 3.0;

/// Uniform partition of `[a, b]` into `N` intervals, extended by two knots on
/// each side.
#[derive(Debug, Clone, PartialEq)]
pub struct UniformGrid {
    a: f64,
    b: f64,
    n_intervals: usize,
    h: f64,
    knots: Vec<f64>,
}

impl UniformGrid {
    pub fn new(a: f64, b: f64, n_intervals: usize) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || b <= a {
            return Err(Error::InvalidGrid(format!(
                "domain [{a}, {b}] must be finite with a < b"
            )));
        }
        if n_intervals == 0 {
            return Err(Error::InvalidGrid("N must be at least 1".into()));
        }
        let h = (b - a) / n_intervals as f64;
        if !(h > 0.0 && h < MAX_SPACING) {
            return Err(Error::InadmissibleSpacing { h });
        }
        let knots = (-2..=n_intervals as isize + 2)
            .map(|j| a + j as f64 * h)
            .collect();
        Ok(Self {
            a,
            b,
            n_intervals,
            h,
            knots,
        })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of intervals `N`.
    pub fn n(&self) -> usize {
        self.n_intervals
    }

    pub fn h(&self) -> f64 {
        self.h
    }

    /// Knot `x_j` for any integer `j`; the partition continues uniformly past
    /// the stored extension knots.
    pub fn knot(&self, j: isize) -> f64 {
        self.a + j as f64 * self.h
    }

    /// Stored knots `x_{-2}, ..., x_{N+2}`.
    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Collocation points `x_0, ..., x_N`.
    pub fn nodes(&self) -> &[f64] {
        &self.knots[2..self.knots.len() - 2]
    }
}

/// Values of a basis function and its first two derivatives at its three
/// interior knots: `T_i(x_{i+-1}) = alpha1`, `T_i(x_i) = alpha2`,
/// `T_i'(x_{i-1}) = -beta1`, `T_i''(x_{i+-1}) = gamma1`, `T_i''(x_i) = gamma2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KnotConstants {
    pub alpha1: f64,
    pub alpha2: f64,
    pub beta1: f64,
    pub gamma1: f64,
    pub gamma2: f64,
}

/// Closed-form knot constants for spacing `h`.
///
/// `gamma2` uses `cot^2(h/2)`; differentiating the middle pieces of the basis
/// confirms this form (it tends to `-2/h^2` as `h -> 0`).
pub fn knot_constants(h: f64) -> Result<KnotConstants> {
    if !(h > 0.0 && h < MAX_SPACING) {
        return Err(Error::InadmissibleSpacing { h });
    }
    let (s_half, c_half) = (h / 2.0).sin_cos();
    let (s1, c1) = h.sin_cos();
    let (s_three_half, c_three_half) = (1.5 * h).sin_cos();

    let alpha1 = s_half * s_half / (s1 * s_three_half);
    let alpha2 = 2.0 / (1.0 + 2.0 * c1);
    let beta1 = -0.75 / s_three_half;
    let gamma1 =
        3.0 * (1.0 + 3.0 * c1) / (s_half * s_half) / (16.0 * (2.0 * c_half + c_three_half));
    let cot_half = c_half / s_half;
    let gamma2 = -3.0 * cot_half * cot_half / (2.0 + 4.0 * c1);

    Ok(KnotConstants {
        alpha1,
        alpha2,
        beta1,
        gamma1,
        gamma2,
    })
}

impl KnotConstants {
    pub fn for_grid(grid: &UniformGrid) -> Result<Self> {
        knot_constants(grid.h())
    }

    /// Stencil for the nodal value, `(alpha1, alpha2, alpha1)`.
    pub fn value_stencil(&self) -> [f64; 3] {
        [self.alpha1, self.alpha2, self.alpha1]
    }

    /// Stencil for the nodal first derivative, `(beta1, 0, -beta1)`.
    pub fn first_stencil(&self) -> [f64; 3] {
        [self.beta1, 0.0, -self.beta1]
    }

    /// Stencil for the nodal second derivative, `(gamma1, gamma2, gamma1)`.
    pub fn second_stencil(&self) -> [f64; 3] {
        [self.gamma1, self.gamma2, self.gamma1]
    }
}

/// Value and first two derivatives of a spline expansion at one knot.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodalValues {
    pub value: f64,
    pub first: f64,
    pub second: f64,
}

/// Evaluates `sum_j c_j T_j` and its derivatives at `x_i` from the window
/// `(c_{i-1}, c_i, c_{i+1})`.
pub fn nodal_values(window: [f64; 3], constants: &KnotConstants) -> NodalValues {
    let [left, mid, right] = window;
    let c = constants;
    NodalValues {
        value: c.alpha1 * left + c.alpha2 * mid + c.alpha1 * right,
        first: c.beta1 * left - c.beta1 * right,
        second: c.gamma1 * left + c.gamma2 * mid + c.gamma1 * right,
    }
}

/// Truncated Taylor jet `(f, f', f'')`, enough to differentiate the basis
/// pieces analytically.
#[derive(Debug, Clone, Copy)]
struct Jet {
    v: f64,
    d1: f64,
    d2: f64,
}

impl Jet {
    /// `sin((x - x_j) / 2)`
    fn w(x: f64, xj: f64) -> Self {
        let (s, c) = (0.5 * (x - xj)).sin_cos();
        Self {
            v: s,
            d1: 0.5 * c,
            d2: -0.25 * s,
        }
    }

    /// `sin((x_j - x) / 2)`
    fn y(x: f64, xj: f64) -> Self {
        let (s, c) = (0.5 * (xj - x)).sin_cos();
        Self {
            v: s,
            d1: -0.5 * c,
            d2: -0.25 * s,
        }
    }
}

impl Add for Jet {
    type Output = Jet;
    fn add(self, rhs: Jet) -> Jet {
        Jet {
            v: self.v + rhs.v,
            d1: self.d1 + rhs.d1,
            d2: self.d2 + rhs.d2,
        }
    }
}

impl Mul for Jet {
    type Output = Jet;
    fn mul(self, rhs: Jet) -> Jet {
        Jet {
            v: self.v * rhs.v,
            d1: self.d1 * rhs.v + self.v * rhs.d1,
            d2: self.d2 * rhs.v + 2.0 * self.d1 * rhs.d1 + self.v * rhs.d2,
        }
    }
}

fn piece_jet(grid: &UniformGrid, i: isize, piece: usize, x: f64) -> Jet {
    let k = |j: isize| grid.knot(i + j);
    let w = |j: isize| Jet::w(x, k(j));
    let y = |j: isize| Jet::y(x, k(j));
    let raw = match piece {
        0 => w(-2) * w(-2) * w(-2),
        1 => w(-2) * (w(-2) * y(0) + y(1) * w(-1)) + y(2) * w(-1) * w(-1),
        2 => w(-2) * y(1) * y(1) + y(2) * (w(-1) * y(1) + y(2) * w(0)),
        _ => y(2) * y(2) * y(2),
    };
    let h = grid.h();
    let inv_norm = 1.0 / ((0.5 * h).sin() * h.sin() * (1.5 * h).sin());
    Jet {
        v: raw.v * inv_norm,
        d1: raw.d1 * inv_norm,
        d2: raw.d2 * inv_norm,
    }
}

fn basis_jet(grid: &UniformGrid, i: isize, x: f64) -> Jet {
    let k = |j: isize| grid.knot(i + j);
    if x < k(-2) || x > k(2) {
        return Jet {
            v: 0.0,
            d1: 0.0,
            d2: 0.0,
        };
    }
    // A point on an interior knot belongs to the piece on its left.
    let piece = if x <= k(-1) {
        0
    } else if x <= k(0) {
        1
    } else if x <= k(1) {
        2
    } else {
        3
    };
    piece_jet(grid, i, piece, x)
}

/// Value and first two derivatives of one of the four pieces of `T_i`
/// (`piece = 0` on `[x_{i-2}, x_{i-1}]` through `piece = 3` on
/// `[x_{i+1}, x_{i+2}]`), evaluated at any `x` without a support check.
/// Evaluating adjacent pieces at their shared knot gives the one-sided limits.
///
/// # Panics
///
/// If `piece > 3`.
pub fn eval_piece(grid: &UniformGrid, i: isize, piece: usize, x: f64) -> NodalValues {
    assert!(piece < 4, "a cubic basis function has four pieces");
    let jet = piece_jet(grid, i, piece, x);
    NodalValues {
        value: jet.v,
        first: jet.d1,
        second: jet.d2,
    }
}

/// `T_i(x)`, zero outside `[x_{i-2}, x_{i+2}]`.
pub fn eval_basis(grid: &UniformGrid, i: isize, x: f64) -> f64 {
    basis_jet(grid, i, x).v
}

/// First (`order = 1`) or second (`order = 2`) derivative of `T_i` at `x`.
pub fn eval_basis_derivative(grid: &UniformGrid, i: isize, x: f64, order: u8) -> Result<f64> {
    let jet = basis_jet(grid, i, x);
    match order {
        1 => Ok(jet.d1),
        2 => Ok(jet.d2),
        other => Err(Error::UnsupportedOrder(other)),
    }
}

/// Order-`k` trigonometric B-spline from the two-term recursion, indexed by
/// the left end of its support `[x_i, x_{i+k}]`.
///
/// The cubic case `k = 4` is a constant multiple of [`eval_basis`] shifted by
/// two indices (`T^4_{i-2}` is proportional to `T_i`). Only used to cross-check
/// the closed-form pieces.
///
/// # Panics
///
/// If `k == 0`.
pub fn eval_basis_recursive(grid: &UniformGrid, i: isize, x: f64, k: usize) -> f64 {
    assert!(k >= 1, "spline order must be at least 1");
    if k == 1 {
        return if grid.knot(i) <= x && x < grid.knot(i + 1) {
            1.0
        } else {
            0.0
        };
    }
    let span = k as isize;
    let xi = grid.knot(i);
    let left_den = (0.5 * (grid.knot(i + span - 1) - xi)).sin();
    let right_den = (0.5 * (grid.knot(i + span) - grid.knot(i + 1))).sin();
    let left = (0.5 * (x - xi)).sin() / left_den * eval_basis_recursive(grid, i, x, k - 1);
    let right = (0.5 * (grid.knot(i + span) - x)).sin() / right_den
        * eval_basis_recursive(grid, i + 1, x, k - 1);
    left + right
}
