//! Built-in test problems: a travelling shock with a closed-form solution and
//! two chaotic initial-boundary value problems.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::basis::UniformGrid;
use crate::error::{Error, Result};
use crate::scheme::{BoundaryData, KsProblem};
use crate::stepper::Snapshot;

/// Parameters of the shock profile
/// `u = b + (15/19) d [e tanh(k xi) + f tanh^3(k xi)]`, `xi = x - b t - x0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShockParams {
    pub b: f64,
    pub k: f64,
    pub x0: f64,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

impl ShockParams {
    /// Wave speed 5 starting at `x0 = -12`; an exact solution for
    /// `alpha = theta = 1`.
    pub fn standard() -> Self {
        let r = (11.0f64 / 19.0).sqrt();
        Self {
            b: 5.0,
            k: 0.5 * r,
            x0: -12.0,
            d: r,
            e: -9.0,
            f: 11.0,
        }
    }

    pub fn eval(&self, x: f64, t: f64) -> f64 {
        exact_shock(self, x, t)
    }

    /// `u_xx` of the profile, written in terms of `sech^2(k xi)`.
    pub fn eval_uxx(&self, x: f64, t: f64) -> f64 {
        let th = (self.k * (x - self.b * t - self.x0)).tanh();
        let s2 = 1.0 - th * th;
        15.0 / 19.0
            * self.d
            * self.k
            * self.k
            * s2
            * th
            * (6.0 * self.f * s2 - 2.0 * self.e - 6.0 * self.f * th * th)
    }

    /// Limits as `x -> +inf` and `x -> -inf`.
    pub fn far_field(&self) -> (f64, f64) {
        let amp = 15.0 / 19.0 * self.d * (self.e + self.f);
        let sign = self.k.signum();
        (self.b + sign * amp, self.b - sign * amp)
    }
}

pub fn exact_shock(p: &ShockParams, x: f64, t: f64) -> f64 {
    let th = (p.k * (x - p.b * t - p.x0)).tanh();
    p.b + 15.0 / 19.0 * p.d * (p.e * th + p.f * th * th * th)
}

/// Global relative error `sum |U_j - u_j| / sum |u_j|`.
pub fn gre(numeric: &[f64], exact: &[f64]) -> Result<f64> {
    if numeric.len() != exact.len() {
        return Err(Error::DimensionMismatch {
            expected: exact.len(),
            got: numeric.len(),
        });
    }
    let den: f64 = exact.iter().map(|v| v.abs()).sum();
    if den.is_nan() || den <= 0.0 {
        return Err(Error::ZeroDenominator);
    }
    let num: f64 = numeric.iter().zip(exact).map(|(a, b)| (a - b).abs()).sum();
    Ok(num / den)
}

/// One row of the published error table for the shock problem
/// (`N = 150`, `dt = 0.01`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceGre {
    pub t: f64,
    /// Trigonometric cubic B-spline collocation (this method).
    pub present: f64,
    /// Quintic B-spline collocation.
    pub quintic: f64,
    /// Lattice Boltzmann.
    pub lattice_boltzmann: f64,
}

/// Published global relative errors for the shock problem, copied verbatim
/// from the source table.
pub const SHOCK_REFERENCE_GRE: [ReferenceGre; 4] = [
    ReferenceGre {
        t: 1.0,
        present: 2.98416e-5,
        quintic: 3.81725e-4,
        lattice_boltzmann: 6.7923e-4,
    },
    ReferenceGre {
        t: 2.0,
        present: 7.00758e-5,
        quintic: 5.51142e-4,
        lattice_boltzmann: 1.1503e-3,
    },
    ReferenceGre {
        t: 3.0,
        present: 9.51142e-5,
        quintic: 7.03980e-4,
        lattice_boltzmann: 1.5941e-3,
    },
    ReferenceGre {
        t: 4.0,
        present: 1.79237e-4,
        quintic: 8.63662e-4,
        lattice_boltzmann: 2.0075e-3,
    },
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseId {
    /// Travelling shock on `[-30, 30]`.
    A,
    /// `u_0 = cos(x/2) sin(x/2)` on `[0, 4 pi]`.
    B,
    /// Gaussian `u_0 = -exp(-x^2)` on `[-30, 30]`.
    C,
}

impl CaseId {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::A => "a",
            CaseId::B => "b",
            CaseId::C => "c",
        }
    }

    /// Default resolution and physical parameters.
    pub fn defaults(self) -> CaseSettings {
        match self {
            CaseId::A => CaseSettings {
                n: 150,
                dt: 0.01,
                alpha: 1.0,
                theta: 1.0,
            },
            CaseId::B => CaseSettings {
                n: 512,
                dt: 0.001,
                alpha: 1.0,
                theta: 0.05,
            },
            CaseId::C => CaseSettings {
                n: 120,
                dt: 0.001,
                alpha: 1.0,
                theta: 1.0,
            },
        }
    }

    /// Default end time of a run.
    pub fn default_t_end(self) -> f64 {
        match self {
            CaseId::A => 4.0,
            CaseId::B => 10.0,
            CaseId::C => 20.0,
        }
    }

    /// Default output times.
    pub fn default_snapshots(self) -> Vec<f64> {
        match self {
            CaseId::A => vec![1.0, 2.0, 3.0, 4.0],
            CaseId::B | CaseId::C => {
                let t_end = self.default_t_end();
                let count = (t_end / 0.1).round() as usize;
                (1..=count).map(|k| k as f64 * 0.1).collect()
            }
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "a" | "A" => Ok(CaseId::A),
            "b" | "B" => Ok(CaseId::B),
            "c" | "C" => Ok(CaseId::C),
            other => Err(format!("unknown case `{other}` (expected a, b or c)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseSettings {
    pub n: usize,
    pub dt: f64,
    pub alpha: f64,
    pub theta: f64,
}

#[derive(Debug, Clone)]
pub struct CaseDefinition {
    pub id: CaseId,
    pub problem: KsProblem,
    pub exact: Option<ShockParams>,
    pub reference_gre: Option<&'static [ReferenceGre]>,
}

impl CaseDefinition {
    /// Exact knot values at time `t`, when a closed form exists.
    pub fn exact_at(&self, t: f64) -> Option<Vec<f64>> {
        let p = self.exact?;
        Some(
            self.problem
                .grid
                .nodes()
                .iter()
                .map(|&x| p.eval(x, t))
                .collect(),
        )
    }

    /// Global relative error of a snapshot over knots `1..=N`.
    pub fn gre_of(&self, snapshot: &Snapshot) -> Option<Result<f64>> {
        let exact = self.exact_at(snapshot.time)?;
        Some(gre(&snapshot.u[1..], &exact[1..]))
    }
}

pub fn build_case(id: CaseId, settings: CaseSettings) -> Result<CaseDefinition> {
    let CaseSettings {
        n,
        dt,
        alpha,
        theta,
    } = settings;
    match id {
        CaseId::A => {
            let shock = ShockParams::standard();
            let grid = UniformGrid::new(-30.0, 30.0, n)?;
            let boundary = BoundaryData {
                g0: shock.eval(grid.a(), 0.0),
                g1: shock.eval(grid.b(), 0.0),
            };
            let problem = KsProblem::new(
                alpha,
                theta,
                grid,
                dt,
                Arc::new(move |x| shock.eval(x, 0.0)),
                boundary,
            )?
            .with_initial_v(Arc::new(move |x| shock.eval_uxx(x, 0.0)));
            Ok(CaseDefinition {
                id,
                problem,
                exact: Some(shock),
                reference_gre: Some(&SHOCK_REFERENCE_GRE),
            })
        }
        CaseId::B => {
            if theta.is_nan() || theta <= 0.0 {
                return Err(Error::InvalidParameter {
                    name: "theta",
                    reason: format!("case b needs theta > 0, got {theta}"),
                });
            }
            let grid = UniformGrid::new(0.0, 4.0 * PI, n)?;
            let u0 = |x: f64| (x / 2.0).cos() * (x / 2.0).sin();
            let boundary = BoundaryData {
                g0: u0(grid.a()),
                g1: u0(grid.b()),
            };
            let problem = KsProblem::new(alpha, theta, grid, dt, Arc::new(u0), boundary)?;
            Ok(CaseDefinition {
                id,
                problem,
                exact: None,
                reference_gre: None,
            })
        }
        CaseId::C => {
            let grid = UniformGrid::new(-30.0, 30.0, n)?;
            let problem = KsProblem::new(
                alpha,
                theta,
                grid,
                dt,
                Arc::new(|x: f64| -(-x * x).exp()),
                BoundaryData { g0: 0.0, g1: 0.0 },
            )?;
            Ok(CaseDefinition {
                id,
                problem,
                exact: None,
                reference_gre: None,
            })
        }
    }
}

pub fn case_a() -> CaseDefinition {
    build_case(CaseId::A, CaseId::A.defaults()).expect("default shock case is valid")
}

pub fn case_b(theta: f64) -> Result<CaseDefinition> {
    build_case(
        CaseId::B,
        CaseSettings {
            theta,
            ..CaseId::B.defaults()
        },
    )
}

pub fn case_c() -> CaseDefinition {
    build_case(CaseId::C, CaseId::C.defaults()).expect("default Gaussian case is valid")
}
