//! Band-stored square matrices and a direct banded LU solver.
//!
//! This is the general form of the block-tridiagonal "Thomas" sweep: Gaussian
//! elimination restricted to the band, with optional row pivoting. Pivoting
//! can widen the upper band of `U` to `kl + ku`, so the factor storage carries
//! that many extra upper diagonals.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Pivots smaller than this multiple of the largest matrix entry are treated
/// as zero.
pub const SINGULAR_TOLERANCE: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pivoting {
    None,
    #[default]
    Partial,
}

impl Pivoting {
    pub fn as_str(self) -> &'static str {
        match self {
            Pivoting::None => "none",
            Pivoting::Partial => "partial",
        }
    }
}

impl fmt::Display for Pivoting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Pivoting {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(Pivoting::None),
            "partial" => Ok(Pivoting::Partial),
            other => Err(format!(
                "unknown pivoting `{other}` (expected partial or none)"
            )),
        }
    }
}

/// Square matrix with nonzeros confined to `kl` sub- and `ku` super-diagonals.
///
/// Storage is row-major, `kl + ku + 1` slots per row; slot `c + kl - r` of row
/// `r` holds `A[r][c]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BandedMatrix {
    dim: usize,
    kl: usize,
    ku: usize,
    data: Vec<f64>,
}

impl BandedMatrix {
    pub fn zeros(dim: usize, kl: usize, ku: usize) -> Self {
        Self {
            dim,
            kl,
            ku,
            data: vec![0.0; dim * (kl + ku + 1)],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim, 0, 0);
        m.data.fill(1.0);
        m
    }

    /// Copies the band of a dense matrix; entries outside the band must be 0.
    pub fn from_dense(dense: &[Vec<f64>], kl: usize, ku: usize) -> Result<Self> {
        let dim = dense.len();
        let mut m = Self::zeros(dim, kl, ku);
        for (r, row) in dense.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v != 0.0 {
                    m.set(r, c, v)?;
                }
            }
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn kl(&self) -> usize {
        self.kl
    }

    pub fn ku(&self) -> usize {
        self.ku
    }

    fn in_band(&self, r: usize, c: usize) -> bool {
        r < self.dim && c < self.dim && c + self.kl >= r && c <= r + self.ku
    }

    fn slot(&self, r: usize, c: usize) -> usize {
        r * (self.kl + self.ku + 1) + (c + self.kl - r)
    }

    /// Entry `A[r][c]`; exactly zero outside the band.
    pub fn get(&self, r: usize, c: usize) -> f64 {
        if self.in_band(r, c) {
            self.data[self.slot(r, c)]
        } else {
            0.0
        }
    }

    pub fn set(&mut self, r: usize, c: usize, value: f64) -> Result<()> {
        if !self.in_band(r, c) {
            return Err(Error::OutsideBand {
                row: r,
                col: c,
                kl: self.kl,
                ku: self.ku,
            });
        }
        let s = self.slot(r, c);
        self.data[s] = value;
        Ok(())
    }

    pub fn add(&mut self, r: usize, c: usize, value: f64) -> Result<()> {
        let current = self.get(r, c);
        self.set(r, c, current + value)
    }

    /// Column range `[lo, hi)` that may hold nonzeros in row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (r.saturating_sub(self.kl), (r + self.ku + 1).min(self.dim))
    }

    pub fn mul_vec(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: x.len(),
            });
        }
        Ok((0..self.dim)
            .map(|r| {
                let (lo, hi) = self.row_span(r);
                (lo..hi).map(|c| self.get(r, c) * x[c]).sum()
            })
            .collect())
    }

    pub fn to_dense(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c)).collect())
            .collect()
    }

    /// Maximum absolute row sum.
    pub fn norm_inf(&self) -> f64 {
        (0..self.dim)
            .map(|r| {
                let (lo, hi) = self.row_span(r);
                (lo..hi).map(|c| self.get(r, c).abs()).sum::<f64>()
            })
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }
}

/// Banded LU factors: unit-lower multipliers in the `kl` sub-diagonals and
/// `U` in the diagonal plus `kl + ku` super-diagonals, with the row swap made
/// at each elimination step.
#[derive(Debug, Clone)]
pub struct BandedFactorization {
    dim: usize,
    kl: usize,
    /// Upper bandwidth of `U` (`kl + ku` with pivoting, `ku` without).
    ku_fill: usize,
    lu: Vec<f64>,
    pivots: Vec<usize>,
    pivoting: Pivoting,
}

impl BandedFactorization {
    fn width(&self) -> usize {
        self.kl + self.ku_fill + 1
    }

    fn idx(&self, r: usize, c: usize) -> usize {
        r * self.width() + (c + self.kl - r)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivoting(&self) -> Pivoting {
        self.pivoting
    }

    /// Row exchanged with row `k` at elimination step `k`.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Multiplier used to eliminate entry `(r, k)` at step `k`; zero outside
    /// the lower band.
    pub fn lower(&self, r: usize, k: usize) -> f64 {
        if r > k && r <= k + self.kl && r < self.dim {
            self.lu[self.idx(r, k)]
        } else {
            0.0
        }
    }

    /// Entry `U[r][c]`.
    pub fn upper(&self, r: usize, c: usize) -> f64 {
        if c >= r && c <= r + self.ku_fill && c < self.dim {
            self.lu[self.idx(r, c)]
        } else {
            0.0
        }
    }
}

/// Factors `m` by banded Gaussian elimination.
pub fn lu_factor(m: &BandedMatrix, pivoting: Pivoting) -> Result<BandedFactorization> {
    let n = m.dim;
    let kl = m.kl;
    let ku_fill = match pivoting {
        Pivoting::Partial => m.kl + m.ku,
        Pivoting::None => m.ku,
    };
    let mut f = BandedFactorization {
        dim: n,
        kl,
        ku_fill,
        lu: vec![0.0; n * (kl + ku_fill + 1)],
        pivots: (0..n).collect(),
        pivoting,
    };
    for r in 0..n {
        let (lo, hi) = m.row_span(r);
        for c in lo..hi {
            let i = f.idx(r, c);
            f.lu[i] = m.get(r, c);
        }
    }
    let threshold = SINGULAR_TOLERANCE * m.max_abs();

    for k in 0..n {
        let last_row = (k + kl).min(n - 1);
        let last_col = (k + ku_fill).min(n - 1);
        if pivoting == Pivoting::Partial {
            let mut p = k;
            let mut best = f.lu[f.idx(k, k)].abs();
            for r in k + 1..=last_row {
                let v = f.lu[f.idx(r, k)].abs();
                if v > best {
                    best = v;
                    p = r;
                }
            }
            if p != k {
                for c in k..=last_col {
                    let (a, b) = (f.idx(k, c), f.idx(p, c));
                    f.lu.swap(a, b);
                }
            }
            f.pivots[k] = p;
        }
        let pivot = f.lu[f.idx(k, k)];
        if pivot.is_nan() || pivot.abs() < threshold || pivot == 0.0 {
            return Err(Error::Singular {
                row: k,
                pivot: pivot.abs(),
            });
        }
        for r in k + 1..=last_row {
            let ir = f.idx(r, k);
            let l = f.lu[ir] / pivot;
            f.lu[ir] = l;
            if l == 0.0 {
                continue;
            }
            for c in k + 1..=last_col {
                let u = f.lu[f.idx(k, c)];
                let i = f.idx(r, c);
                f.lu[i] -= l * u;
            }
        }
    }
    Ok(f)
}

/// Solves `A x = rhs` with a factorization of `A`.
pub fn solve(f: &BandedFactorization, rhs: &[f64]) -> Result<Vec<f64>> {
    let n = f.dim;
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    let mut x = rhs.to_vec();
    for k in 0..n {
        let p = f.pivots[k];
        if p != k {
            x.swap(k, p);
        }
        let xk = x[k];
        if xk != 0.0 {
            for r in k + 1..=(k + f.kl).min(n.saturating_sub(1)) {
                x[r] -= f.lu[f.idx(r, k)] * xk;
            }
        }
    }
    for k in (0..n).rev() {
        let mut s = x[k];
        for c in k + 1..=(k + f.ku_fill).min(n - 1) {
            s -= f.lu[f.idx(k, c)] * x[c];
        }
        x[k] = s / f.lu[f.idx(k, k)];
    }
    Ok(x)
}

/// Dense Gaussian elimination with partial pivoting; the reference the banded
/// solver is tested against.
pub fn dense_solve(matrix: &[Vec<f64>], rhs: &[f64]) -> Result<Vec<f64>> {
    let n = matrix.len();
    if rhs.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: rhs.len(),
        });
    }
    let mut a: Vec<Vec<f64>> = matrix.to_vec();
    let mut b = rhs.to_vec();
    let scale = a
        .iter()
        .flat_map(|row| row.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()));
    for row in &a {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
    }
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i][k].abs().total_cmp(&a[j][k].abs()))
            .unwrap_or(k);
        if a[p][k].is_nan() || a[p][k].abs() <= SINGULAR_TOLERANCE * scale {
            return Err(Error::Singular {
                row: k,
                pivot: a[p][k].abs(),
            });
        }
        a.swap(k, p);
        b.swap(k, p);
        for r in k + 1..n {
            let l = a[r][k] / a[k][k];
            if l == 0.0 {
                continue;
            }
            for c in k..n {
                a[r][c] -= l * a[k][c];
            }
            b[r] -= l * b[k];
        }
    }
    let mut x = vec![0.0; n];
    for k in (0..n).rev() {
        let s: f64 = (k + 1..n).map(|c| a[k][c] * x[c]).sum();
        x[k] = (b[k] - s) / a[k][k];
    }
    Ok(x)
}
