use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid spacing h = {h} is outside the admissible range (0, 2*pi/3)")]
    InadmissibleSpacing { h: f64 },

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("unsupported derivative order {0} (expected 1 or 2)")]
    UnsupportedOrder(u8),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    #[error("entry ({row}, {col}) lies outside the band (kl = {kl}, ku = {ku})")]
    OutsideBand {
        row: usize,
        col: usize,
        kl: usize,
        ku: usize,
    },

    #[error("matrix is singular to working precision at row {row} (|pivot| = {pivot:e})")]
    Singular { row: usize, pivot: f64 },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("relative error undefined: reference vector has zero l1 norm")]
    ZeroDenominator,

    #[error("initial fit ({mode}) failed for h = {h}: {source}")]
    FitFailed {
        mode: &'static str,
        h: f64,
        #[source]
        source: Box<Error>,
    },

    #[error("linear solve failed at step {step}: {source}")]
    StepFailed {
        step: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("non-finite value in the solution at step {step} (t = {time})")]
    NonFinite { step: usize, time: f64 },
}
