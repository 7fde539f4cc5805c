use thiserror::Error;

/// Errors raised by set construction, projections and the scalar solver.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector must be non-empty with finite entries")]
    NonFiniteVector,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("projection onto {0} is not supported")]
    UnsupportedProjection(&'static str),

    #[error("{0} has no recession-cone projector")]
    CapabilityMissing(&'static str),

    #[error("alpha must be positive, got {0}")]
    NonPositiveAlpha(f64),

    #[error("alpha must be nonnegative, got {0}")]
    NegativeAlpha(f64),

    #[error("ball center lies outside the radius (|z| = {norm} > {radius})")]
    CenterOutsideRadius { norm: f64, radius: f64 },

    #[error("bracket did not stabilize within {0} iterations")]
    MaxIterationsExceeded(usize),

    #[error("no closed-form polar is available for {0}")]
    NoClosedFormAvailable(&'static str),

    #[error("invalid set specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
