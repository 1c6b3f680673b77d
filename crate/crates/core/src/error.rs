use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error at byte {position} near `{token}`: {message}")]
    Parse {
        position: usize,
        token: String,
        message: String,
    },

    #[error("invalid exponent: {0}")]
    InvalidExponent(String),

    #[error("symbol is not normalized; call `normalize` first")]
    NotNormalized,

    #[error("trial vector has a negative entry at index {0}")]
    NegativeEntry(usize),

    #[error("trial vector is identically zero")]
    ZeroVector,

    #[error("coefficient must be nonzero")]
    ZeroCoefficient,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailure(String),

    #[error("eigenvalue computation failed: {0}")]
    Eigen(String),

    #[error("quadrature degree overflow: exponent {exponent} exceeds capacity {capacity}")]
    DegreeOverflow { exponent: f64, capacity: f64 },
}
