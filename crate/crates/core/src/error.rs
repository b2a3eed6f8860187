use thiserror::Error;

/// Errors raised by the estimation and testing routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("series too short: need at least {needed} observations, got {got}")]
    SeriesTooShort { needed: usize, got: usize },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("unknown entity `{0}`")]
    UnknownEntity(String),

    #[error("design matrix is rank deficient (condition number {condition:e})")]
    RankDeficient { condition: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("restriction covariance is singular")]
    SingularRestriction,

    #[error("invalid p-value {0}: must lie in (0, 1]")]
    InvalidPValue(f64),

    #[error("insufficient entities: need at least {needed}, got {got}")]
    InsufficientEntities { needed: usize, got: usize },

    #[error("insufficient data: {0}")]
    InsufficientData(String),

    #[error("residual covariance is not positive definite")]
    CholeskyFailure,

    #[error("eigenvalue iteration did not converge")]
    EigenFailure,

    #[error("system is explosive (max root modulus {max_modulus:.4}) and explosive paths were not allowed")]
    ExplosiveWithoutFlag { max_modulus: f64 },

    #[error("invalid specification: {0}")]
    InvalidSpec(String),

    #[error("invalid panel: {0}")]
    InvalidPanel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
