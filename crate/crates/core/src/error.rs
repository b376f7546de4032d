use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("matrix is not positive semidefinite")]
    NotPositiveSemidefinite,

    #[error("Hankel matrix is singular; use the truncated (Hankel-rank) construction")]
    SingularHankel,

    #[error("Hankel matrix is not positive definite")]
    NotPositiveDefinite,

    #[error("invalid nodes: {0}")]
    InvalidNodes(String),

    #[error("degree bound violated: deg p = {degree} > {bound}")]
    DegreeBound { degree: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}
