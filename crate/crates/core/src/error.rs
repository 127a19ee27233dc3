//! Error taxonomy shared across the solver stack.

use thiserror::Error;

/// Terminal state reported by a conic backend.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BackendStatus {
    /// Solved to the requested tolerances.
    Optimal,
    /// Primal or dual infeasibility certificate found.
    Infeasible,
    /// Solver stopped without a solution or certificate (iteration limit,
    /// numerical trouble, loss of progress).
    NumericalTrouble,
}

impl std::fmt::Display for BackendStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BackendStatus::Optimal => write!(f, "optimal"),
            BackendStatus::Infeasible => write!(f, "infeasible"),
            BackendStatus::NumericalTrouble => write!(f, "numerical trouble"),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    /// A matrix required to be positive definite has a nonpositive pivot.
    /// In covariance propagation this signals loss of state-covariance
    /// definiteness rather than a mere numerical hiccup.
    #[error("matrix is not positive definite: {0}")]
    NotPositiveDefinite(String),

    /// A factorization input lost full rank (covariance square root became
    /// singular along the horizon).
    #[error("rank deficient: {0}")]
    RankDeficient(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid problem specification: {0}")]
    InvalidSpec(String),

    /// Obstacle linearization reference coincides with the obstacle center.
    #[error("degenerate reference: {0}")]
    DegenerateReference(String),

    #[error("decision layout mismatch: {0}")]
    LayoutMismatch(String),

    #[error("unsupported cone: {0}")]
    UnsupportedCone(String),

    #[error("backend failure ({status}): {detail}")]
    BackendFailure {
        status: BackendStatus,
        detail: String,
    },

    #[error("maximum iterations reached ({0})")]
    MaxIterations(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
