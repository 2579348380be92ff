use thiserror::Error;

/// Errors raised by the enumeration library.
#[derive(Debug, Error)]
pub enum Error {
    /// The input violates an operation's contract (composite p, p too small, bad parameters).
    #[error("rejected input: {0}")]
    RejectedInput(String),

    #[error("polynomial is not square-free")]
    NotSquareFree,

    #[error("{count} root(s) of the defining polynomial lie outside F_p^2")]
    RootsOutsideField { count: usize },

    #[error("zero polynomial has no roots")]
    ZeroPolynomial,

    #[error("points are not pairwise distinct")]
    RepeatedPoints,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("hypergeometric coefficient {index} has a denominator divisible by p")]
    HypergeometricDenominator { index: usize },

    #[error("no superspecial genus-2 seed found for p = {p} (strategies tried: {tried})")]
    BootstrapFailure { p: u64, tried: String },

    #[error("cost guard: {0}")]
    CostGuard(String),

    #[error("integrity error: {0}")]
    Integrity(String),

    #[error("cache error: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
