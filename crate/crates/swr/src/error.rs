use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}x{1} vs {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),

    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),

    #[error("division by zero polynomial")]
    ZeroPolynomialDivision,

    #[error("polynomial must be nonzero")]
    ZeroPolynomial,

    #[error("loop edge {0} -> {0} not allowed")]
    LoopEdge(usize),

    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(usize, usize),

    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("size limit exceeded: {0}")]
    LimitExceeded(String),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),

    #[error("eigenvalue identity violated: {0}")]
    IdentityViolation(String),

    #[error("unknown claim: {0}")]
    UnknownClaim(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("classification failed, contradicting the structure theorem: {0}")]
    TheoremViolation(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
