use thiserror::Error;

/// Errors raised by the weight, algebra, classification and oracle layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },
    #[error("weight has wrong shape: expected {expected}, got {got}")]
    Shape { expected: String, got: String },
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("weight is not integral: {0}")]
    NotIntegral(String),
    #[error("unsupported signature for this operation: {0}")]
    UnsupportedSignature(String),
    #[error("shift parameter {0} outside [0,1]")]
    ShiftOutOfRange(String),
    #[error("partition has a negative part: {0}")]
    NegativePart(String),
    #[error("partition is not non-increasing: {0}")]
    NotNonIncreasing(String),
    #[error("generalized partition outside the admissible set: {0}")]
    NotAdmissible(String),
    #[error("weight is not type-1 unitary: {0}")]
    NotTypeOne(String),
    #[error("weight is not integrally unitary: {0}")]
    NotIntegrallyUnitary(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("root is not positive: {0}")]
    NotPositive(String),
    #[error("inhomogeneous element where a homogeneous one is required")]
    Inhomogeneous,
    #[error("not a non-negative combination of positive roots: {0}")]
    InvalidDrop(String),
    #[error("matrix is not symmetric at ({0},{1})")]
    Asymmetric(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
