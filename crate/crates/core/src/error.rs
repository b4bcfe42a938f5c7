use thiserror::Error;

use crate::poly::MAX_VARS;

/// Errors raised by the algebra layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("invalid modulus {0}: expected a prime below 2^31")]
    InvalidModulus(u32),
    #[error("unknown coefficient field `{0}`")]
    UnknownField(String),
    #[error("denominator vanishes modulo {0}")]
    DenominatorVanishes(u32),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("{0} variables requested, at most {MAX_VARS} are supported")]
    TooManyVariables(usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("not a square-free monomial ideal: {0}")]
    NotSquarefree(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("weight rejected: {0}")]
    WeightRejected(String),
    #[error("generic initial ideal is unstable: trials disagree")]
    GinUnstable,
    #[error("primes of mixed heights: {0}")]
    MixedHeights(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
