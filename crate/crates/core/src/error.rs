use thiserror::Error;

/// Errors raised by the exact algebra layer and the surgery deciders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero has no unit normalization")]
    ZeroNormalization,

    #[error("zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("not invertible: shares the factor {factor} with the modulus")]
    NotInvertible { factor: String },

    #[error("{x} has no inverse modulo {modulus}")]
    NoModularInverse { x: String, modulus: String },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("H_1 not cyclic; torsion representation undefined here ({0})")]
    NonCyclicHomology(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
