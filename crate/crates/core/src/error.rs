use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("all coefficients are zero")]
    ZeroPolynomial,

    #[error("zero argument to Hilbert symbol")]
    ZeroHilbertArgument,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("search exhausted at bound {0}")]
    SearchExhausted(u64),

    #[error("could not produce {wanted} points avoiding the given forms (found {found})")]
    InsufficientPoints { wanted: usize, found: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
