use thiserror::Error;

/// Errors raised by library operations.
///
/// Variants split into invalid input (the caller passed something malformed)
/// and internal failures (an algebraic identity the computation relies on did
/// not hold). [`Error::is_internal`] tells them apart.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has constant term different from 1")]
    NonUnitSeries,
    #[error("substitution needs degree {needed} but the series is truncated at {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("invalid variable: {0}")]
    InvalidVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutation is not Grassmannian")]
    NotGrassmannian,
    #[error("invalid triple: {0}")]
    InvalidTriple(String),
    #[error("ambiguous minimal permutation: {0}")]
    Ambiguous(String),
    #[error("window too small: {0}")]
    WindowTooSmall(String),
    #[error("inconsistent linear system: {0}")]
    SystemInconsistent(String),
    #[error("underdetermined linear system: {0}")]
    SystemUnderdetermined(String),
    #[error("non-integral coefficient: {0}")]
    NonIntegralCoefficient(String),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("quotient basis failure: {0}")]
    BasisFailure(String),
    #[error("variable with index 0 present")]
    IndexZeroPresent,
    #[error("largest part must be at least {0}")]
    PartNotLargeEnough(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// True when the error signals a failed internal consistency check rather
    /// than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::SystemInconsistent(_)
                | Error::SystemUnderdetermined(_)
                | Error::NonIntegralCoefficient(_)
                | Error::BasisFailure(_)
                | Error::Ambiguous(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
