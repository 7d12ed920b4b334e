use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Long division left a nonzero remainder.
    #[error("polynomial division is not exact: {0}")]
    NotDivisible(String),
    /// A halving step produced a non-integer coefficient.
    #[error("result has non-integral coefficients: {0}")]
    NonIntegral(String),
    /// A computed value disagrees with its published value.
    #[error("value mismatch: {0}")]
    Mismatch(String),
    #[error("Kronecker module is unstable")]
    NotSemistable,
    #[error("conic is identically zero")]
    ZeroConic,
    #[error("λ-family wedge vanishes identically")]
    IdenticallyZero,
    #[error("divisor combination has no positive coefficient")]
    ZeroDivisor,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable code used in CLI error documents.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotDivisible(_) => "NotDivisible",
            Error::NonIntegral(_) => "NonIntegral",
            Error::Mismatch(_) => "Mismatch",
            Error::NotSemistable => "NotSemistable",
            Error::ZeroConic => "ZeroConic",
            Error::IdenticallyZero => "IdenticallyZero",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "ParseError",
        }
    }

    /// Domain errors come from a well-formed request; everything else is a
    /// problem with the request itself.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::InvalidInput(_) | Error::Parse(_))
    }
}
