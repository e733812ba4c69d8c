use thiserror::Error;

/// Errors raised by the library.
///
/// Parse errors are input-syntax problems; every other variant is a domain
/// error (a well-formed request outside an operation's precondition).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} unbound")]
    UnboundAtom(String),
    #[error("insufficient data")]
    InsufficientData,
    #[error("sequence too short or not polynomial")]
    NotPolynomial,
    #[error("singular system")]
    SingularSystem,
    #[error("{0}")]
    Domain(String),
}

impl Error {
    pub fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub fn domain(message: impl Into<String>) -> Self {
        Error::Domain(message.into())
    }

    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
