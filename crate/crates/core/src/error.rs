use thiserror::Error;

/// Errors raised while constructing fields, connection sets and graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {q} exceeds the cap of {cap}")]
    FieldTooLarge { q: u64, cap: u64 },
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("irreducibility is undefined for constant or zero polynomials")]
    InvalidCandidate,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{s} does not divide {order}")]
    NotADivisor { s: u64, order: u64 },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("connection set is not symmetric: {member} is present but -{member} = {negation} is not")]
    AsymmetricConnectionSet { member: String, negation: String },
    #[error("{0}")]
    CongruenceViolation(String),
    #[error("{what} = {value} exceeds the configured cap of {cap}")]
    CapExceeded { what: &'static str, value: u64, cap: u64 },
    #[error("invalid parameters: {0}")]
    Precondition(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
