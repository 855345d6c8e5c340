use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("modulus is not irreducible of degree {degree}")]
    NotIrreducible { degree: usize },
    #[error("field order {base}^{exp} does not fit the supported integer width")]
    OrderOverflow { base: u64, exp: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("elements belong to different field contexts")]
    CtxMismatch,
    #[error("b = {b} outside 1..={p}")]
    BOutOfRange { b: u32, p: u64 },
    #[error("enumeration of {size} elements exceeds the cap {cap}")]
    CapExceeded { size: String, cap: u64 },
    #[error("parameters outside the regime of `{formula}`: {reason}")]
    RegimeMismatch { formula: &'static str, reason: String },
    #[error("{0} is not a normal element")]
    NotNormal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
