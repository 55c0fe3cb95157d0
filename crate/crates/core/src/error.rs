use thiserror::Error;

/// Errors raised for inputs outside an operation's domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: u64, b: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
    #[error("modulus {0} must be odd")]
    EvenModulus(u64),
    #[error("expected 0 < a < b, got a = {a}, b = {b}")]
    NotReduced { a: u64, b: u64 },
    #[error("value {value} exceeds the supported bound {max}")]
    TooLarge { value: u64, max: u64 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid continued fraction: {0}")]
    InvalidDigits(&'static str),
    #[error("invalid range {min}..={max}")]
    InvalidRange { min: u64, max: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
