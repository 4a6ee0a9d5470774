use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} must be positive")]
    NotPositive(&'static str),

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("{0} is not a power of an odd prime")]
    NotOddPrimePower(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{n} is not coprime to the modulus {modulus}")]
    NotCoprime { n: i64, modulus: u64 },

    #[error("{generator} is not a primitive root modulo {modulus}")]
    NotPrimitive { generator: u64, modulus: u64 },

    #[error("{n} is not a power of {generator} modulo {modulus}")]
    NotInSubgroup { n: u64, generator: u64, modulus: u64 },

    #[error("exponent {value} at position {position} is out of range for a factor of order {order}")]
    ExponentOutOfRange {
        position: usize,
        value: u64,
        order: u64,
    },

    #[error("expected {expected} exponents, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("characters have different moduli ({0} and {1})")]
    ModulusMismatch(u64, u64),

    #[error("{what} (got s = {value})")]
    Domain { what: &'static str, value: f64 },

    #[error("index {index} is out of range for length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("root of unity of order {0} is not primitive for the system size")]
    NonPrimitiveOmega(u64),

    #[error("root of order {root_order} does not embed in order {sum_order}")]
    IncompatibleOrder { root_order: u64, sum_order: u64 },
}
