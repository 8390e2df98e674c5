use thiserror::Error;

/// Errors raised by the symbol, construction and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is outside the supported range (max {max})")]
    OutOfRange { value: u128, max: u128 },

    #[error("modulus {0} must be odd and positive")]
    BadJacobiModulus(i128),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("prime {p} is not congruent to 1 mod {modulus}")]
    WrongResidueClass { p: u64, modulus: u64 },

    #[error("{a} is not a quadratic residue modulo {p}")]
    NotQuadraticResidue { a: i128, p: u64 },

    #[error("{a} is divisible by {p}")]
    Divisible { a: i128, p: u64 },

    #[error("invalid modulus {m}: {reason}")]
    InvalidModulus { m: u64, reason: &'static str },

    #[error("invalid discriminant {d}: {reason}")]
    InvalidDiscriminant { d: u64, reason: &'static str },

    #[error("Z[sqrt({0})] has no unit of norm -1")]
    NoNegativeNormUnit(u64),

    #[error("split {d1} * {d2} is not a C4 factorization")]
    NotC4 { d1: u64, d2: u64 },

    #[error("oracle scale exceeded: {0}")]
    OracleScale(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    /// True for errors that can only come from a bug in this crate.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Invariant(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
