use num_bigint::BigInt;
use thiserror::Error;

/// Errors raised by the algebraic operations of this crate.
///
/// Several variants are not failures of the computation but negative
/// answers to a membership question: [`Error::NotIntegral`],
/// [`Error::NotInComplex`] and [`Error::NotInImage`] each certify that a
/// ghost-side tuple lies outside the relevant image.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coefficient {coeff} is not divisible by {divisor}")]
    NotDivisible { coeff: BigInt, divisor: BigInt },

    #[error("NotIntegral({index}): ghost tuple is not in the image of the ghost map")]
    NotIntegral { index: u64 },

    #[error("NotInComplex({index}): component {index} of the differential is not integral")]
    NotInComplex { index: u64 },

    #[error("NotInImage(level {level}): congruence fails at level {level}")]
    NotInImage { level: usize },

    #[error("{0:?} is not a truncation set (must be positive and closed under divisors)")]
    NotTruncationSet(Vec<u64>),

    #[error("{n} is not an element of the truncation set {set:?}")]
    NotInSet { n: u64, set: Vec<u64> },

    #[error("truncation sets differ: {left:?} vs {right:?}")]
    SetMismatch { left: Vec<u64>, right: Vec<u64> },

    #[error("{subset:?} is not a truncation subset of {set:?}")]
    NotSubset { subset: Vec<u64>, set: Vec<u64> },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("truncation set {set:?} is not of the form {{1, p, ..., p^n}} for p = {p}")]
    NotPTypical { set: Vec<u64>, p: u64 },

    #[error("variable counts differ: {0} vs {1}")]
    VarMismatch(usize, usize),

    #[error("form degrees differ: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("expected {expected} components, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("invalid index tuple {0:?}")]
    InvalidIndexTuple(Vec<usize>),

    #[error("modulus {0} is out of range")]
    BadModulus(String),

    #[error("exactness is undefined in degree 0 (forms of degree -1 vanish)")]
    DegreeZero,

    #[error("{0}")]
    Invalid(String),

    #[error("invalid input at {path}: {message}")]
    Schema { path: String, message: String },
}

impl Error {
    /// Whether the error is a negative membership answer rather than a
    /// malformed request.
    pub fn is_membership_failure(&self) -> bool {
        matches!(self, Error::NotIntegral { .. } | Error::NotInComplex { .. } | Error::NotInImage { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
