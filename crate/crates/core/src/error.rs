use thiserror::Error;

/// Errors raised by the exact-arithmetic and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational `{0}`")]
    MalformedRational(String),

    #[error("malformed Laurent scalar `{0}`")]
    MalformedScalar(String),

    #[error("series inversion needs constant term 1, found {0}")]
    NonUnitConstantTerm(String),

    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("expected {expected} Satake parameters, got {got}")]
    AlphaLength { expected: usize, got: usize },

    #[error("signature of length {got} does not match rank {n} (expected length {})", n - 1)]
    SignatureLength { n: usize, got: usize },

    #[error("signature {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("tableau enumeration over weight {weight} exceeds budget {budget}")]
    OverBudget { weight: i64, budget: i64 },

    #[error("conductor-positive parameters need a trailing zero")]
    RamifiedNeedsZero,

    #[error("coefficient of X^{degree} keeps a residual power v^{exponent}")]
    ResidualVPower { degree: usize, exponent: i64 },

    #[error("linear system is singular: rank {rank} < {unknowns} unknowns")]
    Underdetermined { rank: usize, unknowns: usize },

    #[error("linear system is inconsistent")]
    Inconsistent,

    #[error("invalid coset parameters: {0}")]
    InvalidCosetSpec(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration of {0} candidates exceeds the desk-scale limit")]
    EnumerationTooLarge(u128),
}

pub type Result<T> = std::result::Result<T, Error>;
