use thiserror::Error;

/// Errors produced by precondition violations and malformed input.
///
/// Internal invariant failures (states the underlying theory rules out) are
/// reported as [`Error::Internal`] and indicate a bug, never bad input.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("empty partition is not allowed here")]
    EmptyPartition,

    #[error("partition [{partition}] does not fit in the {m} x {k} box")]
    OutOfBox { partition: String, m: u32, k: u32 },

    #[error("index {p} out of range 1..={max}")]
    IndexOutOfRange { p: u32, max: u32 },

    #[error("special class index {s} exceeds the ring degree bound {n}")]
    SpecialIndexTooLarge { s: u32, n: u32 },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("permutation has a descent at position {pos}, only position {m} is allowed")]
    DescentViolation { m: u32, pos: u32 },

    #[error("invalid rational number: {0}")]
    InvalidRational(String),

    #[error("invalid ring parameters: {0}")]
    InvalidParams(String),

    #[error("graded component of degree {degree} exceeds the degree cap {cap}")]
    DegreeCapExceeded { degree: u32, cap: u32 },

    #[error("|lambda| = {lambda_weight} must be strictly larger than |mu| = {mu_weight}")]
    WeightNotLarger { lambda_weight: u32, mu_weight: u32 },

    #[error("alpha must be positive for the positive branch")]
    AlphaNotPositive,

    #[error("alpha must be zero for the classical branch")]
    AlphaNotZero,

    #[error("deformation pair ([{0}], [{1}]) is not admissible")]
    InadmissiblePair(String, String),

    #[error("deformation coefficient file: {0}")]
    CoeffFile(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
