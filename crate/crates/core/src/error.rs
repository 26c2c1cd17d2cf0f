use thiserror::Error;

/// Errors raised by the library.
///
/// Mathematical failures of a candidate structure (a broken axiom, a
/// non-trivial braiding) are never errors; they are reported through the
/// verdict types. Errors are reserved for malformed input and for
/// operations whose preconditions do not hold.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cyclic factor of order {0} does not divide 8; characters would leave Q(ξ₈)")]
    UnsupportedExponent(u32),

    #[error("cyclic factor orders must be at least 1")]
    InvalidFactor,

    #[error("element {0} does not belong to the group")]
    ForeignElement(String),

    #[error("the given set is not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("bicharacter is degenerate")]
    DegenerateBicharacter,

    #[error("bicharacter is not symmetric")]
    NonSymmetric,

    #[error("bicharacter is inconsistent: {0}")]
    InvalidBicharacter(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("malformed structure data: {0}")]
    Malformed(String),

    #[error("eigenvalue search exhausted the candidate grid (bound {bound}) on a {dim}-dimensional block")]
    CandidateExhausted { bound: u32, dim: usize },

    #[error("coproduct is not cocommutative")]
    NotCocommutative,

    #[error("element is not group-like")]
    NotGroupLike,

    #[error("no group-like basis available: {0}")]
    BasisUnavailable(String),

    #[error("unknown label `{0}`")]
    UnknownLabel(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
