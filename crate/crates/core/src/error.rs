use thiserror::Error;

/// Errors surfaced by construction and query operations across the crate.
///
/// Operations that cannot fail on validated inputs return plain values;
/// everything that ingests external data or has a nontrivial precondition
/// returns `Result<_, Error>`.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("set size mismatch: {0}")]
    SizeMismatch(String),

    #[error("cannot parse {input:?} as an exact rational")]
    ParseRational { input: String },

    #[error("element {element} out of range 1..={ground}")]
    ElementOutOfRange { element: usize, ground: usize },

    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundTooLarge(usize),

    #[error("basis list is empty")]
    EmptyBases,

    #[error("bases have unequal sizes: {0} and {1} elements")]
    UnequalBasisSizes(usize, usize),

    #[error("basis {basis:?} contains a repeated element")]
    RepeatedElement { basis: Vec<usize> },

    #[error(
        "basis exchange fails for {b1:?} and {b2:?}: element {element} of the first \
         has no exchange partner in the second"
    )]
    ExchangeFailure {
        b1: Vec<usize>,
        b2: Vec<usize>,
        element: usize,
    },

    #[error("matrix does not have full row rank")]
    RankDeficient,

    #[error("{set:?} is not a basis of this matroid")]
    NotABasis { set: Vec<usize> },

    #[error("invalid zero-profile {profile:?}: {reason}")]
    InvalidProfile { profile: Vec<usize>, reason: String },

    #[error("interval endpoints must be sorted weakly increasing, found {0} after {1}")]
    UnsortedIntervals(String, String),

    #[error("relation is not a partial order: {0}")]
    OrderViolation(String),

    #[error("recursion input rejected: {0}")]
    BadRecursionInput(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
