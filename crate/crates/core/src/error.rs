//! Crate-wide error type.
//!
//! Negative decisions ("not conjugate") are never errors; they are `Ok(None)`
//! or `Ok(false)` at the call sites that can produce them.  Errors are
//! reserved for violated preconditions, malformed input, and contexts the
//! library refuses to handle.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("invalid permutation images: {0}")]
    InvalidPermutation(String),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandMismatch(usize, usize),

    #[error("invalid braid letter {letter} for {strands} strands")]
    InvalidLetter { letter: i32, strands: usize },

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("element is not in the subgroup: {0}")]
    NotInSubgroup(String),

    #[error(
        "infinite index: the centralizer maps onto an infinite subgroup of the \
         quotient, so no finite Schreier transversal over the finite fibre exists"
    )]
    InfiniteIndex,

    #[error(
        "no valid (K, K', phi) triple exists for {m} punctures: the colored braid \
         group on {m} >= 5 strands contains a direct product of two free groups of \
         rank 2, whose subgroup membership problem is undecidable, so no quotient \
         with decidable membership can cut out this subgroup"
    )]
    NoValidTriple { m: usize },

    #[error(
        "no known conjugacy method for the braid group of the disc with {m} \
         punctures (the cases m = 3 and m = 4 are open)"
    )]
    NoKnownMethod { m: usize },

    #[error("search space too large: {0}")]
    SearchTooLarge(String),

    #[error("homomorphism image undefined: {0}")]
    OutsideDomain(String),

    #[error("realization failed verification: {0}")]
    RealizationFailed(String),
}
