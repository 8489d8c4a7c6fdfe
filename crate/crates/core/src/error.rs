use thiserror::Error;

use crate::graph::StableSetWitness;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("invalid construction spec: {0}")]
    InvalidSpec(String),

    #[error("not a face of the complex: {0}")]
    NotAFace(String),

    #[error("not a facet of the complex: {0}")]
    NotAFacet(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimMismatch { expected: isize, found: isize },

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    /// The exact solver ran out of time. `best` is the incumbent, which is
    /// stable but not proven maximum.
    #[error("time budget exceeded (incumbent of size {})", .best.size)]
    Timeout { best: StableSetWitness },

    #[error("bistellar reduction inconclusive after {rounds} rounds")]
    Inconclusive { rounds: usize },

    #[error("guarantee violated: {0}")]
    GuaranteeViolated(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
