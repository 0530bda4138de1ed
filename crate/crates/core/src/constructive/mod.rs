//! Builders of distinguishing subwords and the lower-bound families.

mod cover;
mod distinguish;
mod lower_bound;
mod popular;
mod unioccurrent;

use serde::Serialize;
use thiserror::Error;

use crate::words::CyclicWord;

pub use distinguish::{
    brute_distinguishing, construct_distinguishing, distinguish, DistinguishResult, Mode, Strategy,
};
pub use lower_bound::{
    lower_bound_pair, lower_bound_pair_for, proof_witness, verify_lower_bound, LowerBoundPair,
    LowerBoundReport, Residue,
};
pub use popular::extend_by_popular_idea;
pub use unioccurrent::{core_block_limit, unioccurrent_core};

/// One of the two input words of a comparison.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    U,
    V,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::U => Side::V,
            Side::V => Side::U,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructiveError {
    #[error("no lower-bound pair of length {0}")]
    UnsupportedLength(usize),
    #[error("claim violated: {0}")]
    ClaimViolated(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("construction failed verification: {0}")]
    ConstructionUnverified(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("more than one turn carries the core onto an equal occurrence")]
    AlignmentNotUnique,
    #[error("the two words are equal")]
    EqualWords,
    #[error("words have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("no distinguishing word of length at most {bound} for {u} and {v}")]
    BoundExceeded {
        u: CyclicWord,
        v: CyclicWord,
        bound: usize,
    },
}

/// `⌊3n/4⌋ + 4`, the length every constructed witness must respect.
pub fn length_bound(n: usize) -> usize {
    3 * n / 4 + 4
}
