//! Reconstruction of cyclic binary words from their scattered cyclic subwords.
//!
//! Words are necklaces of length at most 64 stored as their least rotation.
//! The crate covers exact containment and occurrence counting, exhaustive
//! surveys over all necklaces of a length, and constructive builders of
//! short distinguishing subwords whose output is always checked against the
//! containment oracle.

pub mod alignment;
pub mod constructive;
pub mod parallel;
pub mod profile;
pub mod special;
pub mod subword;
pub mod survey;
pub mod words;

pub use alignment::{
    cong, differ_by_turn, differ_by_turn_gaps, embedding_turns, overlays, overlays_of, turns,
    AlignmentError, GapVector, Overlay,
};
pub use profile::{block_profile, derived_words, BlockProfile, DerivedWords, Run};
pub use special::{classify_special, NotSpecialReason, SpecialClass, SpecialKind};
pub use subword::{
    is_subword, is_unioccurrent, occurrence_list, occurrences, subwords_exact, subwords_upto,
    Occurrence, Signature, SubwordError,
};
pub use words::{canonicalize, is_periodic, reverse, CyclicWord, WordError, MAX_LEN};
