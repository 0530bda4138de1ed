//! Exhaustive work over all necklaces of a length.

mod recover;
mod threshold;

use serde::Serialize;
use thiserror::Error;

use crate::constructive::Side;
use crate::subword::next_level;
use crate::words::{CyclicWord, MAX_LEN};

pub use recover::{recover_parameters, RecoveredParameters};
pub use threshold::{
    recovery_threshold, recovery_threshold_with, Checkpoint, LevelRecord, ThresholdOptions,
    ThresholdRow,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurveyError {
    #[error("length {0} outside the supported range")]
    OverMaxLength(usize),
    #[error("length {0} is below the minimum for this operation")]
    TooShort(usize),
    #[error("the two words are equal")]
    EqualWords,
    #[error("words have different lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("interrupted at n = {n} after {levels_done} completed levels")]
    Interrupted { n: usize, levels_done: usize },
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("subword set is not generated by any word of length {n}: {reason}")]
    InconsistentSet { n: usize, reason: String },
}

/// Binary necklaces of one length in increasing lexicographic order.
///
/// Iterative FKM generation: every prenecklace is visited and those whose
/// period divides `n` are emitted.
#[derive(Debug, Clone)]
pub struct NecklaceSpace {
    n: usize,
    a: Vec<u8>,
    started: bool,
    done: bool,
}

pub fn necklaces(n: usize) -> Result<NecklaceSpace, SurveyError> {
    if n == 0 || n > MAX_LEN {
        return Err(SurveyError::OverMaxLength(n));
    }
    Ok(NecklaceSpace {
        n,
        a: vec![0; n + 1],
        started: false,
        done: false,
    })
}

impl NecklaceSpace {
    pub fn n(&self) -> usize {
        self.n
    }

    fn current(&self) -> CyclicWord {
        let bits = self.a[1..]
            .iter()
            .fold(0u64, |acc, &c| (acc << 1) | c as u64);
        CyclicWord::from_canonical(bits, self.n)
    }
}

impl Iterator for NecklaceSpace {
    type Item = CyclicWord;

    fn next(&mut self) -> Option<CyclicWord> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(self.current());
        }
        let n = self.n;
        loop {
            let mut i = n;
            while i > 0 && self.a[i] == 1 {
                i -= 1;
            }
            if i == 0 {
                self.done = true;
                return None;
            }
            self.a[i] = 1;
            for j in i + 1..=n {
                self.a[j] = self.a[j - i];
            }
            if n.is_multiple_of(i) {
                return Some(self.current());
            }
        }
    }
}

fn euler_phi(mut m: usize) -> usize {
    let mut result = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Number of binary necklaces of length `n` by Burnside's lemma.
pub fn necklace_count(n: usize) -> u128 {
    let total: u128 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| euler_phi(d) as u128 * (1u128 << (n / d)))
        .sum();
    total / n as u128
}

/// Shortest distinguishing length of two words and the least witness of that length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDistinguishing {
    pub length: usize,
    pub witness: CyclicWord,
    pub contained_in: Side,
}

/// Least length of a word that is a subword of exactly one of `u`, `v`.
///
/// Walks both subword sets downward from full length; exact-length sets that
/// agree at some length agree at every shorter one, so the answer is one more
/// than the first length where they coincide.
pub fn min_distinguishing_length(
    u: &CyclicWord,
    v: &CyclicWord,
) -> Result<MinDistinguishing, SurveyError> {
    if u.len() != v.len() {
        return Err(SurveyError::LengthMismatch(u.len(), v.len()));
    }
    if u == v {
        return Err(SurveyError::EqualWords);
    }
    let mut len = u.len();
    let mut lu = vec![u.bits()];
    let mut lv = vec![v.bits()];
    let (mut nu, mut nv) = (Vec::new(), Vec::new());
    while len > 1 {
        next_level(&lu, len, &mut nu);
        next_level(&lv, len, &mut nv);
        if nu == nv {
            break;
        }
        std::mem::swap(&mut lu, &mut nu);
        std::mem::swap(&mut lv, &mut nv);
        len -= 1;
    }
    let only_u = lu.iter().find(|b| lv.binary_search(b).is_err());
    let only_v = lv.iter().find(|b| lu.binary_search(b).is_err());
    let (bits, side) = match (only_u, only_v) {
        (Some(&a), Some(&b)) if b < a => (b, Side::V),
        (Some(&a), _) => (a, Side::U),
        (None, Some(&b)) => (b, Side::V),
        (None, None) => unreachable!("sets differ at this length"),
    };
    Ok(MinDistinguishing {
        length: len,
        witness: CyclicWord::from_canonical(bits, len),
        contained_in: side,
    })
}
