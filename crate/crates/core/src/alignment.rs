//! Gap vectors between consecutive 1's, their rotations (turns), 1-overlays
//! of two words, and the block-insertion relation on short-block subwords.

use serde::Serialize;
use thiserror::Error;

use crate::profile::{block_profile, derived_words};
use crate::subword::is_subword;
use crate::words::{canonicalize, CyclicWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlignmentError {
    #[error("word {0} has no 1's")]
    NoOnes(CyclicWord),
    #[error("1-counts differ: {0} and {1}")]
    MismatchedCounts(usize, usize),
    #[error("gap vector is not dominated by the host word")]
    NotASubwordEncoding,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Lengths of the 0-runs after each 1, in order; zero marks an empty place.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct GapVector {
    pub gaps: Vec<usize>,
}

impl GapVector {
    pub fn new(gaps: Vec<usize>) -> Self {
        GapVector { gaps }
    }

    /// Gaps of `w` read from the first 1 of its canonical representative.
    pub fn of(w: &CyclicWord) -> Result<Self, AlignmentError> {
        Self::from_representative(&w.letters()).ok_or(AlignmentError::NoOnes(*w))
    }

    /// Gaps of a raw letter sequence read from its first 1.
    pub fn from_representative(letters: &[u8]) -> Option<Self> {
        let n = letters.len();
        let first = letters.iter().position(|&c| c == 1)?;
        let mut gaps = Vec::new();
        for step in 0..n {
            if letters[(first + step) % n] == 1 {
                gaps.push(0);
            } else {
                *gaps.last_mut().expect("starts at a 1") += 1;
            }
        }
        Some(GapVector { gaps })
    }

    pub fn ones(&self) -> usize {
        self.gaps.len()
    }

    pub fn zeros(&self) -> usize {
        self.gaps.iter().sum()
    }

    /// Gaps starting from the `j`-th 1.
    pub fn turned(&self, j: usize) -> GapVector {
        let mut gaps = self.gaps.clone();
        let r = gaps.len();
        if r > 0 {
            gaps.rotate_left(j % r);
        }
        GapVector { gaps }
    }

    /// `β_i <= α_{i+j}` for every `i`.
    pub fn dominated_at(&self, host: &GapVector, j: usize) -> bool {
        let r = host.gaps.len();
        r == self.gaps.len()
            && self
                .gaps
                .iter()
                .enumerate()
                .all(|(i, &b)| b <= host.gaps[(i + j) % r])
    }

    pub fn to_word(&self) -> CyclicWord {
        CyclicWord::from_gaps(&self.gaps).expect("gap vector describes a word of length <= 64")
    }
}

/// The rotations of the gap vector of `w`, one per 1.
pub fn turns(w: &CyclicWord) -> Result<Vec<GapVector>, AlignmentError> {
    let g = GapVector::of(w)?;
    Ok((0..g.ones()).map(|j| g.turned(j)).collect())
}

/// Turns `j` of `host` under which `sub` sits inside it gap by gap; an
/// all-ones subword is contained exactly when this is nonempty.
pub fn embedding_turns(sub: &GapVector, host: &GapVector) -> Vec<usize> {
    (0..host.ones())
        .filter(|&j| sub.dominated_at(host, j))
        .collect()
}

/// Bijection sending the `j`-th 1 of `u` to the `(j + shift)`-th 1 of `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Overlay {
    pub shift: usize,
    pub u_gaps: GapVector,
    pub v_gaps: GapVector,
}

impl Overlay {
    /// Aligned `(u gap, v gap)` pairs in the order of `u`'s 1's.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let r = self.u_gaps.ones();
        (0..r)
            .map(|j| (self.u_gaps.gaps[j], self.v_gaps.gaps[(j + self.shift) % r]))
            .collect()
    }
}

/// All 1-overlays of two gap vectors with the same number of 1's.
pub fn overlays_of(u: &GapVector, v: &GapVector) -> Result<Vec<Overlay>, AlignmentError> {
    if u.ones() != v.ones() {
        return Err(AlignmentError::MismatchedCounts(u.ones(), v.ones()));
    }
    Ok((0..u.ones())
        .map(|shift| Overlay {
            shift,
            u_gaps: u.clone(),
            v_gaps: v.clone(),
        })
        .collect())
}

/// All 1-overlays of `u` on `v`. Only the 1-counts must agree; missing
/// 0's on either side are empty places.
pub fn overlays(u: &CyclicWord, v: &CyclicWord) -> Result<Vec<Overlay>, AlignmentError> {
    overlays_of(&GapVector::of(u)?, &GapVector::of(v)?)
}

/// Whether two all-ones subwords, given as gaps against the gaps `host` of
/// the word containing them, are carried onto each other by a turn.
pub fn differ_by_turn_gaps(
    s1: &GapVector,
    s2: &GapVector,
    host: &GapVector,
) -> Result<bool, AlignmentError> {
    let r = host.ones();
    if s1.ones() != r || s2.ones() != r || !s1.dominated_at(host, 0) || !s2.dominated_at(host, 0) {
        return Err(AlignmentError::NotASubwordEncoding);
    }
    Ok((0..r).any(|j| (0..r).all(|i| s1.gaps[i] == s2.gaps[(i + j) % r])))
}

/// [`differ_by_turn_gaps`] with the host gaps read from the canonical representative of `w`.
pub fn differ_by_turn(
    s1: &GapVector,
    s2: &GapVector,
    w: &CyclicWord,
) -> Result<bool, AlignmentError> {
    differ_by_turn_gaps(s1, s2, &GapVector::of(w)?)
}

/// Every word obtained by inserting `0^x` at one place of `s`.
fn insertions(s: &CyclicWord, x: usize) -> Vec<CyclicWord> {
    let letters = s.letters();
    let mut out: Vec<CyclicWord> = (0..letters.len())
        .filter_map(|p| {
            let mut raw = letters[..p].to_vec();
            raw.extend(std::iter::repeat_n(0, x));
            raw.extend_from_slice(&letters[p..]);
            canonicalize(&raw).ok()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// `u1 ≅ v1`: the words are equal, and adding one block `0^x` to each can
/// give one common word that is a subword of `u` and of `v`.
pub fn cong(
    u1: &CyclicWord,
    v1: &CyclicWord,
    u: &CyclicWord,
    v: &CyclicWord,
) -> Result<bool, AlignmentError> {
    let pre = |msg: &str| AlignmentError::PreconditionViolated(msg.to_string());
    let pu = block_profile(u).map_err(|e| pre(&e.to_string()))?;
    let pv = block_profile(v).map_err(|e| pre(&e.to_string()))?;
    if pu.x != pv.x || pu.n1 != pv.n1 || u.len() != v.len() {
        return Err(pre("lengths, 1-counts and longest 0-blocks must agree"));
    }
    let du = derived_words(u).map_err(|e| pre(&e.to_string()))?;
    let dv = derived_words(v).map_err(|e| pre(&e.to_string()))?;
    if !is_subword(u1, &du.w_short) || !is_subword(v1, &dv.w_short) {
        return Err(pre("arguments must be subwords of the short-block words"));
    }
    if u1 != v1 {
        return Ok(false);
    }
    Ok(insertions(u1, pu.x)
        .iter()
        .any(|c| is_subword(c, u) && is_subword(c, v)))
}
