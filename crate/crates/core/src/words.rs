//! Cyclic binary words packed into a single machine word.
//!
//! A [`CyclicWord`] stores the lexicographically least rotation of its
//! conjugacy class. Letter `i` of the representative lives at bit
//! `len - 1 - i`, so for two words of equal length integer order on the
//! packed bits coincides with lexicographic order on the letters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Longest word that fits the packed representation.
pub const MAX_LEN: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("empty word")]
    EmptyWord,
    #[error("word of length {0} exceeds the maximum of {MAX_LEN}")]
    OverMaxLength(usize),
    #[error("invalid letter {0:?}; expected '0' or '1'")]
    InvalidLetter(char),
    #[error("word {0} uses a single letter and has no blocks")]
    DegenerateWord(CyclicWord),
}

#[inline]
pub(crate) fn mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

/// Rotate the letter sequence one step to the left.
#[inline]
pub(crate) fn rotl1(bits: u64, len: usize) -> u64 {
    ((bits << 1) | (bits >> (len - 1))) & mask(len)
}

#[inline]
pub(crate) fn rotl(bits: u64, len: usize, by: usize) -> u64 {
    let by = by % len;
    if by == 0 {
        bits
    } else {
        ((bits << by) | (bits >> (len - by))) & mask(len)
    }
}

/// Least rotation of a packed letter sequence.
#[inline]
pub(crate) fn canonical_bits(bits: u64, len: usize) -> u64 {
    let mut best = bits;
    let mut cur = bits;
    for _ in 1..len {
        cur = rotl1(cur, len);
        if cur < best {
            best = cur;
        }
    }
    best
}

/// Letters in reading order, least significant bit first.
#[inline]
pub(crate) fn lsb_first(bits: u64, len: usize) -> u64 {
    bits.reverse_bits() >> (64 - len)
}

/// Conjugacy class of a binary word of length `1..=64`.
///
/// Equality, hashing and ordering all act on the canonical representative,
/// so two values compare equal exactly when their classes do. Ordering is by
/// length first and lexicographic within a length.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclicWord {
    len: u8,
    bits: u64,
}

impl CyclicWord {
    /// Builds the class of a raw packed sequence. `bits` above `len` must be clear.
    pub(crate) fn from_raw(bits: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&len));
        debug_assert_eq!(bits & !mask(len), 0);
        CyclicWord {
            len: len as u8,
            bits: canonical_bits(bits, len),
        }
    }

    /// Wraps bits that are already the least rotation.
    pub(crate) fn from_canonical(bits: u64, len: usize) -> Self {
        debug_assert_eq!(canonical_bits(bits, len), bits);
        CyclicWord {
            len: len as u8,
            bits,
        }
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c {
                '0' => letters.push(0),
                '1' => letters.push(1),
                other => return Err(WordError::InvalidLetter(other)),
            }
        }
        canonicalize(&letters)
    }

    /// `letter^count`.
    pub fn constant(letter: u8, count: usize) -> Result<Self, WordError> {
        check_len(count)?;
        let bits = if letter == 0 { 0 } else { mask(count) };
        Ok(CyclicWord::from_canonical(bits, count))
    }

    /// Word `1 0^{g_1} 1 0^{g_2} ... 1 0^{g_r}`.
    pub fn from_gaps(gaps: &[usize]) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for &g in gaps {
            letters.push(1);
            letters.extend(std::iter::repeat_n(0, g));
        }
        canonicalize(&letters)
    }

    /// Word `1^{o_1} 0^{z_1} ... 1^{o_r} 0^{z_r}` from `(ones, zeros)` pairs.
    pub fn from_block_pairs(pairs: &[(usize, usize)]) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        for &(ones, zeros) in pairs {
            letters.extend(std::iter::repeat_n(1, ones));
            letters.extend(std::iter::repeat_n(0, zeros));
        }
        canonicalize(&letters)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; kept for API symmetry with collections.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed canonical representative (letter 0 is the most significant of the low `len` bits).
    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn letter(&self, i: usize) -> u8 {
        ((self.bits >> (self.len() - 1 - i)) & 1) as u8
    }

    pub fn letters(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.letter(i)).collect()
    }

    #[inline]
    pub fn count_ones(&self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn count_zeros(&self) -> usize {
        self.len() - self.count_ones()
    }

    pub fn is_constant(&self) -> bool {
        self.bits == 0 || self.bits == mask(self.len())
    }

    /// Swap the two letters.
    pub fn complement(&self) -> Self {
        CyclicWord::from_raw(!self.bits & mask(self.len()), self.len())
    }

    pub fn reverse(&self) -> Self {
        reverse(*self)
    }

    pub fn is_periodic(&self) -> (bool, usize) {
        is_periodic(*self)
    }

    /// The `n` rotations of the canonical representative, as raw packed sequences.
    pub fn rotations(&self) -> impl Iterator<Item = u64> + '_ {
        let len = self.len();
        (0..len).map(move |r| rotl(self.bits, len, r))
    }
}

fn check_len(len: usize) -> Result<(), WordError> {
    match len {
        0 => Err(WordError::EmptyWord),
        l if l > MAX_LEN => Err(WordError::OverMaxLength(l)),
        _ => Ok(()),
    }
}

/// Canonical class of a raw letter sequence.
pub fn canonicalize(raw: &[u8]) -> Result<CyclicWord, WordError> {
    check_len(raw.len())?;
    let mut bits = 0u64;
    for &letter in raw {
        if letter > 1 {
            return Err(WordError::InvalidLetter(
                char::from_digit(letter as u32, 36).unwrap_or('?'),
            ));
        }
        bits = (bits << 1) | letter as u64;
    }
    Ok(CyclicWord::from_raw(bits, raw.len()))
}

/// Class of the mirror image.
pub fn reverse(w: CyclicWord) -> CyclicWord {
    let len = w.len();
    CyclicWord::from_raw(lsb_first(w.bits, len), len)
}

/// Whether `w = p^r` for some `r >= 2`, together with the smallest period length.
pub fn is_periodic(w: CyclicWord) -> (bool, usize) {
    let len = w.len();
    for d in 1..len {
        if len.is_multiple_of(d) && rotl(w.bits, len, d) == w.bits {
            return (true, d);
        }
    }
    (false, len)
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len())
            .map(|i| if self.letter(i) == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclicWord({self})")
    }
}

impl FromStr for CyclicWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CyclicWord::parse(s)
    }
}

impl Serialize for CyclicWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for CyclicWord {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        CyclicWord::parse(&text).map_err(serde::de::Error::custom)
    }
}
