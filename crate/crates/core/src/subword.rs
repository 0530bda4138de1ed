//! Scattered cyclic subwords: containment, occurrence counting and subword sets.

use std::fmt;

use serde::{Serialize, Serializer};
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::words::{canonical_bits, mask, CyclicWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubwordError {
    #[error("subword length {k} outside 1..={n}")]
    BadLength { k: usize, n: usize },
    #[error("word of length {found} in a set of length {k}")]
    MixedLengths { k: usize, found: usize },
}

/// Masks of the 1- and 0-positions of the doubled representative, bit `p` for position `p`.
#[inline]
fn doubled_masks(w: &CyclicWord) -> (u128, u128) {
    let n = w.len();
    let once = crate::words::lsb_first(w.bits(), n) as u128;
    let ones = once | (once << n);
    let full = if 2 * n >= 128 {
        u128::MAX
    } else {
        (1u128 << (2 * n)) - 1
    };
    (ones, !ones & full)
}

/// Whether `s` is a scattered cyclic subword of `w`.
///
/// Checks whether the fixed representative of `s` is a subsequence of some
/// rotation of `w`, matching greedily with bit scans over the doubled word.
pub fn is_subword(s: &CyclicWord, w: &CyclicWord) -> bool {
    let (k, n) = (s.len(), w.len());
    if k > n || s.count_ones() > w.count_ones() || s.count_zeros() > w.count_zeros() {
        return false;
    }
    if k == n {
        return s == w;
    }
    let (ones, zeros) = doubled_masks(w);
    let first = s.letter(0);
    let starts = if first == 1 { ones } else { zeros } & mask(n) as u128;
    let mut candidates = starts;
    'start: while candidates != 0 {
        let r = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let mut pos = r + 1;
        for j in 1..k {
            let m = if s.letter(j) == 1 { ones } else { zeros };
            let rest = m >> pos;
            if rest == 0 {
                continue 'start;
            }
            pos += rest.trailing_zeros() as usize;
            if pos >= r + n {
                continue 'start;
            }
            pos += 1;
        }
        return true;
    }
    false
}

/// Number of labelled occurrences of `s` in `w`.
///
/// An occurrence is an injection from the letter indices of `s` into the
/// positions of `w` that preserves letters and cyclic order and winds around
/// `w` exactly once. Injections differing only in which letter of `s` lands
/// first are distinct, so a periodic `s` never occurs exactly once.
pub fn occurrences(s: &CyclicWord, w: &CyclicWord) -> u128 {
    let (k, n) = (s.len(), w.len());
    if k > n {
        return 0;
    }
    let sl = s.letters();
    let wl = w.letters();
    let mut total = 0u128;
    // dp[j] = embeddings of sl[1..=j] into the prefix read so far
    let mut dp = vec![0u128; k];
    for p in 0..n {
        if wl[p] != sl[0] {
            continue;
        }
        dp.iter_mut().for_each(|d| *d = 0);
        dp[0] = 1;
        for step in 1..n {
            let c = wl[(p + step) % n];
            for j in (1..k).rev() {
                if sl[j] == c {
                    dp[j] += dp[j - 1];
                }
            }
        }
        total += dp[k - 1];
    }
    total
}

pub fn is_unioccurrent(s: &CyclicWord, w: &CyclicWord) -> bool {
    occurrences(s, w) == 1
}

/// One labelled occurrence of a subword.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Occurrence {
    /// Increasing positions in the representative of the host.
    pub positions: Vec<usize>,
    /// Index of the subword letter placed at `positions[0]`.
    pub start_label: usize,
}

/// All occurrences counted by [`occurrences`], in increasing order of
/// `(positions, start_label)`. Exponential in general; meant for small inputs.
pub fn occurrence_list(s: &CyclicWord, w: &CyclicWord) -> Vec<Occurrence> {
    let (k, n) = (s.len(), w.len());
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let sl = s.letters();
    let wl = w.letters();
    // Choose k increasing positions; each rotation of the labelling that
    // reads the letters correctly is one occurrence.
    let mut chosen = Vec::with_capacity(k);
    fn rec(
        from: usize,
        k: usize,
        wl: &[u8],
        sl: &[u8],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Occurrence>,
    ) {
        if chosen.len() == k {
            for label in 0..k {
                if (0..k).all(|i| wl[chosen[i]] == sl[(label + i) % k]) {
                    out.push(Occurrence {
                        positions: chosen.clone(),
                        start_label: label,
                    });
                }
            }
            return;
        }
        let need = k - chosen.len();
        for p in from..=wl.len() - need {
            chosen.push(p);
            rec(p + 1, k, wl, sl, chosen, out);
            chosen.pop();
        }
    }
    rec(0, k, &wl, &sl, &mut chosen, &mut out);
    out
}

/// Sorted set of the canonical subwords of one length, with a stable digest.
#[derive(Clone, PartialEq, Eq)]
pub struct Signature {
    pub k: usize,
    pub words: Vec<CyclicWord>,
    pub digest: u128,
}

impl Signature {
    pub(crate) fn from_level(k: usize, level: &[u64]) -> Self {
        Signature {
            k,
            words: level
                .iter()
                .map(|&b| CyclicWord::from_canonical(b, k))
                .collect(),
            digest: level_digest(k, level),
        }
    }

    /// Signature of a collection of words of length `k`; duplicates and
    /// order are ignored.
    pub fn from_words(
        k: usize,
        words: impl IntoIterator<Item = CyclicWord>,
    ) -> Result<Self, SubwordError> {
        let mut level = Vec::new();
        for w in words {
            if w.len() != k {
                return Err(SubwordError::MixedLengths { k, found: w.len() });
            }
            level.push(w.bits());
        }
        level.sort_unstable();
        level.dedup();
        Ok(Signature::from_level(k, &level))
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, s: &CyclicWord) -> bool {
        s.len() == self.k && self.words.binary_search(s).is_ok()
    }

    pub fn digest_hex(&self) -> String {
        format!("{:032x}", self.digest)
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Signature")
            .field("k", &self.k)
            .field("words", &self.words)
            .field("digest", &self.digest_hex())
            .finish()
    }
}

impl Serialize for Signature {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Signature", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("words", &self.words)?;
        st.serialize_field("digest", &self.digest_hex())?;
        st.end()
    }
}

/// First 128 bits of SHA-256 over the length and the sorted packed words.
pub(crate) fn level_digest(k: usize, level: &[u64]) -> u128 {
    let mut h = Sha256::new();
    h.update((k as u64).to_le_bytes());
    for &b in level {
        h.update(b.to_le_bytes());
    }
    let out = h.finalize();
    let mut first = [0u8; 16];
    first.copy_from_slice(&out[..16]);
    u128::from_be_bytes(first)
}

/// Drop letter `i` from a packed sequence of length `len`.
#[inline]
fn delete_at(bits: u64, len: usize, i: usize) -> u64 {
    let low_len = len - 1 - i;
    let high = if i == 0 { 0 } else { bits >> (low_len + 1) };
    (high << low_len) | (bits & mask(low_len))
}

/// Canonical subwords one letter shorter than each word of `level`.
pub(crate) fn next_level(level: &[u64], len: usize, out: &mut Vec<u64>) {
    out.clear();
    for &bits in level {
        // Deleting anywhere inside a run gives the same word, so delete at run starts only.
        let prev = crate::words::rotl(bits, len, len - 1);
        let starts = (bits ^ prev) & mask(len);
        if starts == 0 {
            out.push(canonical_bits(delete_at(bits, len, 0), len - 1));
            continue;
        }
        let mut s = starts;
        while s != 0 {
            let bit = 63 - s.leading_zeros() as usize;
            s &= !(1u64 << bit);
            let i = len - 1 - bit;
            out.push(canonical_bits(delete_at(bits, len, i), len - 1));
        }
    }
    out.sort_unstable();
    out.dedup();
}

/// Walks the subword sets of `w` from length `|w|` down to `lowest`, calling
/// `visit(len, level)` on each. Stops early when `visit` returns false.
pub(crate) fn walk_levels(
    w: &CyclicWord,
    lowest: usize,
    mut visit: impl FnMut(usize, &[u64]) -> bool,
) {
    let n = w.len();
    let mut cur = vec![w.bits()];
    let mut next = Vec::new();
    let mut len = n;
    loop {
        if !visit(len, &cur) || len <= lowest.max(1) {
            return;
        }
        next_level(&cur, len, &mut next);
        std::mem::swap(&mut cur, &mut next);
        len -= 1;
    }
}

/// Packed subword set of length exactly `k`.
pub(crate) fn level_bits(w: &CyclicWord, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    walk_levels(w, k, |len, level| {
        if len == k {
            out = level.to_vec();
            false
        } else {
            true
        }
    });
    out
}

fn check_length(w: &CyclicWord, k: usize) -> Result<(), SubwordError> {
    if k < 1 || k > w.len() {
        Err(SubwordError::BadLength { k, n: w.len() })
    } else {
        Ok(())
    }
}

/// All canonical subwords of `w` of length exactly `k`.
pub fn subwords_exact(w: &CyclicWord, k: usize) -> Result<Signature, SubwordError> {
    check_length(w, k)?;
    Ok(Signature::from_level(k, &level_bits(w, k)))
}

/// Signatures of lengths `1..=k`, shortest first.
pub fn subwords_upto(w: &CyclicWord, k: usize) -> Result<Vec<Signature>, SubwordError> {
    check_length(w, k)?;
    let mut out = Vec::with_capacity(k);
    walk_levels(w, 1, |len, level| {
        if len <= k {
            out.push(Signature::from_level(len, level));
        }
        true
    });
    out.reverse();
    Ok(out)
}
