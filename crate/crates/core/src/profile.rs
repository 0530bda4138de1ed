//! Run-length structure of cyclic words and the subwords derived from it.

use serde::Serialize;

use crate::words::{CyclicWord, WordError};

/// A maximal run of one letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub letter: u8,
    pub len: usize,
}

/// `(ones, zeros)` block pairs of `w`, read from the first 1 of the canonical
/// representative. Empty for constant words.
pub(crate) fn block_pairs(w: &CyclicWord) -> Vec<(usize, usize)> {
    if w.is_constant() {
        return Vec::new();
    }
    let n = w.len();
    // The canonical representative of a non-constant word starts with a 0,
    // so the first 1 is preceded by a 0.
    let start = (0..n).find(|&i| w.letter(i) == 1).unwrap();
    let mut pairs = Vec::new();
    let mut i = 0;
    while i < n {
        let mut ones = 0;
        while i < n && w.letter((start + i) % n) == 1 {
            ones += 1;
            i += 1;
        }
        let mut zeros = 0;
        while i < n && w.letter((start + i) % n) == 0 {
            zeros += 1;
            i += 1;
        }
        pairs.push((ones, zeros));
    }
    pairs
}

/// Letter counts and 0-block statistics of a cyclic word.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockProfile {
    pub n: usize,
    pub n0: usize,
    pub n1: usize,
    /// Number of 0-blocks, which equals the number of 1-blocks.
    pub l: usize,
    /// Longest 0-block.
    pub x: usize,
    /// Longest 0-block strictly shorter than `x`, or 0.
    pub y: usize,
    /// Number of 0-blocks of length `x`.
    pub a: usize,
    pub blocks: Vec<Run>,
    /// Set for `0^n` and `1^n`, which have `l = 0`.
    pub degenerate: bool,
}

impl BlockProfile {
    /// Profile of any word; constant words get `l = x = y = a = 0` and the degenerate flag.
    pub fn of(w: &CyclicWord) -> Self {
        let pairs = block_pairs(w);
        let n0 = w.count_zeros();
        let n1 = w.count_ones();
        if pairs.is_empty() {
            return BlockProfile {
                n: w.len(),
                n0,
                n1,
                l: 0,
                x: 0,
                y: 0,
                a: 0,
                blocks: vec![Run {
                    letter: if n1 > 0 { 1 } else { 0 },
                    len: w.len(),
                }],
                degenerate: true,
            };
        }
        let x = pairs.iter().map(|p| p.1).max().unwrap();
        let y = pairs
            .iter()
            .map(|p| p.1)
            .filter(|&z| z < x)
            .max()
            .unwrap_or(0);
        let a = pairs.iter().filter(|p| p.1 == x).count();
        let blocks = pairs
            .iter()
            .flat_map(|&(o, z)| [Run { letter: 1, len: o }, Run { letter: 0, len: z }])
            .collect();
        BlockProfile {
            n: w.len(),
            n0,
            n1,
            l: pairs.len(),
            x,
            y,
            a,
            blocks,
            degenerate: false,
        }
    }

    /// Zeros in big blocks.
    pub fn n_long(&self) -> usize {
        self.a * self.x
    }

    /// Zeros in small blocks.
    pub fn n_short(&self) -> usize {
        self.n0 - self.n_long()
    }

    /// `(ones, zeros)` pairs in block order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        if self.degenerate {
            return Vec::new();
        }
        self.blocks
            .chunks(2)
            .map(|c| (c[0].len, c[1].len))
            .collect()
    }
}

/// Profile of a word with both letters.
pub fn block_profile(w: &CyclicWord) -> Result<BlockProfile, WordError> {
    let profile = BlockProfile::of(w);
    if profile.degenerate {
        Err(WordError::DegenerateWord(*w))
    } else {
        Ok(profile)
    }
}

/// The subwords keeping all 1's and, respectively, the big 0-blocks, the small
/// 0-blocks, and a single 0 from every block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedWords {
    pub w_long: CyclicWord,
    pub w_short: CyclicWord,
    pub w_zeros: CyclicWord,
}

pub fn derived_words(w: &CyclicWord) -> Result<DerivedWords, WordError> {
    let profile = block_profile(w)?;
    let pairs = profile.pairs();
    let x = profile.x;
    let keep = |f: &dyn Fn(usize) -> usize| -> CyclicWord {
        let mapped: Vec<(usize, usize)> = pairs.iter().map(|&(o, z)| (o, f(z))).collect();
        CyclicWord::from_block_pairs(&mapped).expect("subword of a valid word")
    };
    Ok(DerivedWords {
        w_long: keep(&|z| if z == x { z } else { 0 }),
        w_short: keep(&|z| if z < x { z } else { 0 }),
        w_zeros: keep(&|_| 1),
    })
}
