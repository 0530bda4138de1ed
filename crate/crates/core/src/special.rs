//! Special words: `(0^t 1^m)^l` and its variants with one or two doubled 1-blocks.

use serde::Serialize;

use crate::profile::block_pairs;
use crate::words::CyclicWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialKind {
    /// `(0^t 1^m)^l`
    Type1,
    /// `(0^t 1^m)^{l-1} 0^t 1^{2m}`
    Type2,
    /// `(0^t 1^m)^i 0^t 1^{2m} (0^t 1^m)^{l-i-2} 0^t 1^{2m}`
    Type3,
    NotSpecial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NotSpecialReason {
    /// Fewer than two 0-blocks (includes constant words).
    TooFewBlocks,
    UnequalZeroBlocks,
    OneBlockPattern,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpecialClass {
    pub kind: SpecialKind,
    pub t: usize,
    pub m: usize,
    /// Number of `1^m` blocks on the longer arc between the two `1^{2m}` blocks (type 3 only).
    pub i: usize,
    /// Shortest 1-block; equals `m` for special words.
    pub dist: usize,
    pub reason: Option<NotSpecialReason>,
}

impl SpecialClass {
    fn not_special(reason: NotSpecialReason) -> Self {
        SpecialClass {
            kind: SpecialKind::NotSpecial,
            t: 0,
            m: 0,
            i: 0,
            dist: 0,
            reason: Some(reason),
        }
    }

    pub fn is_special(&self) -> bool {
        self.kind != SpecialKind::NotSpecial
    }
}

pub fn classify_special(w: &CyclicWord) -> SpecialClass {
    let pairs = block_pairs(w);
    let l = pairs.len();
    if l < 2 {
        return SpecialClass::not_special(NotSpecialReason::TooFewBlocks);
    }
    let t = pairs[0].1;
    if pairs.iter().any(|p| p.1 != t) {
        return SpecialClass::not_special(NotSpecialReason::UnequalZeroBlocks);
    }
    let m = pairs.iter().map(|p| p.0).min().unwrap();
    let doubled: Vec<usize> = (0..l).filter(|&j| pairs[j].0 == 2 * m).collect();
    let plain = pairs.iter().filter(|p| p.0 == m).count();
    if plain + doubled.len() != l {
        return SpecialClass::not_special(NotSpecialReason::OneBlockPattern);
    }
    let (kind, i) = match doubled.len() {
        0 => (SpecialKind::Type1, 0),
        1 => (SpecialKind::Type2, 0),
        2 => {
            let inner = doubled[1] - doubled[0] - 1;
            let outer = l - 2 - inner;
            (SpecialKind::Type3, inner.max(outer))
        }
        _ => return SpecialClass::not_special(NotSpecialReason::OneBlockPattern),
    };
    SpecialClass {
        kind,
        t,
        m,
        i,
        dist: m,
        reason: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn type_examples() {
        let c = classify_special(&w("0011100111"));
        assert_eq!((c.kind, c.t, c.m, c.dist), (SpecialKind::Type1, 2, 3, 3));
        let c = classify_special(&w("0010010011"));
        assert_eq!((c.kind, c.t, c.m, c.dist), (SpecialKind::Type2, 2, 1, 1));
        let c = classify_special(&w("0101101110"));
        assert_eq!(c.kind, SpecialKind::NotSpecial);
        let c = classify_special(&w("010110111"));
        assert_eq!(c.reason, Some(NotSpecialReason::OneBlockPattern));
    }

    #[test]
    fn type3_position() {
        // (0 1)^2 0 1^2 (0 1)^1 0 1^2 : arcs of 2 and 1 plain blocks
        let c = classify_special(&w("010101101011"));
        assert_eq!((c.kind, c.m, c.i), (SpecialKind::Type3, 1, 2));
    }

    #[test]
    fn too_few_blocks() {
        assert_eq!(
            classify_special(&w("000111")).reason,
            Some(NotSpecialReason::TooFewBlocks)
        );
        assert_eq!(
            classify_special(&w("0000")).reason,
            Some(NotSpecialReason::TooFewBlocks)
        );
        assert_eq!(
            classify_special(&w("001011")).reason,
            Some(NotSpecialReason::UnequalZeroBlocks)
        );
    }
}
