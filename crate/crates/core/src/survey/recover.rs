//! Letter counts and block count read back from a subword collection.

use std::collections::HashMap;

use serde::Serialize;

use super::SurveyError;
use crate::constructive::length_bound;
use crate::profile::block_pairs;
use crate::subword::Signature;
use crate::words::CyclicWord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RecoveredParameters {
    pub n0: usize,
    pub n1: usize,
    pub l: usize,
}

/// Recovers `(n0, n1, l)` of a length-`n` word from its subwords of length up
/// to `min(n, ⌊3n/4⌋ + 4)`.
///
/// The majority letter is found by testing `0^{⌊n/2⌋+1}`. The minority count
/// `c` is the longest power of the minority letter present. The block count
/// is the largest `k` with `(01)^k` present when `(01)^{k+1}` is short enough
/// to have been tested; otherwise the longest subword keeping every majority
/// letter and only minority blocks of size at least 2 gives it, as its number
/// of minority blocks plus the number of letters it drops.
pub fn recover_parameters(
    sets: &[Signature],
    n: usize,
) -> Result<RecoveredParameters, SurveyError> {
    let inconsistent = |reason: String| SurveyError::InconsistentSet { n, reason };
    if n == 0 || n > crate::words::MAX_LEN {
        return Err(SurveyError::OverMaxLength(n));
    }
    let reach = length_bound(n).min(n);
    let by_len: HashMap<usize, &Signature> = sets.iter().map(|s| (s.k, s)).collect();
    if let Some(k) = (1..=reach).find(|k| !by_len.contains_key(k)) {
        return Err(inconsistent(format!("no subwords of length {k}")));
    }
    let has = |w: &CyclicWord| by_len.get(&w.len()).is_some_and(|s| s.contains(w));

    let zeros_majority = has(&CyclicWord::constant(0, n / 2 + 1).expect("n / 2 + 1 <= n"));
    let minority = if zeros_majority { 1 } else { 0 };
    let power = |r: usize| CyclicWord::constant(minority, r).expect("r <= n");
    let few = (1..=n / 2)
        .take_while(|&r| has(&power(r)))
        .last()
        .unwrap_or(0);
    if few < reach && has(&power(few + 1)) {
        return Err(inconsistent(
            "minority letter count is not determined".into(),
        ));
    }
    let many = n - few;
    let (n0, n1) = if minority == 1 {
        (many, few)
    } else {
        (few, many)
    };
    if few == 0 {
        return Ok(RecoveredParameters { n0, n1, l: 0 });
    }

    let alternating = |k: usize| {
        let pairs = vec![(1, 1); k];
        CyclicWord::from_block_pairs(&pairs).expect("2k <= n")
    };
    let mut k_max = 0;
    while 2 * (k_max + 1) <= reach && has(&alternating(k_max + 1)) {
        k_max += 1;
    }
    if 2 * (k_max + 1) <= reach {
        return Ok(RecoveredParameters { n0, n1, l: k_max });
    }

    // Longest subword with every majority letter and minority blocks of size >= 2.
    let mut best: Option<(usize, usize)> = None;
    for sig in sets.iter().filter(|s| s.k <= reach) {
        for w in &sig.words {
            let w = if minority == 1 { *w } else { w.complement() };
            if w.count_zeros() != many {
                continue;
            }
            let pairs = block_pairs(&w);
            if pairs.iter().any(|p| p.0 < 2) {
                continue;
            }
            let cand = (pairs.len(), w.len());
            if best.is_none_or(|b| cand > b) {
                best = Some(cand);
            }
        }
    }
    let (k, len) =
        best.ok_or_else(|| inconsistent("no subword keeps every majority letter".into()))?;
    let l = k + (n - len);
    if l > few {
        return Err(inconsistent(format!(
            "block count {l} exceeds the minority count {few}"
        )));
    }
    Ok(RecoveredParameters { n0, n1, l })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subword::subwords_upto;

    fn recover(s: &str) -> RecoveredParameters {
        let w: CyclicWord = s.parse().unwrap();
        let n = w.len();
        let sets = subwords_upto(&w, length_bound(n).min(n)).unwrap();
        recover_parameters(&sets, n).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            recover("100010110001100"),
            RecoveredParameters { n0: 9, n1: 6, l: 4 }
        );
        assert_eq!(
            recover("00000000"),
            RecoveredParameters { n0: 8, n1: 0, l: 0 }
        );
        assert_eq!(
            recover("01010101"),
            RecoveredParameters { n0: 4, n1: 4, l: 4 }
        );
        assert_eq!(recover("1"), RecoveredParameters { n0: 0, n1: 1, l: 0 });
        assert_eq!(recover("01"), RecoveredParameters { n0: 1, n1: 1, l: 1 });
    }

    #[test]
    fn missing_lengths_rejected() {
        let w: CyclicWord = "0011".parse().unwrap();
        let sets = subwords_upto(&w, 2).unwrap();
        assert!(matches!(
            recover_parameters(&sets, 4),
            Err(SurveyError::InconsistentSet { .. })
        ));
    }
}
