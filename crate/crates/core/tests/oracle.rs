//! Brute-force references for the containment engine and the classifiers.

mod common;

use std::collections::{BTreeSet, HashMap};

use common::{all_words, naive_occurrences, naive_subwords, pick};
use cyclic_subwords::survey::min_distinguishing_length;
use cyclic_subwords::{
    canonicalize, classify_special, is_subword, occurrences, subwords_exact, CyclicWord,
    SpecialKind,
};
use proptest::prelude::*;

#[test]
fn containment_and_occurrences_match_position_subsets() {
    for n in 1..=8 {
        for w in all_words(n) {
            for k in 1..=n {
                for s in all_words(k) {
                    let occ = naive_occurrences(&s, &w);
                    assert_eq!(occurrences(&s, &w), occ, "{s} in {w}");
                    assert_eq!(is_subword(&s, &w), occ > 0, "{s} in {w}");
                }
            }
        }
    }
}

#[test]
fn subword_sets_match_position_subsets() {
    for n in 1..=11 {
        for w in all_words(n) {
            for k in 1..=n {
                let got: BTreeSet<CyclicWord> =
                    subwords_exact(&w, k).unwrap().words.into_iter().collect();
                assert_eq!(got, naive_subwords(&w, k), "{w} at {k}");
            }
        }
    }
}

#[test]
fn min_distinguishing_length_matches_set_comparison() {
    for n in 2..=9 {
        let words = all_words(n);
        let sets: Vec<Vec<BTreeSet<CyclicWord>>> = words
            .iter()
            .map(|w| (1..=n).map(|k| naive_subwords(w, k)).collect())
            .collect();
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let want = (1..=n).find(|&k| sets[i][k - 1] != sets[j][k - 1]).unwrap();
                let got = min_distinguishing_length(&words[i], &words[j]).unwrap();
                assert_eq!(got.length, want, "{} {}", words[i], words[j]);
                assert_eq!(got.witness.len(), want);
                let (a, b) = (
                    is_subword(&got.witness, &words[i]),
                    is_subword(&got.witness, &words[j]),
                );
                assert!(a != b);
            }
        }
    }
}

/// Every instance of the three patterns up to length `max`, keyed by
/// canonical word, keeping the reading with the longest short 1-block.
fn special_patterns(max: usize) -> HashMap<CyclicWord, (SpecialKind, usize, usize, usize)> {
    let mut out: HashMap<CyclicWord, (SpecialKind, usize, usize, usize)> = HashMap::new();
    let block = |t: usize, m: usize| -> Vec<u8> {
        let mut b = vec![0; t];
        b.extend(std::iter::repeat_n(1, m));
        b
    };
    let mut add = |letters: Vec<u8>, entry: (SpecialKind, usize, usize, usize)| {
        if letters.len() <= max {
            let w = canonicalize(&letters).unwrap();
            let slot = out.entry(w).or_insert(entry);
            if entry.2 > slot.2 || (entry.2 == slot.2 && entry.3 > slot.3) {
                *slot = entry;
            }
        }
    };
    for t in 1..max {
        for m in 1..max {
            for l in 2..=max / (t + m) {
                add(block(t, m).repeat(l), (SpecialKind::Type1, t, m, 0));
                let mut w2 = block(t, m).repeat(l - 1);
                w2.extend(block(t, 2 * m));
                add(w2, (SpecialKind::Type2, t, m, 0));
                for i in 0..=l - 2 {
                    let mut w3 = block(t, m).repeat(i);
                    w3.extend(block(t, 2 * m));
                    w3.extend(block(t, m).repeat(l - i - 2));
                    w3.extend(block(t, 2 * m));
                    add(w3, (SpecialKind::Type3, t, m, i.max(l - 2 - i)));
                }
            }
        }
    }
    out
}

#[test]
fn special_classification_matches_pattern_instances() {
    let max = 16;
    let patterns = special_patterns(max);
    let mut seen = 0;
    for n in 1..=max {
        for w in all_words(n) {
            let c = classify_special(&w);
            match patterns.get(&w) {
                Some(&(kind, t, m, i)) => {
                    seen += 1;
                    assert_eq!((c.kind, c.t, c.m, c.i, c.dist), (kind, t, m, i, m), "{w}");
                }
                None => assert_eq!(c.kind, SpecialKind::NotSpecial, "{w}"),
            }
        }
    }
    assert_eq!(seen, patterns.len());
}

fn raw_word() -> impl Strategy<Value = Vec<u8>> {
    prop::collection::vec(0u8..2, 1..=24)
}

proptest! {
    #[test]
    fn canonical_form_ignores_rotation(raw in raw_word(), turn in 0usize..24) {
        let mut turned = raw.clone();
        turned.rotate_left(turn % raw.len());
        prop_assert_eq!(canonicalize(&raw).unwrap(), canonicalize(&turned).unwrap());
    }

    #[test]
    fn containment_is_transitive(raw in raw_word(), keep_mid in any::<u64>(), keep_low in any::<u64>()) {
        let mid = pick(&raw, keep_mid | 1);
        let low = pick(&mid, keep_low | 1);
        let (w, t, s) = (
            canonicalize(&raw).unwrap(),
            canonicalize(&mid).unwrap(),
            canonicalize(&low).unwrap(),
        );
        prop_assert!(is_subword(&t, &w));
        prop_assert!(is_subword(&s, &t));
        prop_assert!(is_subword(&s, &w));
    }
}
