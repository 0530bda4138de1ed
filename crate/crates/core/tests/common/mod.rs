//! Position-subset references shared by the integration tests. They work on
//! raw letter sequences and use the library only to canonicalize.
#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclic_subwords::survey::necklaces;
use cyclic_subwords::{canonicalize, CyclicWord};

pub fn all_words(n: usize) -> Vec<CyclicWord> {
    necklaces(n).unwrap().collect()
}

pub fn pick(letters: &[u8], mask: u64) -> Vec<u8> {
    (0..letters.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| letters[i])
        .collect()
}

fn masks(n: usize, k: usize) -> impl Iterator<Item = u64> {
    (0u64..1 << n).filter(move |m| m.count_ones() as usize == k)
}

/// Labelled occurrences: a position subset of the host together with the
/// subword letter placed at its first position.
pub fn naive_occurrences(s: &CyclicWord, w: &CyclicWord) -> u128 {
    let (sl, wl) = (s.letters(), w.letters());
    let k = sl.len();
    let mut count = 0;
    for mask in masks(wl.len(), k) {
        let seq = pick(&wl, mask);
        count += (0..k)
            .filter(|&j| (0..k).all(|t| seq[t] == sl[(j + t) % k]))
            .count() as u128;
    }
    count
}

pub fn naive_contains(s: &CyclicWord, w: &CyclicWord) -> bool {
    let (sl, wl) = (s.letters(), w.letters());
    let k = sl.len();
    masks(wl.len(), k).any(|mask| {
        let seq = pick(&wl, mask);
        (0..k).any(|j| (0..k).all(|t| seq[t] == sl[(j + t) % k]))
    })
}

pub fn naive_subwords(w: &CyclicWord, k: usize) -> BTreeSet<CyclicWord> {
    let wl = w.letters();
    masks(wl.len(), k)
        .map(|m| canonicalize(&pick(&wl, m)).unwrap())
        .collect()
}
