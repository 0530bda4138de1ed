//! Short distinguishing subwords built from named candidate families, each
//! checked against the containment oracle.

use std::fmt;

use serde::Serialize;

use super::cover::ones_cover;
use super::popular::extend_by_popular_idea;
use super::unioccurrent::unioccurrent_core;
use super::{length_bound, ConstructiveError, Side};
use crate::alignment::GapVector;
use crate::profile::{block_pairs, derived_words, BlockProfile};
use crate::subword::is_subword;
use crate::survey::min_distinguishing_length;
use crate::words::CyclicWord;

/// Which family of candidates produced a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// The words differ in their number of 0's or 1's.
    LetterCounts,
    /// The words differ in their number of 0-blocks.
    BlockCount,
    /// The longest 0-blocks differ in length.
    LongestBlock,
    /// Long blocks of one word are neither special nor periodic, with three or more of them.
    IrregularLong,
    /// Long blocks of one word are periodic and not special, with three or more of them.
    PeriodicLong,
    /// One word has at most two long blocks and the other is special or also has at most two.
    FewLong,
    /// Long blocks of both words are special.
    SpecialLong,
    /// A unique-alignment core extended by one block.
    PopularExtension,
    /// Shortest witness found by comparing subword sets.
    Exhaustive,
    /// Shortest witness used because every candidate family failed.
    Fallback,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::LetterCounts => "letter-counts",
            Strategy::BlockCount => "block-count",
            Strategy::LongestBlock => "longest-block",
            Strategy::IrregularLong => "irregular-long",
            Strategy::PeriodicLong => "periodic-long",
            Strategy::FewLong => "few-long",
            Strategy::SpecialLong => "special-long",
            Strategy::PopularExtension => "popular-extension",
            Strategy::Exhaustive => "exhaustive",
            Strategy::Fallback => "fallback",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A word that is a subword of exactly one of `u` and `v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistinguishResult {
    pub u: CyclicWord,
    pub v: CyclicWord,
    pub witness: CyclicWord,
    pub contained_in: Side,
    pub length: usize,
    /// `⌊3n/4⌋ + 4`.
    pub bound: usize,
    pub in_u: bool,
    pub in_v: bool,
    pub within_bound: bool,
    pub strategy: Strategy,
}

impl DistinguishResult {
    /// Checks `witness` against both words; `None` unless it lies in exactly one.
    pub fn check(
        u: &CyclicWord,
        v: &CyclicWord,
        witness: CyclicWord,
        strategy: Strategy,
    ) -> Option<DistinguishResult> {
        let in_u = is_subword(&witness, u);
        let in_v = is_subword(&witness, v);
        if in_u == in_v {
            return None;
        }
        let bound = length_bound(u.len());
        Some(DistinguishResult {
            u: *u,
            v: *v,
            witness,
            contained_in: if in_u { Side::U } else { Side::V },
            length: witness.len(),
            bound,
            in_u,
            in_v,
            within_bound: witness.len() <= bound,
            strategy,
        })
    }

    /// The witness lies in exactly one word and respects the bound.
    pub fn verified(&self) -> bool {
        self.in_u != self.in_v && self.within_bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Constructive,
    Brute,
}

/// One of the symmetries preserving containment, applied to both words.
#[derive(Debug, Clone, Copy)]
struct Frame {
    complement: bool,
    reverse: bool,
    swap: bool,
}

impl Frame {
    fn all() -> impl Iterator<Item = Frame> {
        (0..8).map(|b| Frame {
            complement: b & 1 != 0,
            reverse: b & 2 != 0,
            swap: b & 4 != 0,
        })
    }

    fn apply(self, w: CyclicWord) -> CyclicWord {
        let w = if self.complement { w.complement() } else { w };
        if self.reverse {
            w.reverse()
        } else {
            w
        }
    }
}

/// Collects checked candidates and keeps the shortest, then least.
struct Pool<'a> {
    u: &'a CyclicWord,
    v: &'a CyclicWord,
    bound: usize,
    best: Option<DistinguishResult>,
}

impl Pool<'_> {
    fn offer(&mut self, w: CyclicWord, strategy: Strategy) {
        if w.len() > self.bound || w.is_empty() {
            return;
        }
        if self.best.as_ref().is_some_and(|b| b.witness <= w) {
            return;
        }
        if let Some(r) = DistinguishResult::check(self.u, self.v, w, strategy) {
            self.best = Some(r);
        }
    }
}

/// Both words seen through one frame, with the first one in the role of the
/// word whose subword is built.
struct View {
    a: CyclicWord,
    b: CyclicWord,
    pa: BlockProfile,
    pb: BlockProfile,
}

fn word(letters: &[u8]) -> Option<CyclicWord> {
    crate::words::canonicalize(letters).ok()
}

fn power(letter: u8, count: usize) -> Option<CyclicWord> {
    CyclicWord::constant(letter, count).ok()
}

/// Words separating by letter counts or block counts.
fn count_candidates(view: &View, out: &mut Vec<CyclicWord>) {
    let (pa, pb) = (&view.pa, &view.pb);
    if pa.n1 > pb.n1 {
        out.extend(power(1, pb.n1 + 1));
    }
    if pa.n0 > pb.n0 {
        out.extend(power(0, pb.n0 + 1));
    }
    if pa.l > pb.l {
        let pairs = vec![(1, 1); pb.l + 1];
        out.extend(CyclicWord::from_block_pairs(&pairs).ok());
    }
    // Every 0 with only the 1-blocks of length at least two.
    if !pa.degenerate {
        let kept: Vec<(usize, usize)> = block_pairs(&view.a)
            .into_iter()
            .map(|(o, z)| (if o >= 2 { o } else { 0 }, z))
            .collect();
        let mut letters = Vec::new();
        for (o, z) in kept {
            letters.extend(std::iter::repeat_n(1, o));
            letters.extend(std::iter::repeat_n(0, z));
        }
        out.extend(word(&letters));
    }
}

/// The least all-ones subword of `a` that `b` lacks.
fn cover_candidates(view: &View, bound: usize, out: &mut Vec<CyclicWord>) {
    if view.pa.n1 != view.pb.n1 || view.pa.degenerate || view.pb.degenerate {
        return;
    }
    let (Ok(ga), Ok(gb)) = (GapVector::of(&view.a), GapVector::of(&view.b)) else {
        return;
    };
    let cap = bound.saturating_sub(view.pa.n1);
    if let Some(g) = ones_cover(&ga.gaps, &gb.gaps, cap) {
        out.extend(CyclicWord::from_gaps(&g).ok());
    }
}

fn from_runs(runs: &[(u8, usize)]) -> Option<CyclicWord> {
    let letters: Vec<u8> = runs
        .iter()
        .flat_map(|&(c, k)| std::iter::repeat_n(c, k))
        .collect();
    word(&letters)
}

/// Words named by the case analysis, read with 0 as the majority letter of `a`.
fn named_candidates(view: &View, bound: usize, out: &mut Vec<CyclicWord>) {
    let (a, b, pa, pb) = (&view.a, &view.b, &view.pa, &view.pb);
    if pa.degenerate || pb.degenerate || pa.n1 != pb.n1 || pa.l != pb.l || pa.n1 > pa.n0 {
        return;
    }
    let (n1, l) = (pa.n1, pa.l);
    if pa.x != pb.x {
        out.extend(from_runs(&[(1, n1), (0, pa.x)]));
        out.extend(from_runs(&[(1, n1), (0, pb.x + 1)]));
        let mut runs = [(0, 1), (1, 1)].repeat(l.saturating_sub(1));
        runs.extend([(0, pb.x + 1), (1, 1)]);
        out.extend(from_runs(&runs));
        return;
    }
    let Ok(da) = derived_words(a) else { return };
    let extend = |core: CyclicWord, out: &mut Vec<CyclicWord>| {
        out.push(core);
        if let Ok(r) = extend_by_popular_idea(a, b, &core) {
            out.push(r.witness);
        }
    };
    // Unique core of the long blocks, and one 0 from every block.
    if let Ok(core) = unioccurrent_core(&da.w_long) {
        extend(core, out);
    }
    extend(da.w_zeros, out);
    // One period of periodic long blocks, the remaining 1's appended.
    let (periodic, p) = da.w_long.is_periodic();
    if periodic {
        let letters = da.w_long.letters();
        let ones = letters[..p].iter().filter(|&&c| c == 1).count();
        let mut w = letters[..p].to_vec();
        w.extend(std::iter::repeat_n(1, n1 - ones));
        if let Some(core) = word(&w) {
            extend(core, out);
        }
    }
    // Every 1 with two short-side blocks at each distance.
    let c = pa.y.max(pb.y) + 1;
    if n1 + 2 * c <= bound {
        for d in 0..=n1 / 2 {
            out.extend(from_runs(&[(0, c), (1, d), (0, c), (1, n1 - d)]));
            out.extend(from_runs(&[(0, c), (1, d), (0, 1), (1, n1 - d)]));
        }
    }
    // One 1 from every 1-block, zeros chosen to block every turn of `b`'s skeleton.
    let skeleton = |w: &CyclicWord| {
        let gaps: Vec<usize> = block_pairs(w).iter().map(|p| p.1).collect();
        gaps
    };
    let (sa, sb) = (skeleton(a), skeleton(b));
    if let Some(g) = ones_cover(&sa, &sb, bound.saturating_sub(l)) {
        out.extend(CyclicWord::from_gaps(&g).ok());
    }
}

fn dispatch(u: &CyclicWord, v: &CyclicWord) -> Strategy {
    let (pu, pv) = (BlockProfile::of(u), BlockProfile::of(v));
    if pu.n1 != pv.n1 {
        return Strategy::LetterCounts;
    }
    if pu.l != pv.l {
        return Strategy::BlockCount;
    }
    // Long blocks are read in the majority letter.
    let (u, v) = if pu.n1 > pu.n0 {
        (u.complement(), v.complement())
    } else {
        (*u, *v)
    };
    let (pu, pv) = (BlockProfile::of(&u), BlockProfile::of(&v));
    if pu.x != pv.x {
        return Strategy::LongestBlock;
    }
    let class = |w: &CyclicWord, p: &BlockProfile| {
        let long = crate::profile::derived_words(w).map(|d| d.w_long).ok();
        let special = long.is_some_and(|l| crate::special::classify_special(&l).is_special());
        let periodic = long.is_some_and(|l| l.is_periodic().0);
        (special, periodic, p.a)
    };
    let (su, qu, au) = class(&u, &pu);
    let (sv, qv, av) = class(&v, &pv);
    if (!su && !qu && au >= 3) || (!sv && !qv && av >= 3) {
        Strategy::IrregularLong
    } else if (!su && qu && au >= 3) || (!sv && qv && av >= 3) {
        Strategy::PeriodicLong
    } else if su && sv {
        Strategy::SpecialLong
    } else {
        Strategy::FewLong
    }
}

fn validate(u: &CyclicWord, v: &CyclicWord) -> Result<(), ConstructiveError> {
    if u.len() != v.len() {
        return Err(ConstructiveError::LengthMismatch(u.len(), v.len()));
    }
    if u == v {
        return Err(ConstructiveError::EqualWords);
    }
    Ok(())
}

/// A witness of length at most `⌊3n/4⌋ + 4` built from the candidate
/// families of the case the pair falls in; every symmetry of the pair is
/// tried. The shortest checked candidate wins, ties going to the least word.
/// When no candidate fits, the shortest witness is returned as `fallback`.
pub fn construct_distinguishing(
    u: &CyclicWord,
    v: &CyclicWord,
) -> Result<DistinguishResult, ConstructiveError> {
    validate(u, v)?;
    let strategy = dispatch(u, v);
    let bound = length_bound(u.len());
    let mut pool = Pool {
        u,
        v,
        bound,
        best: None,
    };
    let mut raw = Vec::new();
    for frame in Frame::all() {
        let (a, b) = if frame.swap { (*v, *u) } else { (*u, *v) };
        let (a, b) = (frame.apply(a), frame.apply(b));
        let view = View {
            a,
            b,
            pa: BlockProfile::of(&a),
            pb: BlockProfile::of(&b),
        };
        raw.clear();
        count_candidates(&view, &mut raw);
        cover_candidates(&view, bound, &mut raw);
        named_candidates(&view, bound, &mut raw);
        for &w in &raw {
            pool.offer(frame.apply(w), strategy);
        }
    }
    if let Some(best) = pool.best {
        return Ok(best);
    }
    let mut r = exhaustive(u, v, Strategy::Fallback)?;
    if !r.within_bound {
        return Err(ConstructiveError::BoundExceeded {
            u: *u,
            v: *v,
            bound,
        });
    }
    r.strategy = Strategy::Fallback;
    Ok(r)
}

fn exhaustive(
    u: &CyclicWord,
    v: &CyclicWord,
    strategy: Strategy,
) -> Result<DistinguishResult, ConstructiveError> {
    validate(u, v)?;
    let found = min_distinguishing_length(u, v).map_err(|_| ConstructiveError::EqualWords)?;
    Ok(
        DistinguishResult::check(u, v, found.witness, strategy)
            .expect("shortest witness separates"),
    )
}

/// The shortest witness, least among those of its length.
pub fn brute_distinguishing(
    u: &CyclicWord,
    v: &CyclicWord,
) -> Result<DistinguishResult, ConstructiveError> {
    exhaustive(u, v, Strategy::Exhaustive)
}

pub fn distinguish(
    u: &CyclicWord,
    v: &CyclicWord,
    mode: Mode,
) -> Result<DistinguishResult, ConstructiveError> {
    match mode {
        Mode::Constructive => construct_distinguishing(u, v),
        Mode::Brute => brute_distinguishing(u, v),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructive::lower_bound_pair;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn longest_blocks_differ() {
        // 0^3 1 0^3 1 against 0^4 1 0^2 1
        let (u, v) = (w("00010001"), w("00001001"));
        let r = construct_distinguishing(&u, &v).unwrap();
        assert!(r.verified());
        assert_eq!(r.strategy, Strategy::LongestBlock);
        assert!(r.length <= 10);
        let named = w("110000");
        assert!(is_subword(&named, &v) && !is_subword(&named, &u));
    }

    #[test]
    fn lower_bound_pair_reaches_its_minimum() {
        let p = lower_bound_pair(13).unwrap();
        let r = construct_distinguishing(&p.u, &p.v).unwrap();
        assert!(r.verified());
        assert_eq!(r.length, 11);
        assert_ne!(r.strategy, Strategy::Fallback);
    }

    #[test]
    fn equal_and_mismatched() {
        let u = w("0011");
        assert_eq!(
            construct_distinguishing(&u, &u),
            Err(ConstructiveError::EqualWords)
        );
        assert_eq!(
            construct_distinguishing(&u, &w("001")),
            Err(ConstructiveError::LengthMismatch(4, 3))
        );
    }

    #[test]
    fn count_mismatch_is_tagged() {
        let r = construct_distinguishing(&w("00011"), &w("00111")).unwrap();
        assert_eq!(r.strategy, Strategy::LetterCounts);
        assert!(r.verified());
        let r = construct_distinguishing(&w("00110011"), &w("00101011")).unwrap();
        assert!(r.verified() && r.length <= 10);
    }

    #[test]
    fn brute_is_never_longer() {
        let (u, v) = (w("0001001011"), w("0001010011"));
        let b = brute_distinguishing(&u, &v).unwrap();
        let c = construct_distinguishing(&u, &v).unwrap();
        assert_eq!(b.strategy, Strategy::Exhaustive);
        assert!(b.length <= c.length);
    }
}
