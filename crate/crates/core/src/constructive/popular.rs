//! Extending a subword that sits in `u` under a single turn into a witness.

use super::distinguish::{DistinguishResult, Strategy};
use super::{length_bound, ConstructiveError};
use crate::alignment::{embedding_turns, GapVector};
use crate::profile::BlockProfile;
use crate::subword::is_subword;
use crate::words::CyclicWord;

/// Turns `core`, a subword of `u` with every 1 that only one turn of `u`
/// carries onto an equal occurrence, into a word in exactly one of `u`, `v`.
///
/// If `v` lacks `core` it is the witness. Otherwise, aligning `v`'s
/// occurrence with `u`'s, some gap of `u` is shorter than the aligned gap
/// `s' > s` of `v`; raising that gap of `core` to `s + 1` gives a subword of
/// `v` that `u` lacks. The smallest such `s` is used.
pub fn extend_by_popular_idea(
    u: &CyclicWord,
    v: &CyclicWord,
    core: &CyclicWord,
) -> Result<DistinguishResult, ConstructiveError> {
    let pre = |msg: &str| ConstructiveError::PreconditionViolated(msg.to_string());
    if u.len() != v.len() {
        return Err(ConstructiveError::LengthMismatch(u.len(), v.len()));
    }
    if u == v {
        return Err(pre("the words are equal"));
    }
    let (pu, pv) = (BlockProfile::of(u), BlockProfile::of(v));
    if pu.degenerate || pv.degenerate {
        return Err(pre("both words need 0's and 1's"));
    }
    if pu.n0 != pv.n0 || pu.n1 != pv.n1 || pu.x != pv.x {
        return Err(pre("letter counts and longest 0-blocks must agree"));
    }
    if core.count_ones() != pu.n1 || !is_subword(core, u) {
        return Err(pre("core must be a subword of u with every 1"));
    }
    if core.len() + pu.y + 1 > length_bound(u.len()) {
        return Err(pre("core too long to extend within the bound"));
    }
    let gc = GapVector::of(core).map_err(|e| pre(&e.to_string()))?;
    let gu = GapVector::of(u).map_err(|e| pre(&e.to_string()))?;
    let gv = GapVector::of(v).map_err(|e| pre(&e.to_string()))?;
    let ju = match embedding_turns(&gc, &gu)[..] {
        [j] => j,
        _ => return Err(ConstructiveError::AlignmentNotUnique),
    };
    if let Some(r) = DistinguishResult::check(u, v, *core, Strategy::PopularExtension) {
        return Ok(r);
    }
    let r = gc.ones();
    let mut best: Option<CyclicWord> = None;
    for jv in embedding_turns(&gc, &gv) {
        let raise = (0..r)
            .filter(|&i| gu.gaps[(i + ju) % r] < gv.gaps[(i + jv) % r])
            .min_by_key(|&i| gu.gaps[(i + ju) % r]);
        let Some(i) = raise else { continue };
        let mut gaps = gc.gaps.clone();
        gaps[i] = gu.gaps[(i + ju) % r] + 1;
        let w = GapVector::new(gaps).to_word();
        if best.is_none_or(|b| w < b) {
            best = Some(w);
        }
    }
    let w = best.ok_or_else(|| {
        ConstructiveError::ConstructionUnverified(format!("no gap of {u} is shorter than in {v}"))
    })?;
    DistinguishResult::check(u, v, w, Strategy::PopularExtension).ok_or_else(|| {
        ConstructiveError::ConstructionUnverified(format!("{w} does not separate {u} and {v}"))
    })
}
