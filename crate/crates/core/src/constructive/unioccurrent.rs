//! Subwords of `0^x 1^{α_1} ... 0^x 1^{α_l}` keeping every 1 and few blocks
//! `0^x` that occur exactly once.

use super::ConstructiveError;
use crate::profile::block_pairs;
use crate::special::classify_special;
use crate::subword::occurrences;
use crate::words::{canonicalize, CyclicWord};

/// Block lengths rotated so a chosen run comes first, with the zeros kept.
/// Zero `i` precedes block `i`.
struct Plan {
    blocks: Vec<usize>,
    keep: Vec<bool>,
    mirrored: bool,
}

/// Longest cyclic run of blocks equal to `len`, as `(start, run length)`.
/// The first such run wins ties. Requires some block to differ from `len`.
fn longest_run(blocks: &[usize], len: usize) -> (usize, usize) {
    let l = blocks.len();
    let mut best = (0, 0);
    for start in 0..l {
        if blocks[start] != len || blocks[(start + l - 1) % l] == len {
            continue;
        }
        let run = (0..l)
            .take_while(|&d| blocks[(start + d) % l] == len)
            .count();
        if run > best.1 {
            best = (start, run);
        }
    }
    best
}

fn rotated(blocks: &[usize], start: usize) -> Vec<usize> {
    let mut out = blocks.to_vec();
    out.rotate_left(start);
    out
}

/// Keep the zeros before a maximal run of `len`-blocks and the zero after
/// it, then add zeros until no nontrivial turn keeps an equal occurrence.
fn seed_and_kill(blocks: &[usize], len: usize) -> Plan {
    let (start, run) = longest_run(blocks, len);
    let blocks = rotated(blocks, start);
    let mut keep = vec![false; blocks.len()];
    keep[..=run].iter_mut().for_each(|k| *k = true);
    kill_turns(&blocks, &mut keep);
    Plan {
        blocks,
        keep,
        mirrored: false,
    }
}

/// Adds kept zeros until the identity is the only turn of the ones under
/// which every kept zero lands on a zero.
fn kill_turns(blocks: &[usize], keep: &mut [bool]) {
    let l = blocks.len();
    // host[p] is 1 when a zero follows the p-th one; owner[p] is that zero.
    let mut host = Vec::new();
    let mut owner = Vec::new();
    for (i, &b) in blocks.iter().enumerate() {
        for q in 0..b {
            let last = q + 1 == b;
            host.push(last);
            owner.push(if last { Some((i + 1) % l) } else { None });
        }
    }
    let n1 = host.len();
    let gap = |keep: &[bool], p: usize| owner[p].is_some_and(|z| keep[z]);
    loop {
        let bad = (1..n1).find(|&j| (0..n1).all(|p| !gap(keep, p) || host[(p + j) % n1]));
        let Some(j) = bad else { return };
        // The word is not periodic, so some zero meets an empty place.
        let p = (0..n1)
            .find(|&p| host[p] && !host[(p + j) % n1])
            .expect("non-periodic host has a zero meeting an empty place");
        keep[owner[p].expect("host[p] marks a zero")] = true;
    }
}

/// Zeros `1..=r`, every other zero up to the end of the run, and the zero
/// after it, when the first long block holds at least three runs' worth.
fn long_first_block(blocks: Vec<usize>, run: usize, mirrored: bool) -> Plan {
    let r = blocks.len() - run;
    let mut keep = vec![false; blocks.len()];
    for (z, k) in keep.iter_mut().enumerate() {
        // zero z is the (z+1)-th zero counted from one
        let idx = z + 1;
        *k = idx <= r || (idx <= run && (idx - r).is_multiple_of(2)) || idx == run + 1;
    }
    Plan {
        blocks,
        keep,
        mirrored,
    }
}

/// Both long blocks next to the run hold exactly two units.
fn doubled_ends(blocks: Vec<usize>, run: usize, unit: usize) -> Option<Plan> {
    let betas: Vec<usize> = blocks[run..].iter().map(|&b| b / unit).collect();
    let r = betas.len();
    let b = 1 + betas[1..].iter().take_while(|&&x| x == 1).count();
    let rest = &betas[b..];
    let mut a = 1;
    let mut cur = 0;
    for &x in rest {
        cur = if x == 1 { cur + 1 } else { 0 };
        a = a.max(cur + 1);
    }
    if b >= r || a < b {
        return None;
    }
    let s = run;
    let head = a + 1;
    if s < head {
        return None;
    }
    let period = 2 * b + 2;
    let t = (s - head) / period;
    let rem = (s - head) % period;
    let mut keep = vec![false; blocks.len()];
    let mut z = 0;
    let mut take = |keep: &mut Vec<bool>, count: usize, kept: bool| {
        for _ in 0..count {
            keep[z] = kept;
            z += 1;
        }
    };
    take(&mut keep, head, true);
    for _ in 0..t {
        take(&mut keep, b + 1, false);
        take(&mut keep, b + 1, true);
    }
    if rem <= b {
        take(&mut keep, rem, true);
    } else {
        take(&mut keep, rem - b, false);
        take(&mut keep, b, true);
    }
    keep[s] = true;
    Some(Plan {
        blocks,
        keep,
        mirrored: false,
    })
}

fn mirror_run_first(blocks: &[usize], run: usize) -> Vec<usize> {
    let mut out = blocks[..run].to_vec();
    out.extend(blocks[run..].iter().rev());
    out
}

fn plan(alpha: &[usize]) -> Option<Plan> {
    let l = alpha.len();
    let unit = *alpha.iter().min()?;
    let (start, run) = longest_run(alpha, unit);
    if 2 * run <= l {
        return Some(seed_and_kill(alpha, unit));
    }
    if let Some(odd) = alpha.iter().copied().filter(|b| b % unit != 0).min() {
        return Some(seed_and_kill(alpha, odd));
    }
    let blocks = rotated(alpha, start);
    let first = blocks[run] / unit;
    let last = blocks[l - 1] / unit;
    if first >= 3 {
        return Some(long_first_block(blocks, run, false));
    }
    if last >= 3 {
        return Some(long_first_block(mirror_run_first(&blocks, run), run, true));
    }
    if let Some(p) = doubled_ends(blocks.clone(), run, unit) {
        return Some(p);
    }
    let mut p = doubled_ends(mirror_run_first(&blocks, run), run, unit)?;
    p.mirrored = true;
    Some(p)
}

fn lift(p: &Plan, x: usize) -> CyclicWord {
    let mut letters = Vec::new();
    for (i, &b) in p.blocks.iter().enumerate() {
        if p.keep[i] {
            letters.extend(std::iter::repeat_n(0, x));
        }
        letters.extend(std::iter::repeat_n(1, b));
    }
    let w = canonicalize(&letters).expect("subword of a valid word");
    if p.mirrored {
        w.reverse()
    } else {
        w
    }
}

/// Largest number of `0^x` blocks a core may keep: `⌈(l+2)/2⌉`.
pub fn core_block_limit(l: usize) -> usize {
    (l + 3) / 2
}

/// A unioccurrent subword of `u_long` with every 1 and at most
/// `⌈(l+2)/2⌉` blocks `0^x`, where `u_long` has only 0-blocks of one
/// length `x`, at least two of them, and is neither special nor periodic.
pub fn unioccurrent_core(u_long: &CyclicWord) -> Result<CyclicWord, ConstructiveError> {
    let na = |msg: &str| ConstructiveError::NotApplicable(format!("{u_long}: {msg}"));
    let pairs = block_pairs(u_long);
    if pairs.len() < 2 {
        return Err(na("needs at least two 0-blocks"));
    }
    let x = pairs[0].1;
    if pairs.iter().any(|p| p.1 != x) {
        return Err(na("0-blocks differ in length"));
    }
    if classify_special(u_long).is_special() {
        return Err(na("word is special"));
    }
    if u_long.is_periodic().0 {
        return Err(na("word is periodic"));
    }
    let alpha: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let unverified =
        |msg: String| ConstructiveError::ConstructionUnverified(format!("{u_long}: {msg}"));
    let p = plan(&alpha).ok_or_else(|| unverified("no case applies".into()))?;
    let core = lift(&p, x);
    let kept = p.keep.iter().filter(|&&k| k).count();
    if kept > core_block_limit(alpha.len()) {
        return Err(unverified(format!("core {core} keeps {kept} blocks")));
    }
    let occ = occurrences(&core, u_long);
    if occ != 1 {
        return Err(unverified(format!("core {core} occurs {occ} times")));
    }
    Ok(core)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::block_pairs;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    fn zero_blocks(c: &CyclicWord) -> usize {
        block_pairs(c).len()
    }

    #[test]
    fn small_gap_example() {
        // 0^2 1 0^2 1 0^2 1^3
        let u = w("00100100111");
        let u = canonicalize(&u.letters()).unwrap();
        let core = unioccurrent_core(&u).unwrap();
        assert_eq!(occurrences(&core, &u), 1);
        assert_eq!(core.count_ones(), 5);
        assert!(zero_blocks(&core) <= 3);
    }

    #[test]
    fn long_first_block_keeps_marked_zeros() {
        // (01)^7 0 1^3 01 01^2 with zeros 1,2,3,5,7,8 kept
        let u = w("01010101010101011101011");
        let core = unioccurrent_core(&u).unwrap();
        assert_eq!(core, w("0101011011010111111"));
        assert_eq!(occurrences(&core, &u), 1);
    }

    #[test]
    fn doubled_ends_example() {
        // (01)^7 0 1^2 0 1^2 01 0 1^2 with zeros 1,2,3,6,7,8 kept
        let u = w("0101010101010101101101011");
        let u = canonicalize(&u.letters()).unwrap();
        let core = unioccurrent_core(&u).unwrap();
        assert_eq!(occurrences(&core, &u), 1);
        assert_eq!(core, w("01010111010101111111"));
    }

    #[test]
    fn rejects_periodic_and_special() {
        assert!(matches!(
            unioccurrent_core(&w("001001001")),
            Err(ConstructiveError::NotApplicable(_))
        ));
        assert!(matches!(
            unioccurrent_core(&w("0101011")),
            Err(ConstructiveError::NotApplicable(_))
        ));
        assert!(matches!(
            unioccurrent_core(&w("0010111")),
            Err(ConstructiveError::NotApplicable(_))
        ));
    }
}
