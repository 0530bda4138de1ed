//! Pairs of words of length `4m+3 ..= 4m+6` that share every subword shorter
//! than roughly `3n/4`.

use serde::Serialize;

use super::ConstructiveError;
use crate::subword::is_subword;
use crate::survey::min_distinguishing_length;
use crate::words::CyclicWord;

/// Which of the four length classes `4m+3`, `4m+4`, `4m+5`, `4m+6` a pair belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Residue {
    R3,
    R4,
    R5,
    R6,
}

impl Residue {
    pub const ALL: [Residue; 4] = [Residue::R3, Residue::R4, Residue::R5, Residue::R6];

    /// The offset `r` in `n = 4m + r`.
    pub fn offset(self) -> usize {
        match self {
            Residue::R3 => 3,
            Residue::R4 => 4,
            Residue::R5 => 5,
            Residue::R6 => 6,
        }
    }

    pub fn from_offset(r: usize) -> Option<Residue> {
        Residue::ALL.into_iter().find(|x| x.offset() == r)
    }

    pub fn length(self, m: usize) -> usize {
        4 * m + self.offset()
    }

    fn claimed_min(self, m: usize) -> usize {
        match self {
            Residue::R3 => 3 * m + 2,
            Residue::R4 | Residue::R6 => 3 * m + 3,
            Residue::R5 => 3 * m + 5,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundPair {
    pub m: usize,
    pub residue: Residue,
    pub n: usize,
    pub u: CyclicWord,
    pub v: CyclicWord,
    pub claimed_min: usize,
}

/// `0^{z_1} 1 0^{z_2} 1 ...`
fn zero_blocks_then_one(zeros: &[usize]) -> CyclicWord {
    let mut letters = Vec::new();
    for &z in zeros {
        letters.extend(std::iter::repeat_n(0, z));
        letters.push(1);
    }
    crate::words::canonicalize(&letters).expect("pair words fit in 64 letters")
}

/// The pair for length `n`, defined for `n >= 11`.
pub fn lower_bound_pair(n: usize) -> Result<LowerBoundPair, ConstructiveError> {
    if !(11..=crate::words::MAX_LEN).contains(&n) {
        return Err(ConstructiveError::UnsupportedLength(n));
    }
    let residue = Residue::from_offset((n - 3) % 4 + 3).expect("offset in 3..=6");
    let m = (n - residue.offset()) / 4;
    pair_for(m, residue)
}

fn pair_for(m: usize, residue: Residue) -> Result<LowerBoundPair, ConstructiveError> {
    if m < 2 {
        return Err(ConstructiveError::UnsupportedLength(residue.length(m)));
    }
    let (u, v) = match residue {
        Residue::R3 => ([m - 2, m - 1, m + 1, m + 1], [m - 1, m - 2, m + 1, m + 1]),
        Residue::R4 => ([m - 2, m, m + 1, m + 1], [m, m - 2, m + 1, m + 1]),
        Residue::R5 => ([m - 1, m, m + 1, m + 1], [m, m - 1, m + 1, m + 1]),
        Residue::R6 => ([m - 2, m, m + 2, m + 2], [m, m - 2, m + 2, m + 2]),
    };
    let n = residue.length(m);
    if n > crate::words::MAX_LEN {
        return Err(ConstructiveError::UnsupportedLength(n));
    }
    Ok(LowerBoundPair {
        m,
        residue,
        n,
        u: zero_blocks_then_one(&u),
        v: zero_blocks_then_one(&v),
        claimed_min: residue.claimed_min(m),
    })
}

/// Pair for an explicit `m` and residue class.
pub fn lower_bound_pair_for(
    m: usize,
    residue: Residue,
) -> Result<LowerBoundPair, ConstructiveError> {
    pair_for(m, residue)
}

/// The explicit short subword of `u` that `v` lacks.
pub fn proof_witness(p: &LowerBoundPair) -> CyclicWord {
    let m = p.m;
    let gaps = match p.residue {
        Residue::R3 => vec![m - 1, m - 1, m, 0],
        Residue::R4 | Residue::R6 => vec![m - 1, m - 1, m + 1, 0],
        Residue::R5 => vec![2 * m + 1, m + 1, 0],
    };
    CyclicWord::from_gaps(&gaps).expect("witness fits")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LowerBoundReport {
    pub m: usize,
    pub residue: usize,
    pub n: usize,
    pub u: CyclicWord,
    pub v: CyclicWord,
    pub claimed_min: usize,
    pub computed_min: usize,
    pub shortest_witness: CyclicWord,
    pub proof_witness: CyclicWord,
    pub proof_witness_in_u: bool,
    pub proof_witness_in_v: bool,
}

/// Checks the claimed minimum against an exact computation, and the explicit
/// witness against the containment oracle.
pub fn verify_lower_bound(p: &LowerBoundPair) -> Result<LowerBoundReport, ConstructiveError> {
    let found = min_distinguishing_length(&p.u, &p.v)
        .map_err(|e| ConstructiveError::ClaimViolated(format!("pair is not distinct: {e}")))?;
    let witness = proof_witness(p);
    let report = LowerBoundReport {
        m: p.m,
        residue: p.residue.offset(),
        n: p.n,
        u: p.u,
        v: p.v,
        claimed_min: p.claimed_min,
        computed_min: found.length,
        shortest_witness: found.witness,
        proof_witness: witness,
        proof_witness_in_u: is_subword(&witness, &p.u),
        proof_witness_in_v: is_subword(&witness, &p.v),
    };
    if report.computed_min != report.claimed_min {
        return Err(ConstructiveError::ClaimViolated(format!(
            "n = {}: shortest distinguishing length {} differs from the claimed {}",
            p.n, report.computed_min, report.claimed_min
        )));
    }
    if !report.proof_witness_in_u || report.proof_witness_in_v || witness.len() != p.claimed_min {
        return Err(ConstructiveError::ClaimViolated(format!(
            "n = {}: witness {} does not separate the pair",
            p.n, witness
        )));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> CyclicWord {
        s.parse().unwrap()
    }

    #[test]
    fn thirteen() {
        let p = lower_bound_pair(13).unwrap();
        assert_eq!((p.m, p.residue, p.claimed_min), (2, Residue::R5, 11));
        assert_eq!(p.u, w("0100100010001"));
        assert_eq!(p.v, w("0010100010001"));
        assert_eq!(proof_witness(&p), w("10000010001"));
    }

    #[test]
    fn eleven_and_fourteen() {
        let p = lower_bound_pair(11).unwrap();
        assert_eq!((p.residue, p.claimed_min), (Residue::R3, 8));
        assert_eq!(p.u, w("10100010001"));
        assert_eq!(proof_witness(&p), w("10101001"));
        let p = lower_bound_pair(14).unwrap();
        assert_eq!((p.residue, p.claimed_min), (Residue::R6, 9));
        assert_eq!(p.u.len(), 14);
        assert!(lower_bound_pair(10).is_err());
    }

    #[test]
    fn verified_small_m() {
        for n in 11..=15 {
            let p = lower_bound_pair(n).unwrap();
            let r = verify_lower_bound(&p).unwrap();
            assert_eq!(r.computed_min, p.claimed_min, "n = {n}");
        }
    }
}
