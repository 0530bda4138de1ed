//! The least subword length that separates all necklaces of a length.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{necklaces, SurveyError};
use crate::constructive::lower_bound_pair;
use crate::parallel;
use crate::subword::{level_bits, level_digest, walk_levels};
use crate::words::{CyclicWord, MAX_LEN};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub n: usize,
    pub k: usize,
    pub necklace_count: u64,
    /// Least pair, in lexicographic order, sharing every subword of length `k - 1`.
    pub witness_u: Option<CyclicWord>,
    pub witness_v: Option<CyclicWord>,
    pub seconds: f64,
}

/// Outcome of one subword length.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub k: usize,
    pub separated: bool,
    pub witness: Option<(CyclicWord, CyclicWord)>,
    /// Digests shared by two or more necklaces with equal subword sets.
    pub collision_digests: Vec<String>,
    pub seconds: f64,
}

/// Progress of one length, written after every completed level.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checkpoint {
    pub n: usize,
    pub levels: Vec<LevelRecord>,
    pub row: Option<ThresholdRow>,
}

#[derive(Debug, Clone, Default)]
pub struct ThresholdOptions<'a> {
    /// Worker count; 0 uses every available core.
    pub jobs: usize,
    pub checkpoint_dir: Option<PathBuf>,
    /// Checked between levels and inside the per-level map.
    pub cancel: Option<&'a AtomicBool>,
}

pub fn recovery_threshold(n: usize) -> Result<ThresholdRow, SurveyError> {
    recovery_threshold_with(n, &ThresholdOptions::default())
}

fn checkpoint_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("table-n{n}.json"))
}

fn load_checkpoint(dir: &Path, n: usize) -> Result<Option<Checkpoint>, SurveyError> {
    let path = checkpoint_path(dir, n);
    if !path.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&path)
        .map_err(|e| SurveyError::Checkpoint(format!("{}: {e}", path.display())))?;
    let cp: Checkpoint = serde_json::from_str(&text)
        .map_err(|e| SurveyError::Checkpoint(format!("{}: {e}", path.display())))?;
    if cp.n != n {
        return Err(SurveyError::Checkpoint(format!(
            "{} records n = {}, expected {n}",
            path.display(),
            cp.n
        )));
    }
    Ok(Some(cp))
}

fn save_checkpoint(dir: &Path, cp: &Checkpoint) -> Result<(), SurveyError> {
    let err = |e: std::io::Error| SurveyError::Checkpoint(format!("{}: {e}", dir.display()));
    std::fs::create_dir_all(dir).map_err(err)?;
    let path = checkpoint_path(dir, cp.n);
    let tmp = path.with_extension("json.tmp");
    let text = serde_json::to_string_pretty(cp).expect("checkpoint serializes");
    std::fs::write(&tmp, text).map_err(err)?;
    std::fs::rename(&tmp, &path).map_err(err)
}

/// Lengths evaluated per walk when searching upward.
const UPWARD_BATCH: usize = 3;

fn cancelled(cancel: Option<&AtomicBool>) -> bool {
    cancel.is_some_and(|c| c.load(Ordering::Relaxed))
}

/// Digests of the subword sets of every word at each length of `ks`, from a
/// single downward walk per word. `None` when cancelled.
fn level_digests(
    words: &[CyclicWord],
    ks: &[usize],
    jobs: usize,
    cancel: Option<&AtomicBool>,
) -> Option<Vec<Vec<u128>>> {
    let lowest = *ks.iter().min().expect("at least one level");
    let per_word = parallel::map(words, jobs, |w| {
        let mut out = vec![0u128; ks.len()];
        if cancelled(cancel) {
            return out;
        }
        walk_levels(w, lowest, |len, level| {
            if let Some(j) = ks.iter().position(|&k| k == len) {
                out[j] = level_digest(len, level);
            }
            true
        });
        out
    });
    if cancelled(cancel) {
        return None;
    }
    Some(
        (0..ks.len())
            .map(|j| per_word.iter().map(|d| d[j]).collect())
            .collect(),
    )
}

/// Groups words by digest and confirms shared digests with full set
/// comparison. Buckets are checked in order of their least index pair, and
/// checking stops once no later bucket can hold a smaller equal pair.
fn resolve_level(words: &[CyclicWord], k: usize, digests: &[u128], seconds: f64) -> LevelRecord {
    let mut order: Vec<usize> = (0..words.len()).collect();
    order.sort_unstable_by_key(|&i| (digests[i], i));
    let mut buckets: Vec<&[usize]> = order
        .chunk_by(|&a, &b| digests[a] == digests[b])
        .filter(|b| b.len() >= 2)
        .collect();
    buckets.sort_unstable_by_key(|b| (b[0], b[1]));
    let mut witness: Option<(usize, usize)> = None;
    for bucket in &buckets {
        if witness.is_some_and(|w| (bucket[0], bucket[1]) >= w) {
            break;
        }
        let mut sets: Vec<(Vec<u64>, usize)> = bucket
            .iter()
            .map(|&i| (level_bits(&words[i], k), i))
            .collect();
        sets.sort_unstable();
        for group in sets.chunk_by(|a, b| a.0 == b.0) {
            if group.len() >= 2 {
                // Indices follow word order, so the first two members are the least pair.
                let pair = (group[0].1, group[1].1);
                if witness.is_none_or(|w| pair < w) {
                    witness = Some(pair);
                }
            }
        }
    }
    let mut collision_digests: Vec<String> = buckets
        .iter()
        .map(|b| format!("{:032x}", digests[b[0]]))
        .collect();
    collision_digests.sort_unstable();
    LevelRecord {
        k,
        separated: witness.is_none(),
        witness: witness.map(|(a, b)| (words[a], words[b])),
        collision_digests,
        seconds,
    }
}

/// Least `k` such that the length-`k` subword sets of all necklaces of
/// length `n` are pairwise distinct.
///
/// Sets of one length determine all shorter ones, so the search only looks
/// at exact lengths. It starts just below the lower-bound pair's distance for
/// `n >= 11` and at 1 otherwise, moving up until a level separates, or down
/// while the level below still separates.
pub fn recovery_threshold_with(
    n: usize,
    opts: &ThresholdOptions<'_>,
) -> Result<ThresholdRow, SurveyError> {
    if n == 0 || n > MAX_LEN {
        return Err(SurveyError::OverMaxLength(n));
    }
    let dir = opts.checkpoint_dir.as_deref();
    let mut levels: BTreeMap<usize, LevelRecord> = BTreeMap::new();
    if let Some(dir) = dir {
        if let Some(cp) = load_checkpoint(dir, n)? {
            if let Some(row) = cp.row {
                return Ok(row);
            }
            levels.extend(cp.levels.into_iter().map(|l| (l.k, l)));
        }
    }
    let words: Vec<CyclicWord> = necklaces(n)?.collect();
    // Levels are evaluated in batches sharing one walk per word.
    let level = |k: usize,
                 batch: usize,
                 levels: &mut BTreeMap<usize, LevelRecord>|
     -> Result<bool, SurveyError> {
        if let Some(rec) = levels.get(&k) {
            return Ok(rec.separated);
        }
        let interrupted = |levels: &BTreeMap<usize, LevelRecord>| SurveyError::Interrupted {
            n,
            levels_done: levels.len(),
        };
        if cancelled(opts.cancel) {
            return Err(interrupted(levels));
        }
        let ks: Vec<usize> = (k..=(k + batch - 1).min(n))
            .filter(|j| !levels.contains_key(j))
            .collect();
        let started = Instant::now();
        let digests = level_digests(&words, &ks, opts.jobs, opts.cancel)
            .ok_or_else(|| interrupted(levels))?;
        let share = started.elapsed().as_secs_f64() / ks.len() as f64;
        for (j, &kk) in ks.iter().enumerate() {
            let begun = Instant::now();
            let mut rec = resolve_level(&words, kk, &digests[j], 0.0);
            rec.seconds = share + begun.elapsed().as_secs_f64();
            levels.insert(kk, rec);
        }
        if let Some(dir) = dir {
            save_checkpoint(
                dir,
                &Checkpoint {
                    n,
                    levels: levels.values().cloned().collect(),
                    row: None,
                },
            )?;
        }
        Ok(levels[&k].separated)
    };

    let start = match lower_bound_pair(n) {
        Ok(p) => p.claimed_min - 1,
        Err(_) => 1,
    };
    let mut k = start;
    if level(k, UPWARD_BATCH, &mut levels)? {
        while k > 1 && level(k - 1, 1, &mut levels)? {
            k -= 1;
        }
    } else {
        while !level(k, UPWARD_BATCH, &mut levels)? {
            k += 1;
        }
    }
    let witness = if k > 1 {
        levels[&(k - 1)].witness
    } else {
        None
    };
    let row = ThresholdRow {
        n,
        k,
        necklace_count: words.len() as u64,
        witness_u: witness.map(|w| w.0),
        witness_v: witness.map(|w| w.1),
        // microsecond resolution keeps printed values free of float noise
        seconds: (levels.values().map(|l| l.seconds).sum::<f64>() * 1e6).round() / 1e6,
    };
    if let Some(dir) = dir {
        save_checkpoint(
            dir,
            &Checkpoint {
                n,
                levels: levels.values().cloned().collect(),
                row: Some(row.clone()),
            },
        )?;
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_table() {
        let expect = [1, 1, 2, 4, 4, 6, 6, 7, 8, 8];
        for (i, &k) in expect.iter().enumerate() {
            let row = recovery_threshold(i + 1).unwrap();
            assert_eq!(row.k, k, "n = {}", i + 1);
        }
    }

    #[test]
    fn witness_shares_level_below() {
        let row = recovery_threshold(8).unwrap();
        let (u, v) = (row.witness_u.unwrap(), row.witness_v.unwrap());
        assert!(u < v);
        assert_eq!(
            crate::subword::level_bits(&u, row.k - 1),
            crate::subword::level_bits(&v, row.k - 1)
        );
        assert_ne!(level_bits(&u, row.k), level_bits(&v, row.k));
    }

    #[test]
    fn cancel_reports_interrupt() {
        let flag = AtomicBool::new(true);
        let opts = ThresholdOptions {
            cancel: Some(&flag),
            ..Default::default()
        };
        assert!(matches!(
            recovery_threshold_with(6, &opts),
            Err(SurveyError::Interrupted { n: 6, .. })
        ));
    }
}
