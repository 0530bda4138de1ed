//! Least extensions of the all-ones word that block every turn of another word.
//!
//! A word keeping all `r` ones of a host is a gap vector `g` dominated by a
//! turn of the host. It is a subword of another word with `r` ones exactly
//! when some turn `j` of that word has `g_i <= other_{i+j}` for all `i`, so a
//! separating `g` must exceed `other_{i+j}` at some `i` for every `j`.

/// Nodes visited before the search returns its best vector so far.
const NODE_LIMIT: usize = 200_000;

struct Search<'a> {
    host: &'a [usize],
    other: &'a [usize],
    best: Option<(usize, Vec<usize>)>,
    cap: usize,
    nodes: usize,
}

impl Search<'_> {
    fn alive(&self, g: &[usize]) -> u64 {
        let r = g.len();
        let mut mask = 0u64;
        for j in 0..r {
            if (0..r).all(|i| g[i] <= self.other[(i + j) % r]) {
                mask |= 1 << j;
            }
        }
        mask
    }

    fn run(&mut self, g: &mut Vec<usize>, total: usize) {
        self.nodes += 1;
        if self.nodes > NODE_LIMIT {
            return;
        }
        let limit = self.best.as_ref().map_or(self.cap + 1, |b| b.0);
        let alive = self.alive(g);
        if alive == 0 {
            if total < limit {
                self.best = Some((total, g.clone()));
            }
            return;
        }
        if total + 1 >= limit {
            return;
        }
        let r = g.len();
        // Branch on the surviving turn with the fewest ways to block it.
        let options = |j: usize| -> Vec<(usize, usize)> {
            (0..r)
                .filter_map(|i| {
                    let need = self.other[(i + j) % r] + 1;
                    (need <= self.host[i]).then_some((i, need))
                })
                .collect()
        };
        let j = (0..r)
            .filter(|&j| alive >> j & 1 == 1)
            .min_by_key(|&j| options(j).len())
            .expect("some turn survives");
        let mut opts = options(j);
        opts.sort_by_key(|&(i, need)| need - g[i].min(need));
        for (i, need) in opts {
            let old = g[i];
            g[i] = need;
            self.run(g, total - old + need);
            g[i] = old;
        }
    }
}

/// Gap vector of least total under `host` (read at turn 0) that no turn of
/// `other` dominates, with total at most `cap`. Both inputs describe words
/// with the same number of ones, at most 64.
pub(crate) fn ones_cover(host: &[usize], other: &[usize], cap: usize) -> Option<Vec<usize>> {
    let r = host.len();
    if r == 0 || r != other.len() || r > 64 {
        return None;
    }
    let mut s = Search {
        host,
        other,
        best: None,
        cap,
        nodes: 0,
    };
    let mut g = vec![0; r];
    s.run(&mut g, 0);
    s.best.map(|b| b.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alignment::GapVector;
    use crate::subword::is_subword;
    use crate::words::CyclicWord;

    #[test]
    fn separates_lower_bound_pair() {
        // gaps after each 1 of 0 1 0^2 1 0^3 1 0^3 1 and its partner
        let u = [2, 3, 3, 1];
        let v = [1, 3, 3, 2];
        let g = ones_cover(&u, &v, 64).unwrap();
        assert_eq!(g.iter().sum::<usize>(), 7);
        let w = CyclicWord::from_gaps(&g).unwrap();
        let uw = GapVector::new(u.to_vec()).to_word();
        let vw = GapVector::new(v.to_vec()).to_word();
        assert!(is_subword(&w, &uw) && !is_subword(&w, &vw));
    }

    #[test]
    fn impossible_when_dominated() {
        assert_eq!(ones_cover(&[1, 0], &[0, 2], 64), None);
        assert_eq!(ones_cover(&[2, 3], &[3, 2], 64), None);
    }
}
