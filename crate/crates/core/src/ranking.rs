//! Ways to rank an instance: lexicographic, seeded random, and the
//! exhaustive optimum for small instances.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rng::DetRng;
use crate::visibility::{Arrangement, Instance, Prefilter, Ranking};

pub const DEFAULT_CAP: usize = 9;

/// Exhaustive search tabulates every (pair, blocker set) combination, which
/// needs `2^n` entries per pair; beyond this size it is refused whatever the
/// cap says.
pub const MAX_EXHAUSTIVE: usize = 12;

/// Sort by center, x first then y; equal centers keep input order.
pub fn lex_ranking(inst: &Instance) -> Ranking {
    let mut order: Vec<usize> = (0..inst.len()).collect();
    order.sort_by(|&a, &b| {
        let (ca, cb) = (inst.center(a), inst.center(b));
        ca.x.cmp(&cb.x).then_with(|| ca.y.cmp(&cb.y)).then(a.cmp(&b))
    });
    Ranking::new(order).expect("sorted indices form a permutation")
}

/// Fisher–Yates shuffle of `0..n` driven by [`DetRng`] seeded with `seed`.
pub fn random_ranking(n: usize, seed: u64) -> Ranking {
    let mut order: Vec<usize> = (0..n).collect();
    DetRng::new(seed).shuffle(&mut order);
    Ranking::new(order).expect("shuffle preserves the permutation")
}

/// Visibility of every pair under every possible set of squares between
/// them, indexed by pair and blocker bitmask.
struct SightTable {
    n: usize,
    pair_index: Vec<usize>,
    sees: Vec<Vec<bool>>,
}

impl SightTable {
    fn new(arr: &Arrangement) -> Self {
        let n = arr.len();
        let mut pair_index = vec![usize::MAX; n * n];
        let mut pairs = Vec::new();
        for i in 0..n {
            for k in i + 1..n {
                pair_index[i * n + k] = pairs.len();
                pair_index[k * n + i] = pairs.len();
                pairs.push((i, k));
            }
        }
        let sees = pairs
            .par_iter()
            .map(|&(i, k)| {
                let mut row = vec![false; 1 << n];
                if !arr.bodies_meet(i, k) {
                    return row;
                }
                let pair_bits = (1usize << i) | (1usize << k);
                let mut blockers = Vec::with_capacity(n);
                for (mask, slot) in row.iter_mut().enumerate() {
                    if mask & pair_bits != 0 {
                        continue;
                    }
                    blockers.clear();
                    blockers.extend((0..n).filter(|j| mask >> j & 1 == 1));
                    *slot = !arr.obs1_blocked(i, k, &blockers) && arr.sees(i, k, &blockers);
                }
                row
            })
            .collect();
        Self { n, pair_index, sees }
    }

    /// Edge count of `order`, or `None` as soon as it exceeds `limit`.
    fn edge_count(&self, order: &[usize], limit: usize) -> Option<usize> {
        let mut count = 0;
        for (s, &i) in order.iter().enumerate() {
            let mut mask = 0usize;
            for &k in &order[s + 1..] {
                if self.sees[self.pair_index[i * self.n + k]][mask] {
                    count += 1;
                    if count > limit {
                        return None;
                    }
                }
                mask |= 1 << k;
            }
        }
        Some(count)
    }
}

/// Rearranges `items` into the next permutation in lexicographic order;
/// returns `false` (leaving `items` sorted) after the last one.
fn next_permutation(items: &mut [usize]) -> bool {
    let Some(pivot) = items.windows(2).rposition(|w| w[0] < w[1]) else {
        items.reverse();
        return false;
    };
    let successor = items.iter().rposition(|&v| v > items[pivot]).expect("pivot has a successor");
    items.swap(pivot, successor);
    items[pivot + 1..].reverse();
    true
}

/// Enumerates all `n!` rankings in lexicographic order and returns one with
/// the fewest visibility edges, preferring the lexicographically smallest
/// order among ties, together with its edge count. Work is split by first
/// element; the reduction keeps the sequential answer.
pub fn optimal_ranking(inst: &Instance, cap: usize) -> Result<(Ranking, usize)> {
    let n = inst.len();
    if n > cap || n > MAX_EXHAUSTIVE {
        return Err(Error::TooLarge { n, cap: cap.min(MAX_EXHAUSTIVE) });
    }
    if n == 0 {
        return Ok((Ranking::identity(0), 0));
    }
    let table = SightTable::new(&Arrangement::new(inst));
    let best = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut order: Vec<usize> = std::iter::once(first).chain((0..n).filter(|&i| i != first)).collect();
            let mut best: Option<(usize, Vec<usize>)> = None;
            loop {
                let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
                if let Some(count) = table.edge_count(&order, limit) {
                    // Lexicographic enumeration: an equal count never replaces.
                    if best.as_ref().is_none_or(|b| count < b.0) {
                        best = Some((count, order.clone()));
                    }
                }
                if !next_permutation(&mut order[1..]) {
                    break;
                }
            }
            best.expect("at least one permutation per prefix")
        })
        .min()
        .expect("n > 0");
    Ok((Ranking::new(best.1).expect("permutation"), best.0))
}

/// Edge count of `rk` using the same tabulation as the exhaustive search.
#[cfg(test)]
pub(crate) fn tabulated_edge_count(inst: &Instance, rk: &Ranking) -> usize {
    SightTable::new(&Arrangement::new(inst)).edge_count(rk.order(), usize::MAX).unwrap()
}

/// Convenience: edge count of a single ranking.
pub fn edge_count(inst: &Instance, rk: &Ranking) -> Result<usize> {
    Ok(Arrangement::new(inst).graph(rk, Prefilter::Enabled)?.edge_count())
}
