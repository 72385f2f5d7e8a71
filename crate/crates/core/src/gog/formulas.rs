//! Closed-form ranks and combinatorial cube counts.

use rustc_hash::FxHashMap;

use crate::combinatorics::{binomial, binomial_signed};
use crate::complex::{bit, Mask};
use crate::graph::FiniteGraph;

/// `M(n, k) = (k-2) C(n+k-2, k-1) - C(n+k-2, k-2) + 1`, the rank of the braid
/// group of the k-pronged radial tree.
pub fn radial_rank(n: usize, k: usize) -> i128 {
    let (n, k) = (n as i64, k as i64);
    (k - 2) as i128 * binomial_signed(n + k - 2, k - 1) - binomial_signed(n + k - 2, k - 2) + 1
}

/// Ranks for radial trees with `r` bare prongs (`r` in 1..=2); `None` for
/// other `r`.
pub fn modified_radial_rank(n: usize, k: usize, r: usize) -> Option<i128> {
    let (n, k) = (n as i64, k as i64);
    let c = binomial_signed;
    let k2 = (k - 2) as i128;
    match r {
        1 => Some(k2 * (c(n + k - 4, k - 3) + 2 * c(n + k - 4, k - 2)) - c(n + k - 2, k - 2) + 1),
        2 => Some(
            k2 * (c(n + k - 3, k - 2) + c(n + k - 5, k - 3))
                - (k - 3) as i128 * c(n + k - 6, k - 2)
                - c(n + k - 2, k - 2)
                + 1,
        ),
        _ => None,
    }
}

/// Number of matchings of each size: `out[k]` counts sets of `k` pairwise
/// disjoint edges.
pub fn matching_counts(g: &FiniteGraph) -> Vec<u128> {
    fn rec(g: &FiniteGraph, alive: Mask, memo: &mut FxHashMap<Mask, Vec<u128>>) -> Vec<u128> {
        // Lowest live vertex with a live neighbour; vertices without one never match.
        let mut rest = alive;
        let pivot = loop {
            if rest == 0 {
                return vec![1];
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if g.neighbors(v).iter().any(|&w| alive & bit(w) != 0) {
                break v;
            }
        };
        let key = alive & !(bit(pivot) - 1);
        if let Some(r) = memo.get(&key) {
            return r.clone();
        }
        let without = alive & !bit(pivot);
        let mut out = rec(g, without, memo);
        for &w in g.neighbors(pivot) {
            if alive & bit(w) != 0 {
                let sub = rec(g, without & !bit(w), memo);
                if out.len() < sub.len() + 1 {
                    out.resize(sub.len() + 1, 0);
                }
                for (k, x) in sub.iter().enumerate() {
                    out[k + 1] += x;
                }
            }
        }
        memo.insert(key, out.clone());
        out
    }
    let all: Mask = if g.vertex_count() == 128 { Mask::MAX } else { bit(g.vertex_count()) - 1 };
    rec(g, all, &mut FxHashMap::default())
}

/// Cube counts of `UC_n(g)` by dimension, without building the complex: a
/// k-cube is a k-matching plus `n - k` stationary vertices off it.
pub fn uc_cube_counts(g: &FiniteGraph, n: usize) -> Vec<u128> {
    let v = g.vertex_count() as u64;
    let mut out: Vec<u128> = matching_counts(g)
        .iter()
        .enumerate()
        .take(n + 1)
        .map(|(k, &m)| {
            let free = v.saturating_sub(2 * k as u64);
            if 2 * k as u64 > v {
                0
            } else {
                m * binomial(free, (n - k) as u64)
            }
        })
        .collect();
    while out.len() > 1 && *out.last().unwrap() == 0 {
        out.pop();
    }
    out
}

pub fn uc_euler(g: &FiniteGraph, n: usize) -> i128 {
    uc_cube_counts(g, n).iter().enumerate().map(|(k, &c)| if k % 2 == 0 { c as i128 } else { -(c as i128) }).sum()
}

/// Rank of the (free) reduced braid group of a tree with exactly one vertex of
/// valence at least 3, as `1 - chi(UC_n)`.
///
/// For such trees the discrete gradient field on `UC_n` has critical cells
/// only in dimensions 0 and 1, so the complex is homotopy equivalent to a
/// connected graph and the Euler characteristic determines the rank.
pub fn star_rank(g: &FiniteGraph, n: usize) -> Option<usize> {
    let essential = (0..g.vertex_count()).filter(|&v| g.degree(v) >= 3).count();
    if !g.is_tree() || essential != 1 || n == 0 || n > g.vertex_count() {
        return None;
    }
    usize::try_from(1 - uc_euler(g, n)).ok()
}
