//! Counting helpers: binomials and capacity-bounded compositions.
//!
//! A capacity-bounded partition of `m` particles over parts with capacities
//! `c_1..c_k` is a tuple `(x_1..x_k)` with `0 <= x_j <= c_j` summing to `m`.
//! Components of a configuration space are in bijection with these tuples
//! when the parts are the connected components of the graph.

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

/// Binomial coefficient with signed arguments; zero outside `0 <= k <= n`.
pub fn binomial_signed(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    binomial(n as u64, k as u64) as i128
}

/// Number of capacity-bounded partitions of `m` over `capacities`.
pub fn count_bounded(m: usize, capacities: &[usize]) -> u128 {
    let mut ways = vec![0u128; m + 1];
    ways[0] = 1;
    for &cap in capacities {
        let mut next = vec![0u128; m + 1];
        for (total, slot) in next.iter_mut().enumerate() {
            let mut acc = 0;
            for x in 0..=cap.min(total) {
                acc += ways[total - x];
            }
            *slot = acc;
        }
        ways = next;
    }
    ways[m]
}

/// All capacity-bounded partitions of `m` over `capacities`, in
/// lexicographically decreasing order (most particles in the first part first).
pub fn enumerate_bounded(m: usize, capacities: &[usize]) -> Vec<Vec<usize>> {
    fn rec(m: usize, caps: &[usize], suffix_cap: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == caps.len() {
            if m == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let rest = suffix_cap[i + 1];
        let lo = m.saturating_sub(rest);
        let hi = caps[i].min(m);
        if lo > hi {
            return;
        }
        for x in (lo..=hi).rev() {
            cur.push(x);
            rec(m - x, caps, suffix_cap, cur, out);
            cur.pop();
        }
    }
    let mut suffix = vec![0usize; capacities.len() + 1];
    for i in (0..capacities.len()).rev() {
        suffix[i] = suffix[i + 1] + capacities[i];
    }
    let mut out = Vec::new();
    rec(m, capacities, &suffix, &mut Vec::new(), &mut out);
    out
}
