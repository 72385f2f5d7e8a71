//! Sparse elimination for the rank and invariant factors of large boundary
//! matrices.
//!
//! Unit pivots are taken greedily from the sparsest column, preferring the
//! shortest row (a Markowitz-style choice). Columns with no unit entry are
//! deferred until a later update touches them. Whatever survives is handed to
//! the dense Smith normal form. Entries start as checked `i64`; on overflow the
//! whole computation restarts over `BigInt`.

use std::cmp::Reverse;
use std::collections::BinaryHeap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::snf::smith_normal_form;
use super::IntegerMatrix;

pub(crate) trait Entry: Clone + Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    /// `self - f * x`, or `None` on overflow.
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self>;
    fn mul(&self, x: &Self) -> Option<Self>;
    fn from_big(v: &BigInt) -> Option<Self>;
    fn to_big(&self) -> BigInt;
}

impl Entry for i64 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_unit(&self) -> bool {
        *self == 1 || *self == -1
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(f.checked_mul(*x)?)
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        self.checked_mul(*x)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i64()
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn sub_mul(&self, f: &Self, x: &Self) -> Option<Self> {
        Some(self - f * x)
    }
    fn mul(&self, x: &Self) -> Option<Self> {
        Some(self * x)
    }
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug)]
pub(crate) struct Overflow;

/// Invariant factors (positive, divisibility-ordered) of `m`.
pub fn invariant_factors(m: &IntegerMatrix) -> Vec<BigInt> {
    match eliminate::<i64>(m) {
        Ok(f) => f,
        Err(Overflow) => eliminate::<BigInt>(m).expect("bigint elimination cannot overflow"),
    }
}

pub(crate) fn eliminate<T: Entry>(m: &IntegerMatrix) -> Result<Vec<BigInt>, Overflow> {
    let (nr, nc) = (m.rows(), m.cols());
    let mut rows: Vec<Vec<(usize, T)>> = vec![Vec::new(); nr];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); nc];
    let mut col_count = vec![0usize; nc];
    for j in 0..nc {
        for (i, v) in m.column(j) {
            rows[*i].push((j, T::from_big(v).ok_or(Overflow)?));
            col_rows[j].push(*i);
        }
        col_count[j] = m.column(j).len();
    }
    let mut row_alive = vec![true; nr];
    let mut col_alive = vec![true; nc];
    let mut heap: BinaryHeap<Reverse<(usize, usize)>> =
        (0..nc).filter(|&j| col_count[j] > 0).map(|j| Reverse((col_count[j], j))).collect();
    let mut pivots = 0usize;

    while let Some(Reverse((cnt, c))) = heap.pop() {
        if !col_alive[c] || cnt != col_count[c] || cnt == 0 {
            continue;
        }
        // Refresh the row list of column c and look for a unit.
        let mut candidates = std::mem::take(&mut col_rows[c]);
        candidates.sort_unstable();
        candidates.dedup();
        let mut live = Vec::with_capacity(cnt);
        let mut best: Option<(usize, T)> = None;
        for r in candidates {
            if !row_alive[r] {
                continue;
            }
            if let Ok(p) = rows[r].binary_search_by_key(&c, |&(j, _)| j) {
                live.push(r);
                let v = &rows[r][p].1;
                if v.is_unit() && best.as_ref().is_none_or(|(b, _)| rows[r].len() < rows[*b].len()) {
                    best = Some((r, v.clone()));
                }
            }
        }
        col_rows[c] = live;
        let Some((pr, pv)) = best else { continue };

        let pivot_row = std::mem::take(&mut rows[pr]);
        let others: Vec<usize> = col_rows[c].iter().copied().filter(|&r| r != pr).collect();
        let mut touched = Vec::new();
        for r in others {
            let p = rows[r].binary_search_by_key(&c, |&(j, _)| j).expect("live entry");
            // pv is a unit, so pv^{-1} = pv and f = a_rc * pv.
            let f = rows[r][p].1.mul(&pv).ok_or(Overflow)?;
            let old = std::mem::take(&mut rows[r]);
            let mut merged = Vec::with_capacity(old.len() + pivot_row.len());
            let (mut a, mut b) = (0, 0);
            while a < old.len() || b < pivot_row.len() {
                let ja = old.get(a).map_or(usize::MAX, |e| e.0);
                let jb = pivot_row.get(b).map_or(usize::MAX, |e| e.0);
                if ja < jb {
                    merged.push(old[a].clone());
                    a += 1;
                } else {
                    let base = if ja == jb { old[a].1.clone() } else { T::zero() };
                    let v = base.sub_mul(&f, &pivot_row[b].1).ok_or(Overflow)?;
                    if ja > jb {
                        // Fill-in.
                        col_rows[jb].push(r);
                        col_count[jb] += 1;
                        touched.push(jb);
                    } else {
                        a += 1;
                        if v.is_zero() {
                            col_count[jb] -= 1;
                            touched.push(jb);
                        }
                    }
                    if !v.is_zero() {
                        merged.push((jb, v));
                    }
                    b += 1;
                }
            }
            rows[r] = merged;
        }
        for (j, _) in &pivot_row {
            col_count[*j] -= 1;
            touched.push(*j);
        }
        row_alive[pr] = false;
        col_alive[c] = false;
        pivots += 1;
        touched.sort_unstable();
        touched.dedup();
        for j in touched {
            if col_alive[j] && col_count[j] > 0 {
                heap.push(Reverse((col_count[j], j)));
            }
        }
    }

    // Dense remainder.
    let rem_rows: Vec<usize> = (0..nr).filter(|&r| row_alive[r] && !rows[r].is_empty()).collect();
    let mut rem_cols: Vec<usize> = rem_rows.iter().flat_map(|&r| rows[r].iter().map(|e| e.0)).collect();
    rem_cols.sort_unstable();
    rem_cols.dedup();
    let mut factors = vec![BigInt::one(); pivots];
    if !rem_rows.is_empty() {
        let mut dense = IntegerMatrix::zeros(rem_rows.len(), rem_cols.len());
        for (i, &r) in rem_rows.iter().enumerate() {
            for (j, v) in &rows[r] {
                let jj = rem_cols.binary_search(j).expect("collected column");
                dense.add_to(i, jj, v.to_big());
            }
        }
        factors.extend(smith_normal_form(&dense, false).invariant_factors);
    }
    factors.sort();
    Ok(factors)
}
