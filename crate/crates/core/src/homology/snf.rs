//! Dense Smith normal form over arbitrary-precision integers.
//!
//! Pivots are chosen by minimal absolute value to limit entry growth. With
//! transforms requested, the unimodular `U` and `V` satisfy `U * M * V = D`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntegerMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries `d_1 | d_2 | ...`, all positive.
    pub invariant_factors: Vec<BigInt>,
    pub left: Option<Vec<Vec<BigInt>>>,
    pub right: Option<Vec<Vec<BigInt>>>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }
}

struct Work {
    a: Vec<Vec<BigInt>>,
    u: Option<Vec<Vec<BigInt>>>,
    v: Option<Vec<Vec<BigInt>>>,
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for row in &mut self.a {
            row.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for row in v.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    /// row_i -= q * row_j
    fn row_axpy(&mut self, i: usize, j: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
            let src = m[j].clone();
            for (x, s) in m[i].iter_mut().zip(&src) {
                if !s.is_zero() {
                    *x -= q * s;
                }
            }
        }
        apply(&mut self.a, i, j, q);
        if let Some(u) = &mut self.u {
            apply(u, i, j, q);
        }
    }

    /// col_i -= q * col_j
    fn col_axpy(&mut self, i: usize, j: usize, q: &BigInt) {
        fn apply(m: &mut [Vec<BigInt>], i: usize, j: usize, q: &BigInt) {
            for row in m.iter_mut() {
                if !row[j].is_zero() {
                    let d = q * &row[j];
                    row[i] -= d;
                }
            }
        }
        apply(&mut self.a, i, j, q);
        if let Some(v) = &mut self.v {
            apply(v, i, j, q);
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in self.a[i].iter_mut() {
            *x = -x.clone();
        }
        if let Some(u) = &mut self.u {
            for x in u[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
}

/// Smith normal form of `m`, optionally with the transforms.
pub fn smith_normal_form(m: &IntegerMatrix, transforms: bool) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut w = Work { a: m.to_dense(), u: transforms.then(|| identity(r)), v: transforms.then(|| identity(c)) };
    let mut factors = Vec::new();
    for t in 0..r.min(c) {
        // Smallest nonzero entry of the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..r {
            for j in t..c {
                if !w.a[i][j].is_zero() && best.is_none_or(|(bi, bj)| w.a[i][j].abs() < w.a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if !w.a[i][t].is_zero() {
                    let q = w.a[i][t].div_floor(&w.a[t][t]);
                    w.row_axpy(i, t, &q);
                    clean &= w.a[i][t].is_zero();
                }
            }
            for j in t + 1..c {
                if !w.a[t][j].is_zero() {
                    let q = w.a[t][j].div_floor(&w.a[t][t]);
                    w.col_axpy(j, t, &q);
                    clean &= w.a[t][j].is_zero();
                }
            }
            if !clean {
                // A remainder smaller than the pivot survives; promote it.
                let mut best = (t, t);
                for i in t + 1..r {
                    if !w.a[i][t].is_zero() && w.a[i][t].abs() < w.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..c {
                    if !w.a[t][j].is_zero() && w.a[t][j].abs() < w.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            // Enforce divisibility of the trailing block by the pivot.
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| !w.a[i][j].is_multiple_of(&w.a[t][t])));
            match bad {
                Some(i) => w.row_axpy(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        if w.a[t][t].is_negative() {
            w.negate_row(t);
        }
        factors.push(w.a[t][t].clone());
    }
    SmithForm { invariant_factors: factors, left: w.u, right: w.v }
}
