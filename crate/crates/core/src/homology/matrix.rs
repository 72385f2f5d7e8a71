//! Sparse integer matrices with exact entries.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;

/// Column-major sparse matrix; each column holds `(row, value)` pairs sorted
/// by row with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(usize, BigInt)>>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, columns: vec![Vec::new(); cols] }
    }

    pub fn from_dense<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.add_to(i, j, v.clone().into());
            }
        }
        m
    }

    /// Builds from columns of `(row, value)` pairs; duplicates are summed.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            for (i, v) in col {
                m.add_to(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(usize, BigInt)] {
        &self.columns[j]
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        let col = &self.columns[j];
        match col.binary_search_by_key(&i, |&(r, _)| r) {
            Ok(p) => col[p].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: BigInt) {
        assert!(i < self.rows && j < self.cols, "entry ({i},{j}) out of range");
        if v.is_zero() {
            return;
        }
        let col = &mut self.columns[j];
        match col.binary_search_by_key(&i, |&(r, _)| r) {
            Ok(p) => {
                col[p].1 += v;
                if col[p].1.is_zero() {
                    col.remove(p);
                }
            }
            Err(p) => col.insert(p, (i, v)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                out[*i][j] = v.clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for (j, col) in other.columns.iter().enumerate() {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, b) in col {
                for (i, a) in &self.columns[*k] {
                    *acc.entry(*i).or_insert_with(BigInt::zero) += a * b;
                }
            }
            out.columns[j] = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        }
        out
    }

    /// Coordinate text: a `rows cols nnz` header, then `row col value` lines
    /// (0-based), column by column.
    pub fn to_triplets(&self) -> String {
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, v) in col {
                let _ = writeln!(out, "{i} {j} {v}");
            }
        }
        out
    }
}
