//! Integral cellular homology of cube complexes.
//!
//! `H_k = ker ∂_k / im ∂_{k+1}`. With `r_k = rank ∂_k` the Betti numbers are
//! `b_k = |C_k| - r_k - r_{k+1}`, and the torsion of `H_k` is read from the
//! invariant factors of `∂_{k+1}` greater than one.

mod matrix;
mod snf;
mod sparse;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use thiserror::Error;

use crate::complex::CubeComplex;

pub use matrix::IntegerMatrix;
pub use snf::{smith_normal_form, SmithForm};
pub use sparse::invariant_factors;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("homology needs the full complex, but it was built only up to dimension {0}")]
    Capped(usize),
    #[error("boundary of boundary is nonzero in degree {0}")]
    BoundarySquared(usize),
    #[error("Betti numbers disagree with the Euler characteristic ({betti} vs {cells})")]
    EulerMismatch { betti: i64, cells: i64 },
}

/// Ranks and torsion of `H_0, ..., H_top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    pub betti: Vec<usize>,
    /// Torsion coefficients of each `H_k`, ascending; empty when torsion-free.
    pub torsion: Vec<Vec<BigInt>>,
    pub euler: i64,
}

impl HomologyProfile {
    pub fn betti(&self, k: usize) -> usize {
        self.betti.get(k).copied().unwrap_or(0)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.torsion.iter().all(Vec::is_empty)
    }

    /// JSON form; torsion coefficients that fit in `u64` are numbers, larger
    /// ones are decimal strings.
    pub fn to_json(&self) -> Value {
        let torsion: serde_json::Map<String, Value> = self
            .torsion
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.is_empty())
            .map(|(k, t)| (k.to_string(), Value::Array(t.iter().map(big_to_json).collect())))
            .collect();
        json!({ "betti": self.betti, "torsion": torsion, "euler": self.euler })
    }
}

/// Torsion coefficients that fit in `u64` become numbers, larger ones decimal strings.
pub fn big_to_json(v: &BigInt) -> Value {
    match v.to_u64() {
        Some(x) => json!(x),
        None => json!(v.to_string()),
    }
}

/// `∂_1, ..., ∂_top`; `∂_k` has the (k-1)-cubes as rows and the k-cubes as columns.
pub fn boundary_matrices(cc: &CubeComplex) -> Vec<IntegerMatrix> {
    (1..=cc.dim())
        .map(|k| {
            let cols = (0..cc.cube_count(k)).map(|i| cc.boundary(k, i)).collect();
            IntegerMatrix::from_columns(cc.cube_count(k - 1), cols)
        })
        .collect()
}

/// Checks `∂_{k-1} ∂_k = 0` for every k.
pub fn check_boundary_squared(cc: &CubeComplex) -> Result<(), HomologyError> {
    let ds = boundary_matrices(cc);
    for k in 1..ds.len() {
        if !ds[k - 1].mul(&ds[k]).is_zero() {
            return Err(HomologyError::BoundarySquared(k + 1));
        }
    }
    Ok(())
}

pub fn homology(cc: &CubeComplex) -> Result<HomologyProfile, HomologyError> {
    if !cc.is_complete() {
        return Err(HomologyError::Capped(cc.dim()));
    }
    let top = cc.dim();
    // factors[k] = invariant factors of ∂_k, for k in 1..=top.
    let mut factors: Vec<Vec<BigInt>> = vec![Vec::new(); top + 2];
    for (i, d) in boundary_matrices(cc).iter().enumerate() {
        factors[i + 1] = invariant_factors(d);
    }
    let rank = |k: usize| factors.get(k).map_or(0, Vec::len);
    let mut betti = Vec::with_capacity(top + 1);
    let mut torsion = Vec::with_capacity(top + 1);
    for k in 0..=top {
        betti.push(cc.cube_count(k) - rank(k) - rank(k + 1));
        torsion.push(factors[k + 1].iter().filter(|f| !f.is_one()).cloned().collect());
    }
    let cells = cc.euler_characteristic().map_err(|_| HomologyError::Capped(top))?;
    let alt: i64 = betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    if alt != cells {
        return Err(HomologyError::EulerMismatch { betti: alt, cells });
    }
    Ok(HomologyProfile { betti, torsion, euler: cells })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_uc;
    use crate::graph::families;
    use crate::graph::FiniteGraph;

    #[test]
    fn small_configuration_spaces() {
        // Two points on a 3-cycle: UC_2 is a circle.
        let cc = build_uc(&families::cycle(3), 2, None).unwrap();
        let h = homology(&cc).unwrap();
        assert_eq!(h.betti, vec![1, 1]);
        // Two points on the Y tree with one-edge prongs: a hexagon.
        let cc = build_uc(&families::star(&[1, 1, 1]), 2, None).unwrap();
        assert_eq!(homology(&cc).unwrap().betti, vec![1, 1]);
        // Disconnected: one particle on each of two segments or both on one.
        let cc = build_uc(&families::two_segments(2, 2), 2, None).unwrap();
        assert_eq!(homology(&cc).unwrap().betti[0], 3);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let g = families::gamma_h();
        let cc = build_uc(&g, 4, None).unwrap();
        check_boundary_squared(&cc).unwrap();
        let h = homology(&cc).unwrap();
        assert_eq!(h.euler, 0);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn k4_two_points() {
        // 6 vertices, 12 edges and one square per perfect matching.
        let g =
            FiniteGraph::from_edges(&[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]).unwrap();
        let cc = build_uc(&g, 2, None).unwrap();
        assert_eq!(cc.counts(), vec![6, 12, 3]);
        let h = homology(&cc).unwrap();
        assert_eq!(h.betti[0], 1);
        assert_eq!(h.euler, -3);
    }

    #[test]
    fn capped_complex_is_rejected() {
        let cc = build_uc(&families::gamma_h(), 4, Some(1)).unwrap();
        assert!(matches!(homology(&cc), Err(HomologyError::Capped(_))));
    }
}
