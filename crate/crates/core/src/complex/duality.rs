//! The complement map `S -> V \ S` between `UC_n(G)` and `UC_{|V|-n}(G)`.
//!
//! A cube `(base, moving)` maps to `(V \ (base ∪ ends(moving)), moving)`: the
//! holes of one configuration are the particles of the other, and a hole
//! moves along an edge exactly when a particle does.

use super::{bit, build_uc, ComplexError, Cube, CubeComplex};
use crate::graph::FiniteGraph;

/// A verified label-preserving isomorphism, as per-dimension index maps.
#[derive(Clone, Debug)]
pub struct ComplementMap {
    pub source: CubeComplex,
    pub target: CubeComplex,
    pub forward: Vec<Vec<usize>>,
}

fn image(g: &FiniteGraph, c: &Cube) -> Cube {
    let all = if g.vertex_count() == 128 { u128::MAX } else { bit(g.vertex_count()) - 1 };
    Cube { base: all & !c.support(g), moving: c.moving }
}

pub fn complement_isomorphism(g: &FiniteGraph, n: usize) -> Result<ComplementMap, ComplexError> {
    if n == 0 || n >= g.vertex_count() {
        return Err(ComplexError::TooManyParticles { particles: n, vertices: g.vertex_count() });
    }
    let source = build_uc(g, n, None)?;
    let target = build_uc(g, g.vertex_count() - n, None)?;
    let bad = |msg: String| Err(ComplexError::Internal(format!("complement map: {msg}")));
    if source.counts() != target.counts() {
        return bad(format!("counts {:?} vs {:?}", source.counts(), target.counts()));
    }
    let mut forward = Vec::with_capacity(source.dim() + 1);
    for k in 0..=source.dim() {
        let mut hit = vec![false; target.cube_count(k)];
        let mut map = Vec::with_capacity(source.cube_count(k));
        for c in source.cubes(k) {
            let Some(j) = target.index_of(&image(g, c)) else {
                return bad(format!("image of a {k}-cube missing"));
            };
            if std::mem::replace(&mut hit[j], true) {
                return bad(format!("two {k}-cubes share an image"));
            }
            map.push(j);
        }
        forward.push(map);
    }
    // Faces must go to faces, with the two sides of every moving edge swapped.
    for k in 1..=source.dim() {
        for (i, c) in source.cubes(k).iter().enumerate() {
            let ci = target.cubes(k)[forward[k][i]];
            for e in super::bits(c.moving) {
                let (lo, hi) = c.faces_across(g, e);
                let (tlo, thi) = ci.faces_across(g, e);
                let lo_img = forward[k - 1][source.index_of(&lo).unwrap()];
                let hi_img = forward[k - 1][source.index_of(&hi).unwrap()];
                if target.index_of(&thi) != Some(lo_img) || target.index_of(&tlo) != Some(hi_img) {
                    return bad(format!("incidence broken at a {k}-cube"));
                }
            }
        }
    }
    Ok(ComplementMap { source, target, forward })
}
