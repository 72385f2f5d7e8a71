//! The unordered discrete configuration space `UC_n(G)` as a cube complex.
//!
//! A k-cube is a pair `(base, moving)`: `n - k` stationary vertices and `k`
//! pairwise disjoint edges, all disjoint from the base. Its vertices are the
//! configurations obtained by placing one particle at either end of every
//! moving edge. Vertex and edge sets are stored as `u128` bitmasks, so graphs
//! are limited to 128 vertices and 128 edges.

mod duality;
mod export;

use std::cmp::Ordering;

use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::dsu::DisjointSets;
use crate::graph::{FiniteGraph, GraphError};

pub use duality::{complement_isomorphism, ComplementMap};

pub type Mask = u128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ComplexError {
    #[error("n exceeds vertex count ({particles} particles, {vertices} vertices)")]
    TooManyParticles { particles: usize, vertices: usize },
    #[error("particle count must be at least 1")]
    NoParticles,
    #[error("graphs with more than 128 vertices or edges are not supported ({0})")]
    TooLarge(usize),
    #[error("complex was built up to dimension {built} but has cubes of dimension {needed}")]
    Capped { built: usize, needed: usize },
    #[error("hyperplanes {0} and {1} are not disjoint")]
    NotDisjoint(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Iterates the set bits of a mask in ascending order.
pub fn bits(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let i = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(i)
    })
}

pub fn bit(i: usize) -> Mask {
    1u128 << i
}

/// Lexicographic order of the ascending index lists of two sets.
pub fn lex_cmp(a: Mask, b: Mask) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let p = (a ^ b).trailing_zeros();
    let (holder_is_a, other) = if (a >> p) & 1 == 1 { (true, b) } else { (false, a) };
    // The set holding p is smaller unless the other set ends before p.
    let holder_smaller = (other >> p) != 0;
    match (holder_is_a, holder_smaller) {
        (true, true) | (false, false) => Ordering::Less,
        _ => Ordering::Greater,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cube {
    /// Stationary vertices.
    pub base: Mask,
    /// Moving edges, as a mask over edge indices.
    pub moving: Mask,
}

impl Cube {
    pub fn vertex(config: Mask) -> Self {
        Self { base: config, moving: 0 }
    }

    pub fn dim(&self) -> usize {
        self.moving.count_ones() as usize
    }

    pub fn cmp_lex(&self, other: &Self) -> Ordering {
        lex_cmp(self.base, other.base).then_with(|| lex_cmp(self.moving, other.moving))
    }

    /// The two faces across moving edge `e`: particle at the lower endpoint,
    /// then particle at the upper endpoint.
    pub fn faces_across(&self, g: &FiniteGraph, e: usize) -> (Cube, Cube) {
        let [a, b] = g.edge(e);
        let moving = self.moving & !bit(e);
        (Cube { base: self.base | bit(a), moving }, Cube { base: self.base | bit(b), moving })
    }

    /// Every vertex of the cube has these vertices occupied or moving.
    pub fn support(&self, g: &FiniteGraph) -> Mask {
        bits(self.moving).fold(self.base, |acc, e| {
            let [a, b] = g.edge(e);
            acc | bit(a) | bit(b)
        })
    }

    /// The corner with every moving particle at the lower endpoint of its edge.
    pub fn lower_corner(&self, g: &FiniteGraph) -> Mask {
        bits(self.moving).fold(self.base, |acc, e| acc | bit(g.edge(e)[0]))
    }
}

/// The cube complex `UC_n(G)`, possibly truncated at a dimension cap.
#[derive(Clone, Debug)]
pub struct CubeComplex {
    graph: FiniteGraph,
    particles: usize,
    cubes: Vec<Vec<Cube>>,
    index: Vec<FxHashMap<Cube, u32>>,
    complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexComponent {
    /// Particles per component of the reference graph.
    pub signature: Vec<usize>,
    /// Indices of the 0-cubes in this component, ascending.
    pub vertices: Vec<usize>,
}

fn matchings(g: &FiniteGraph, k: usize) -> Vec<(Mask, Mask)> {
    fn rec(g: &FiniteGraph, start: usize, k: usize, used: Mask, edges: Mask, out: &mut Vec<(Mask, Mask)>) {
        if k == 0 {
            out.push((edges, used));
            return;
        }
        for e in start..g.edge_count() {
            let [a, b] = g.edge(e);
            let ends = bit(a) | bit(b);
            if used & ends == 0 {
                rec(g, e + 1, k - 1, used | ends, edges | bit(e), out);
            }
        }
    }
    let mut out = Vec::new();
    rec(g, 0, k, 0, 0, &mut out);
    out
}

fn subsets_of_size(pool: Mask, r: usize, mut emit: impl FnMut(Mask)) {
    let items: Vec<usize> = bits(pool).collect();
    if r > items.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        emit(idx.iter().fold(0, |acc, &i| acc | bit(items[i])));
        // Advance the rightmost index that can still move.
        let mut i = r;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < items.len() - r + i {
                break;
            }
            if i == 0 {
                return;
            }
        }
        idx[i] += 1;
        for j in i + 1..r {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn cubes_of_dim(g: &FiniteGraph, n: usize, k: usize, all: Mask) -> Vec<Cube> {
    let mut out = Vec::new();
    for (moving, used) in matchings(g, k) {
        subsets_of_size(all & !used, n - k, |base| out.push(Cube { base, moving }));
    }
    out
}

fn has_cube_of_dim(g: &FiniteGraph, n: usize, k: usize) -> bool {
    k <= n && matchings(g, k).iter().any(|&(_, used)| g.vertex_count() - used.count_ones() as usize >= n - k)
}

/// Builds `UC_n(g)` in dimensions `0..=min(max_dim, n)`.
pub fn build_uc(g: &FiniteGraph, n: usize, max_dim: Option<usize>) -> Result<CubeComplex, ComplexError> {
    if n == 0 {
        return Err(ComplexError::NoParticles);
    }
    build_uc_allow_empty(g, n, max_dim)
}

/// As [`build_uc`] but also accepts `n = 0`, the one-point complex.
pub(crate) fn build_uc_allow_empty(
    g: &FiniteGraph,
    n: usize,
    max_dim: Option<usize>,
) -> Result<CubeComplex, ComplexError> {
    let size = g.vertex_count().max(g.edge_count());
    if size > 128 {
        return Err(ComplexError::TooLarge(size));
    }
    if n > g.vertex_count() {
        return Err(ComplexError::TooManyParticles { particles: n, vertices: g.vertex_count() });
    }
    let cap = max_dim.unwrap_or(n).min(n);
    let all: Mask = if g.vertex_count() == 128 { Mask::MAX } else { bit(g.vertex_count()) - 1 };
    let mut cubes = Vec::with_capacity(cap + 1);
    for k in 0..=cap {
        let mut layer = cubes_of_dim(g, n, k, all);
        layer.sort_unstable_by(|a, b| a.cmp_lex(b));
        cubes.push(layer);
    }
    while cubes.len() > 1 && cubes.last().is_some_and(|l| l.is_empty()) {
        cubes.pop();
    }
    let complete = cap == n || !has_cube_of_dim(g, n, cap + 1);
    Ok(CubeComplex::from_layers(g.clone(), n, cubes, complete))
}

impl CubeComplex {
    fn from_layers(graph: FiniteGraph, particles: usize, cubes: Vec<Vec<Cube>>, complete: bool) -> Self {
        let index = cubes.iter().map(|layer| layer.iter().enumerate().map(|(i, &c)| (c, i as u32)).collect()).collect();
        Self { graph, particles, cubes, index, complete }
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn particles(&self) -> usize {
        self.particles
    }

    /// Highest dimension holding cubes (or the cap, when truncated).
    pub fn dim(&self) -> usize {
        self.cubes.len() - 1
    }

    /// Whether every cube of `UC_n(G)` (or of the cut subcomplex) is present.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn cubes(&self, k: usize) -> &[Cube] {
        self.cubes.get(k).map_or(&[], |l| l.as_slice())
    }

    pub fn cube_count(&self, k: usize) -> usize {
        self.cubes(k).len()
    }

    /// Cube counts in dimensions `0..=dim`.
    pub fn counts(&self) -> Vec<usize> {
        self.cubes.iter().map(Vec::len).collect()
    }

    pub fn total_cubes(&self) -> usize {
        self.cubes.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, c: &Cube) -> Option<usize> {
        self.index.get(c.dim())?.get(c).map(|&i| i as usize)
    }

    pub fn vertex_index(&self, config: Mask) -> Option<usize> {
        self.index_of(&Cube::vertex(config))
    }

    /// Oriented boundary of the `i`-th `k`-cube: with the moving edges in
    /// ascending order, the `j`-th contributes `(-1)^j (upper face - lower face)`.
    pub fn boundary(&self, k: usize, i: usize) -> Vec<(usize, i64)> {
        let c = self.cubes[k][i];
        let mut out = Vec::with_capacity(2 * k);
        for (j, e) in bits(c.moving).enumerate() {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            let (lo, hi) = c.faces_across(&self.graph, e);
            out.push((self.index_of(&hi).expect("face closure"), sign));
            out.push((self.index_of(&lo).expect("face closure"), -sign));
        }
        out
    }

    /// The two endpoints of a 1-cube as 0-cube indices: particle at the lower
    /// endpoint of the label, then at the upper endpoint.
    pub fn edge_endpoints(&self, i: usize) -> (usize, usize) {
        let c = self.cubes[1][i];
        let e = self.edge_label(i);
        let (lo, hi) = c.faces_across(&self.graph, e);
        (self.index_of(&lo).expect("face closure"), self.index_of(&hi).expect("face closure"))
    }

    /// The graph edge traversed by the `i`-th 1-cube.
    pub fn edge_label(&self, i: usize) -> usize {
        self.cubes[1][i].moving.trailing_zeros() as usize
    }

    /// Checks that every face of every cube is present and that faces are distinct.
    pub fn check_closure(&self) -> Result<(), ComplexError> {
        for k in 1..self.cubes.len() {
            for (i, c) in self.cubes[k].iter().enumerate() {
                let mut seen = Vec::with_capacity(2 * k);
                for e in bits(c.moving) {
                    let (lo, hi) = c.faces_across(&self.graph, e);
                    for f in [lo, hi] {
                        let Some(fi) = self.index_of(&f) else {
                            return Err(ComplexError::Internal(format!("face of cube {i} in dim {k} missing")));
                        };
                        seen.push(fi);
                    }
                }
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != 2 * k {
                    return Err(ComplexError::Internal(format!("cube {i} in dim {k} has repeated faces")));
                }
            }
        }
        Ok(())
    }

    /// Component label of every 0-cube, numbered by smallest member.
    pub fn vertex_component_labels(&self) -> (Vec<usize>, usize) {
        let mut dsu = DisjointSets::new(self.cube_count(0));
        for i in 0..self.cube_count(1) {
            let (a, b) = self.edge_endpoints(i);
            dsu.union(a, b);
        }
        dsu.labels()
    }

    /// Components with signatures over the components of the source graph.
    pub fn components(&self) -> Result<Vec<ComplexComponent>, ComplexError> {
        let (labels, count) = self.graph.component_labels();
        self.components_over(&labels, count)
    }

    /// Components with signatures over an arbitrary vertex partition given by
    /// per-vertex labels in `0..parts`.
    pub fn components_over(&self, vertex_part: &[usize], parts: usize) -> Result<Vec<ComplexComponent>, ComplexError> {
        if self.cubes.len() < 2 && !self.complete {
            return Err(ComplexError::Capped { built: 0, needed: 1 });
        }
        let (labels, count) = self.vertex_component_labels();
        let mut out: Vec<ComplexComponent> =
            (0..count).map(|_| ComplexComponent { signature: Vec::new(), vertices: Vec::new() }).collect();
        for (i, &l) in labels.iter().enumerate() {
            out[l].vertices.push(i);
        }
        for comp in &mut out {
            let config = self.cubes[0][comp.vertices[0]].base;
            let mut sig = vec![0; parts];
            for v in bits(config) {
                sig[vertex_part[v]] += 1;
            }
            comp.signature = sig;
        }
        Ok(out)
    }

    /// Alternating sum of cube counts; requires the full complex.
    pub fn euler_characteristic(&self) -> Result<i64, ComplexError> {
        if !self.complete {
            return Err(ComplexError::Capped { built: self.dim(), needed: self.dim() + 1 });
        }
        Ok(self
            .cubes
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum())
    }

    /// Drops every cube having a moving edge whose parallel 1-cube (the one
    /// with all other moving particles at their lower endpoints) is marked in
    /// `removed`. Since parallel 1-cubes of a cube share a hyperplane, this
    /// removes exactly the open carriers of the hyperplanes owning the marks.
    pub fn remove_carriers(&self, removed: &[bool]) -> CubeComplex {
        let g = &self.graph;
        let mut layers = Vec::with_capacity(self.cubes.len());
        for (k, layer) in self.cubes.iter().enumerate() {
            if k == 0 {
                layers.push(layer.clone());
                continue;
            }
            let kept: Vec<Cube> = layer
                .iter()
                .copied()
                .filter(|c| {
                    bits(c.moving).all(|e| {
                        let rest = c.moving & !bit(e);
                        let base = c.base | bits(rest).fold(0, |acc, f| acc | bit(g.edge(f)[0]));
                        let edge = Cube { base, moving: bit(e) };
                        !removed[self.index_of(&edge).expect("face closure")]
                    })
                })
                .collect();
            layers.push(kept);
        }
        while layers.len() > 1 && layers.last().is_some_and(|l| l.is_empty()) {
            layers.pop();
        }
        CubeComplex::from_layers(self.graph.clone(), self.particles, layers, self.complete)
    }

    /// Vertex ids of a configuration, in vertex order.
    pub fn config_names(&self, config: Mask) -> Vec<String> {
        bits(config).map(|v| self.graph.name(v).to_string()).collect()
    }

    /// A graph-independent key for a cube: stationary vertex ids and moving
    /// edges as sorted id pairs.
    pub fn cube_key(&self, c: &Cube) -> (Vec<String>, Vec<(String, String)>) {
        let g = &self.graph;
        let mut base = self.config_names(c.base);
        base.sort();
        let mut moving: Vec<(String, String)> = bits(c.moving)
            .map(|e| {
                let [a, b] = g.edge(e);
                let (x, y) = (g.name(a).to_string(), g.name(b).to_string());
                if x <= y {
                    (x, y)
                } else {
                    (y, x)
                }
            })
            .collect();
        moving.sort();
        (base, moving)
    }

    /// Whether two complexes, possibly over differently indexed graphs sharing
    /// vertex ids, consist of the same cubes.
    pub fn same_cubes_by_id(&self, other: &CubeComplex) -> bool {
        if self.counts() != other.counts() || self.particles != other.particles {
            return false;
        }
        (0..self.cubes.len()).all(|k| {
            let mut a: Vec<_> = self.cubes[k].iter().map(|c| self.cube_key(c)).collect();
            let mut b: Vec<_> = other.cubes[k].iter().map(|c| other.cube_key(c)).collect();
            a.sort();
            b.sort();
            a == b
        })
    }
}
