//! Hyperplanes of `UC_n(G)` as parallelism classes of 1-cubes.
//!
//! Two 1-cubes are dual to the same hyperplane exactly when they carry the
//! same label `e` and their stationary particles lie in the same component of
//! `UC_{n-1}(G \ e)`, where `G \ e` is the induced subgraph on the vertices
//! off `e`. On a full configuration space this agrees with the transitive
//! closure of "opposite in a square"; [`hyperplanes_by_propagation`] checks it.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::complex::{bit, bits, build_uc_allow_empty, ComplexError, Cube, CubeComplex, Mask};
use crate::dsu::DisjointSets;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hyperplane {
    /// Index of the labelling graph edge.
    pub label: usize,
    /// Dual 1-cubes, ascending.
    pub dual_edges: Vec<usize>,
    /// 0-cubes with a particle at the lower endpoint of the label.
    pub lower_side: Vec<usize>,
    /// 0-cubes with a particle at the upper endpoint of the label.
    pub upper_side: Vec<usize>,
    /// Stationary particles per component of `G \ e`.
    pub remainder: Vec<usize>,
}

fn require_edges(cc: &CubeComplex) -> Result<(), ComplexError> {
    if cc.dim() < 1 && !cc.is_complete() {
        return Err(ComplexError::Capped { built: 0, needed: 1 });
    }
    Ok(())
}

/// 1-cube indices grouped by label.
fn edges_by_label(cc: &CubeComplex) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new(); cc.graph().edge_count()];
    for i in 0..cc.cube_count(1) {
        out[cc.edge_label(i)].push(i);
    }
    out
}

/// Hyperplanes of every label, ordered by label and then by the first
/// configuration of their component in `UC_{n-1}(G \ e)`.
pub fn hyperplanes(cc: &CubeComplex) -> Result<Vec<Hyperplane>, ComplexError> {
    let labels: Vec<usize> = (0..cc.graph().edge_count()).collect();
    hyperplanes_for_labels(cc, &labels)
}

/// Hyperplanes whose label is one of `labels`.
pub fn hyperplanes_for_labels(cc: &CubeComplex, labels: &[usize]) -> Result<Vec<Hyperplane>, ComplexError> {
    require_edges(cc)?;
    let g = cc.graph();
    let by_label = edges_by_label(cc);
    let wanted: BTreeSet<usize> = labels.iter().copied().collect();
    let mut out = Vec::new();
    for e in wanted {
        let dual = by_label.get(e).ok_or(ComplexError::Graph(crate::graph::GraphError::EdgeOutOfRange(e)))?;
        if dual.is_empty() {
            continue;
        }
        let (sub, old_of) = g.remove_closed_edge_with_map(e)?;
        let mut new_of = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in old_of.iter().enumerate() {
            new_of[v] = i;
        }
        let rest = build_uc_allow_empty(&sub, cc.particles() - 1, Some(1))?;
        let (comp_of, count) = rest.vertex_component_labels();
        let (part_of, parts) = sub.component_labels();
        let mut groups: Vec<Vec<usize>> = vec![Vec::new(); count];
        for &i in dual {
            let base = cc.cubes(1)[i].base;
            let remapped: Mask = bits(base).fold(0, |acc, v| acc | bit(new_of[v]));
            let j = rest.vertex_index(remapped).expect("stationary set is a configuration of G \\ e");
            groups[comp_of[j]].push(i);
        }
        for group in groups.into_iter().filter(|g| !g.is_empty()) {
            let mut remainder = vec![0; parts];
            for v in bits(cc.cubes(1)[group[0]].base) {
                remainder[part_of[new_of[v]]] += 1;
            }
            let (mut lower, mut upper): (Vec<usize>, Vec<usize>) = group.iter().map(|&i| cc.edge_endpoints(i)).unzip();
            lower.sort_unstable();
            upper.sort_unstable();
            out.push(Hyperplane { label: e, dual_edges: group, lower_side: lower, upper_side: upper, remainder });
        }
    }
    Ok(out)
}

/// Class label of every 1-cube under the closure of "opposite in a square",
/// numbered by first appearance.
pub fn propagation_classes(cc: &CubeComplex) -> Vec<usize> {
    let g = cc.graph();
    let mut dsu = DisjointSets::new(cc.cube_count(1));
    for sq in cc.cubes(2) {
        for e in bits(sq.moving) {
            // The faces across e are the two opposite edges moving along the other label.
            let (lo, hi) = sq.faces_across(g, e);
            dsu.union(cc.index_of(&lo).unwrap(), cc.index_of(&hi).unwrap());
        }
    }
    dsu.labels().0
}

fn partition_labels(n: usize, classes: &[Hyperplane]) -> Vec<usize> {
    let mut raw = vec![usize::MAX; n];
    for (h, hp) in classes.iter().enumerate() {
        for &i in &hp.dual_edges {
            raw[i] = h;
        }
    }
    canonical_labels(&raw)
}

fn canonical_labels(raw: &[usize]) -> Vec<usize> {
    let mut seen = std::collections::HashMap::new();
    raw.iter()
        .map(|&r| {
            let next = seen.len();
            *seen.entry(r).or_insert(next)
        })
        .collect()
}

/// Hyperplanes computed by square propagation, cross-validated against the
/// label-and-component description. A mismatch is an internal error.
pub fn hyperplanes_by_propagation(cc: &CubeComplex) -> Result<Vec<Hyperplane>, ComplexError> {
    if cc.dim() < 2 && !cc.is_complete() {
        return Err(ComplexError::Capped { built: cc.dim(), needed: 2 });
    }
    let by_labels = hyperplanes(cc)?;
    let propagated = canonical_labels(&propagation_classes(cc));
    if propagated != partition_labels(cc.cube_count(1), &by_labels) {
        return Err(ComplexError::Internal("square propagation disagrees with label components".into()));
    }
    Ok(by_labels)
}

/// For each 1-cube, the index of its hyperplane in `hs` (or `usize::MAX`).
pub fn hyperplane_of_edge(cc: &CubeComplex, hs: &[Hyperplane]) -> Vec<usize> {
    let mut out = vec![usize::MAX; cc.cube_count(1)];
    for (h, hp) in hs.iter().enumerate() {
        for &i in &hp.dual_edges {
            out[i] = h;
        }
    }
    out
}

/// The 1-cube of `sq` parallel to moving edge `e` at the corner where every
/// other moving particle sits at its lower endpoint.
fn edge_in_square(cc: &CubeComplex, sq: &Cube, e: usize) -> usize {
    let f = bits(sq.moving & !bit(e)).next().unwrap();
    let (lo, _) = sq.faces_across(cc.graph(), f);
    cc.index_of(&lo).unwrap()
}

/// Unordered pairs of distinct hyperplanes (indices into `hs`) that cross in
/// some square.
pub fn crossing_pairs(cc: &CubeComplex, hs: &[Hyperplane]) -> BTreeSet<(usize, usize)> {
    let owner = hyperplane_of_edge(cc, hs);
    let mut out = BTreeSet::new();
    for sq in cc.cubes(2) {
        let mut it = bits(sq.moving);
        let (e, f) = (it.next().unwrap(), it.next().unwrap());
        let (a, b) = (owner[edge_in_square(cc, sq, e)], owner[edge_in_square(cc, sq, f)]);
        if a != usize::MAX && b != usize::MAX && a != b {
            out.insert((a.min(b), a.max(b)));
        }
    }
    out
}

/// Removes the open carriers of the given hyperplanes, which must be pairwise
/// disjoint. The result lives on the same graph and keeps every vertex.
pub fn cut_along(cc: &CubeComplex, hs: &[Hyperplane]) -> Result<CubeComplex, ComplexError> {
    let g = cc.graph();
    if cc.dim() >= 2 || cc.is_complete() {
        if let Some(&(a, b)) = crossing_pairs(cc, hs).iter().next() {
            return Err(ComplexError::NotDisjoint(a, b));
        }
    } else {
        // Without squares, only label geometry can rule out crossings.
        for a in 0..hs.len() {
            for b in a + 1..hs.len() {
                let [p, q] = g.edge(hs[a].label);
                let [r, s] = g.edge(hs[b].label);
                if p != r && p != s && q != r && q != s {
                    return Err(ComplexError::Capped { built: cc.dim(), needed: 2 });
                }
            }
        }
    }
    let mut removed = vec![false; cc.cube_count(1)];
    for h in hs {
        for &i in &h.dual_edges {
            removed[i] = true;
        }
    }
    Ok(cc.remove_carriers(&removed))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SquareWitness {
    pub hyperplane: usize,
    pub square: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OsculationWitness {
    pub hyperplanes: (usize, usize),
    pub vertex: usize,
    pub edges: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialnessReport {
    pub two_sided: bool,
    pub one_sided: Vec<SquareWitness>,
    pub self_intersecting: Vec<SquareWitness>,
    pub self_osculating: Vec<OsculationWitness>,
    pub inter_osculating: Vec<OsculationWitness>,
}

impl SpecialnessReport {
    pub fn passes(&self) -> bool {
        self.two_sided
            && self.one_sided.is_empty()
            && self.self_intersecting.is_empty()
            && self.self_osculating.is_empty()
            && self.inter_osculating.is_empty()
    }
}

/// Evaluates two-sidedness, self-intersection, direct self-osculation and
/// inter-osculation. Dual edges are oriented from the lower to the upper
/// endpoint of their label.
pub fn check_special(cc: &CubeComplex) -> Result<SpecialnessReport, ComplexError> {
    if cc.dim() < 2 && !cc.is_complete() {
        return Err(ComplexError::Capped { built: cc.dim(), needed: 2 });
    }
    let g = cc.graph();
    let hs = hyperplanes(cc)?;
    let owner = hyperplane_of_edge(cc, &hs);
    let mut one_sided = Vec::new();
    let mut self_intersecting = Vec::new();
    for (s, sq) in cc.cubes(2).iter().enumerate() {
        let labels: Vec<usize> = bits(sq.moving).collect();
        for (i, &e) in labels.iter().enumerate() {
            let f = labels[1 - i];
            // The two e-edges of the square, and their tails.
            let (lo_f, hi_f) = sq.faces_across(g, f);
            let (t1, _) = lo_f.faces_across(g, e);
            let (t2, _) = hi_f.faces_across(g, e);
            let [a, b] = g.edge(f);
            if t1.base ^ t2.base != bit(a) | bit(b) {
                one_sided.push(SquareWitness { hyperplane: owner[cc.index_of(&lo_f).unwrap()], square: s });
            }
        }
        let (he, hf) = (owner[edge_in_square(cc, sq, labels[0])], owner[edge_in_square(cc, sq, labels[1])]);
        if he == hf {
            self_intersecting.push(SquareWitness { hyperplane: he, square: s });
        }
    }
    // Incident edges per vertex with their role: true when the vertex is the tail.
    let mut incident: Vec<Vec<(usize, bool)>> = vec![Vec::new(); cc.cube_count(0)];
    for i in 0..cc.cube_count(1) {
        let (lo, hi) = cc.edge_endpoints(i);
        incident[lo].push((i, true));
        incident[hi].push((i, false));
    }
    let crossing = crossing_pairs(cc, &hs);
    let mut self_osculating = Vec::new();
    let mut inter_osculating = Vec::new();
    for (v, inc) in incident.iter().enumerate() {
        for x in 0..inc.len() {
            for y in x + 1..inc.len() {
                let ((e1, r1), (e2, r2)) = (inc[x], inc[y]);
                let (h1, h2) = (owner[e1], owner[e2]);
                let witness = OsculationWitness { hyperplanes: (h1, h2), vertex: v, edges: (e1, e2) };
                if h1 == h2 {
                    if r1 == r2 {
                        self_osculating.push(witness);
                    }
                } else if crossing.contains(&(h1.min(h2), h1.max(h2))) && !spans_square(cc, v, e1, e2) {
                    inter_osculating.push(witness);
                }
            }
        }
    }
    Ok(SpecialnessReport {
        two_sided: one_sided.is_empty(),
        one_sided,
        self_intersecting,
        self_osculating,
        inter_osculating,
    })
}

/// Whether 1-cubes `e1`, `e2` meeting at vertex `v` are two sides of a square.
fn spans_square(cc: &CubeComplex, v: usize, e1: usize, e2: usize) -> bool {
    let g = cc.graph();
    let (l1, l2) = (cc.edge_label(e1), cc.edge_label(e2));
    let ends = |e: usize| {
        let [a, b] = g.edge(e);
        bit(a) | bit(b)
    };
    if ends(l1) & ends(l2) != 0 {
        return false;
    }
    let config = cc.cubes(0)[v].base;
    let base = config & !ends(l1) & !ends(l2);
    cc.index_of(&Cube { base, moving: bit(l1) | bit(l2) }).is_some()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelSummary {
    pub label: String,
    pub hyperplanes: usize,
    pub side_sizes: Vec<usize>,
}

/// Per-label hyperplane counts and side sizes, for reports.
pub fn summarize(cc: &CubeComplex, hs: &[Hyperplane]) -> Vec<LabelSummary> {
    let g = cc.graph();
    let mut out: Vec<LabelSummary> = Vec::new();
    for h in hs {
        let name = g.edge_label(h.label);
        match out.last_mut() {
            Some(s) if s.label == name => {
                s.hyperplanes += 1;
                s.side_sizes.push(h.lower_side.len());
            }
            _ => out.push(LabelSummary { label: name, hyperplanes: 1, side_sizes: vec![h.lower_side.len()] }),
        }
    }
    out
}
