//! Sufficient conditions for a braid group to split as `H * Z`.
//!
//! Both searches walk vertices, subsets and edges in index order and return
//! the first witness. A missing certificate never means "no splitting".

use serde::Serialize;

use super::{decompose_complex, CutGeometry, FreeSplitting, GogError, GraphOfGroups, Resolver};
use crate::complex::build_uc;
use crate::graph::{check_subdivision, subdivide_edges, sufficient_subdivision, FiniteGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexRole {
    /// The gluing vertex is the centre of the flower.
    Central,
    /// The gluing vertex has valence one in the flower.
    Leaf,
}

/// `G = Φ ∪ Ω` with `Φ ∩ Ω = {v}`, `Φ` a non-segment flower and `Ω` a
/// connected non-segment graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlowerGluing {
    pub vertex: String,
    pub role: VertexRole,
    pub flower: Vec<String>,
    pub rest: Vec<String>,
    /// Whether the split was found only after inserting one vertex into
    /// every edge (same braid group, homeomorphic graph).
    pub subdivided: bool,
    pub conclusion: String,
}

/// An edge `e` with `G \ ė` connected and `G \ e` disconnected, one of whose
/// components is a long enough segment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SegmentComponent {
    pub edge: [String; 2],
    pub segment: Vec<String>,
    pub components: Vec<Vec<String>>,
    pub conclusion: String,
}

fn conclusion(n: usize) -> String {
    format!("B_{n} = H * Z for some subgroup H")
}

fn names(g: &FiniteGraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

/// Centre of a flower: its unique vertex of valence at least 3, or `None`
/// when the graph is a cycle (every vertex qualifies). Errors when the graph
/// is not a non-segment flower.
fn flower_centre(phi: &FiniteGraph) -> Result<Option<usize>, ()> {
    if !phi.is_connected() || phi.is_segment() || phi.edge_count() == 0 {
        return Err(());
    }
    let branch: Vec<usize> = (0..phi.vertex_count()).filter(|&v| phi.degree(v) >= 3).collect();
    match branch.as_slice() {
        [] if phi.is_cycle() => Ok(None),
        [c] => Ok(Some(*c)),
        _ => Err(()),
    }
}

fn flower_split(g: &FiniteGraph) -> Option<(usize, VertexRole, Vec<usize>, Vec<usize>)> {
    for v in 0..g.vertex_count() {
        let others: Vec<usize> = (0..g.vertex_count()).filter(|&u| u != v).collect();
        let (minus_v, old_of) = g.induced_subgraph(&others);
        let pieces: Vec<Vec<usize>> =
            minus_v.components().into_iter().map(|c| c.into_iter().map(|u| old_of[u]).collect()).collect();
        if pieces.len() < 2 || pieces.len() > 20 {
            continue;
        }
        for mask in 1u32..(1 << pieces.len()) - 1 {
            let mut phi = vec![v];
            let mut omega = vec![v];
            for (i, p) in pieces.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    phi.extend(p)
                } else {
                    omega.extend(p)
                }
            }
            let (phi_g, phi_old) = g.induced_subgraph(&phi);
            let (omega_g, _) = g.induced_subgraph(&omega);
            let Ok(centre) = flower_centre(&phi_g) else { continue };
            if omega_g.is_segment() || !omega_g.is_connected() {
                continue;
            }
            let local = phi_old.iter().position(|&u| u == v).expect("v is in the flower");
            let role = match centre {
                None => VertexRole::Central,
                Some(c) if c == local => VertexRole::Central,
                _ if phi_g.degree(local) == 1 => VertexRole::Leaf,
                _ => continue,
            };
            phi.sort_unstable();
            omega.sort_unstable();
            return Some((v, role, phi, omega));
        }
    }
    None
}

/// Searches `g`, then `g` with every edge subdivided once, for a flower
/// gluing.
pub fn free_product_criterion_1(g: &FiniteGraph, n: usize) -> Option<FlowerGluing> {
    if n < 2 {
        return None;
    }
    let all: Vec<usize> = (0..g.edge_count()).collect();
    let finer = subdivide_edges(g, &all, 1);
    for (graph, subdivided) in [(g, false), (&finer, true)] {
        if let Some((v, role, phi, omega)) = flower_split(graph) {
            return Some(FlowerGluing {
                vertex: graph.name(v).to_string(),
                role,
                flower: names(graph, &phi),
                rest: names(graph, &omega),
                subdivided,
                conclusion: conclusion(n),
            });
        }
    }
    None
}

/// First edge whose closed removal leaves a segment component with at least
/// `n - 1` vertices while its open removal keeps the graph connected.
pub fn free_product_criterion_2(g: &FiniteGraph, n: usize) -> Result<Option<SegmentComponent>, GogError> {
    if !check_subdivision(g, n).ok {
        return Err(GogError::NotSubdivided(n));
    }
    if n < 2 {
        return Ok(None);
    }
    for e in 0..g.edge_count() {
        if !g.remove_open_edge(e)?.is_connected() {
            continue;
        }
        let (rest, old_of) = g.remove_closed_edge_with_map(e)?;
        let comps = rest.components();
        if comps.len() < 2 {
            continue;
        }
        let segment = comps.iter().find(|c| c.len() + 1 >= n && rest.induced_subgraph(c).0.is_segment());
        if let Some(seg) = segment {
            let to_old = |c: &[usize]| names(g, &c.iter().map(|&u| old_of[u]).collect::<Vec<_>>());
            let [a, b] = g.edge(e);
            return Ok(Some(SegmentComponent {
                edge: [g.name(a).to_string(), g.name(b).to_string()],
                segment: to_old(seg),
                components: comps.iter().map(|c| to_old(c)).collect(),
                conclusion: conclusion(n),
            }));
        }
    }
    Ok(None)
}

/// A single-edge decomposition exhibiting a free splitting.
pub struct SplittingWitness {
    /// The sufficiently subdivided graph that was decomposed.
    pub graph: FiniteGraph,
    pub decomposition: GraphOfGroups,
    pub splitting: FreeSplitting,
}

/// Looks for a single-edge cut of the sufficient subdivision of `g` with a
/// trivial link splitting off `Z`. Edges at the `hints` (vertex names) are
/// tried first, then all edges in order.
pub fn splitting_witness(
    g: &FiniteGraph,
    n: usize,
    hints: &[&str],
    resolver: &Resolver<'_>,
) -> Result<Option<SplittingWitness>, GogError> {
    let sub = sufficient_subdivision(g, n);
    let cc = build_uc(&sub, n, Some(1))?;
    let mut order: Vec<usize> = Vec::new();
    for h in hints {
        if let Some(v) = sub.index_of(h) {
            order.extend(sub.incident_edges(v));
        }
    }
    order.extend(0..sub.edge_count());
    let mut tried = vec![false; sub.edge_count()];
    for e in order {
        if std::mem::replace(&mut tried[e], true) {
            continue;
        }
        let geo = CutGeometry::new(&sub, n, &[e])?;
        let gog = decompose_complex(&cc, &geo, resolver)?;
        if let Some(splitting) = gog.free_splitting() {
            return Ok(Some(SplittingWitness { graph: sub, decomposition: gog, splitting }));
        }
    }
    Ok(None)
}
