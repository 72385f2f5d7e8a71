//! Graph-of-groups decompositions of graph braid groups.
//!
//! Cutting `UC_n(G)` along every hyperplane labelled by edges `e_1..e_m`
//! that share a vertex `v` leaves the components of `UC_n(G \ (e_1 ∪ .. ∪ e_m))`
//! (open edges removed). These are the nodes of `Λ`; the hyperplanes are its
//! links. [`CutGeometry`] predicts `Λ` from partition counting alone and
//! [`decompose`] builds it from the complex, refusing to continue when the
//! two disagree.

pub mod criteria;
mod descriptor;
pub mod formulas;
pub mod strategy;

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::combinatorics::{count_bounded, enumerate_bounded};
use crate::complex::{build_uc, ComplexError, CubeComplex};
use crate::dsu::DisjointSets;
use crate::graph::{FiniteGraph, GraphError};
use crate::hyperplanes::{cut_along, hyperplanes_for_labels};

pub use descriptor::GroupDescriptor;
pub use strategy::{BraidQuery, GroupStrategy, Resolution, Resolver, StrategyRegistry};

#[derive(Debug, Error)]
pub enum GogError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error("cut edges {0:?} do not share a common vertex")]
    NoCommonVertex(Vec<String>),
    #[error("cut edge {0} is listed more than once")]
    DuplicateCutEdge(String),
    #[error("at least one cut edge is required")]
    EmptyCut,
    #[error("a decomposition needs at least 2 particles, got {0}")]
    TooFewParticles(usize),
    #[error("the graph must be connected, it has {0} components")]
    Disconnected(usize),
    #[error("decomposition disagrees with the predicted shape: {0}")]
    ShapeMismatch(String),
    #[error("monomorphisms unavailable: link {0} has a nontrivial group and an endpoint group is opaque")]
    MonomorphismsUnavailable(usize),
    #[error("unknown strategy {0:?}")]
    UnknownStrategy(String),
    #[error("graph does not satisfy the subdivision conditions for n = {0}")]
    NotSubdivided(usize),
}

struct LinkGeometry {
    far: usize,
    graph: FiniteGraph,
    /// Cut-graph component containing each piece of `graph`.
    piece_part: Vec<usize>,
    piece_caps: Vec<usize>,
}

/// Partition data of a cut, enough to predict `Λ` without building any
/// complex.
pub struct CutGeometry {
    graph: FiniteGraph,
    n: usize,
    cut_edges: Vec<usize>,
    pivot: usize,
    cut_graph: FiniteGraph,
    part_of: Vec<usize>,
    capacities: Vec<usize>,
    links: Vec<LinkGeometry>,
}

/// The two node signatures joined by the hyperplanes of one link graph
/// configuration, plus the configuration itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkSignature {
    /// Node with the moving particle at the common vertex.
    pub source: Vec<usize>,
    /// Node with the moving particle at the far endpoint.
    pub target: Vec<usize>,
    /// Stationary particles per component of `G \ e_i`.
    pub remainder: Vec<usize>,
}

impl CutGeometry {
    pub fn new(g: &FiniteGraph, n: usize, cut_edges: &[usize]) -> Result<Self, GogError> {
        if n < 2 {
            return Err(GogError::TooFewParticles(n));
        }
        if n > g.vertex_count() {
            return Err(ComplexError::TooManyParticles { particles: n, vertices: g.vertex_count() }.into());
        }
        if cut_edges.is_empty() {
            return Err(GogError::EmptyCut);
        }
        for (i, &e) in cut_edges.iter().enumerate() {
            if e >= g.edge_count() {
                return Err(GraphError::EdgeOutOfRange(e).into());
            }
            if cut_edges[..i].contains(&e) {
                return Err(GogError::DuplicateCutEdge(g.edge_label(e)));
            }
        }
        if !g.is_connected() {
            return Err(GogError::Disconnected(g.component_count()));
        }
        let pivot = g
            .edge(cut_edges[0])
            .into_iter()
            .find(|&v| cut_edges.iter().all(|&e| g.edge(e).contains(&v)))
            .ok_or_else(|| GogError::NoCommonVertex(cut_edges.iter().map(|&e| g.edge_label(e)).collect()))?;

        let cut_graph = g.remove_open_edges(cut_edges)?;
        let (part_of, parts) = cut_graph.component_labels();
        let mut capacities = vec![0; parts];
        for &p in &part_of {
            capacities[p] += 1;
        }
        let mut links = Vec::with_capacity(cut_edges.len());
        for &e in cut_edges {
            let [a, b] = g.edge(e);
            let far = if a == pivot { b } else { a };
            let (sub, old_of) = g.remove_closed_edge_with_map(e)?;
            let (piece_of, pieces) = sub.component_labels();
            let mut piece_part = vec![0; pieces];
            let mut piece_caps = vec![0; pieces];
            for (v, &c) in piece_of.iter().enumerate() {
                piece_part[c] = part_of[old_of[v]];
                piece_caps[c] += 1;
            }
            links.push(LinkGeometry { far, graph: sub, piece_part, piece_caps });
        }
        Ok(Self { graph: g.clone(), n, cut_edges: cut_edges.to_vec(), pivot, cut_graph, part_of, capacities, links })
    }

    pub fn graph(&self) -> &FiniteGraph {
        &self.graph
    }

    pub fn particles(&self) -> usize {
        self.n
    }

    pub fn cut_edges(&self) -> &[usize] {
        &self.cut_edges
    }

    /// The vertex shared by all cut edges.
    pub fn pivot(&self) -> usize {
        self.pivot
    }

    /// `G` with the interiors of the cut edges removed.
    pub fn cut_graph(&self) -> &FiniteGraph {
        &self.cut_graph
    }

    pub fn part_of(&self) -> &[usize] {
        &self.part_of
    }

    pub fn capacities(&self) -> &[usize] {
        &self.capacities
    }

    /// `G \ e_i` with both endpoints removed.
    pub fn link_graph(&self, i: usize) -> &FiniteGraph {
        &self.links[i].graph
    }

    /// Signatures of the predicted nodes, lexicographically decreasing.
    pub fn node_signatures(&self) -> Vec<Vec<usize>> {
        enumerate_bounded(self.n, &self.capacities)
    }

    /// Predicted links labelled `e_i`, one per configuration class of the
    /// remaining `n - 1` particles.
    pub fn hyperplane_signatures(&self, i: usize) -> Vec<LinkSignature> {
        let link = &self.links[i];
        enumerate_bounded(self.n - 1, &link.piece_caps)
            .into_iter()
            .map(|remainder| {
                let mut base = vec![0; self.capacities.len()];
                for (c, &m) in remainder.iter().enumerate() {
                    base[link.piece_part[c]] += m;
                }
                let mut source = base.clone();
                source[self.part_of[self.pivot]] += 1;
                let mut target = base;
                target[self.part_of[link.far]] += 1;
                LinkSignature { source, target, remainder }
            })
            .collect()
    }

    /// Whether `l` is obtained from `k` by moving one particle from the
    /// component of the common vertex to the component of the far endpoint
    /// of some `e_i`, or the reverse. Both signatures must be feasible.
    pub fn predict_adjacency(&self, k: &[usize], l: &[usize]) -> bool {
        let pv = self.part_of[self.pivot];
        let moved = |a: &[usize], b: &[usize], pi: usize| {
            a[pv] >= 1 && {
                let mut m = a.to_vec();
                m[pv] -= 1;
                m[pi] += 1;
                m == b
            }
        };
        self.links.iter().any(|link| {
            let pi = self.part_of[link.far];
            moved(k, l, pi) || moved(l, k, pi)
        })
    }

    /// Links labelled `e_i` between `k` and `l`, unordered.
    pub fn predict_link_count_for(&self, k: &[usize], l: &[usize], i: usize) -> u128 {
        let oriented = self.oriented_count(k, l, i);
        if k == l {
            oriented
        } else {
            oriented + self.oriented_count(l, k, i)
        }
    }

    /// Total number of links between `k` and `l` over all cut edges.
    pub fn predict_link_count(&self, k: &[usize], l: &[usize]) -> u128 {
        (0..self.links.len()).map(|i| self.predict_link_count_for(k, l, i)).sum()
    }

    /// Links from `a` (particle at the common vertex) to `b` (particle at the
    /// far end of `e_i`): the remaining particles are distributed over the
    /// pieces of `G \ e_i` inside each cut component.
    fn oriented_count(&self, a: &[usize], b: &[usize], i: usize) -> u128 {
        let link = &self.links[i];
        let (pv, pi) = (self.part_of[self.pivot], self.part_of[link.far]);
        if a[pv] == 0 {
            return 0;
        }
        let mut rest = a.to_vec();
        rest[pv] -= 1;
        let mut expect = rest.clone();
        expect[pi] += 1;
        if expect != b {
            return 0;
        }
        rest.iter()
            .enumerate()
            .map(|(p, &m)| {
                let caps: Vec<usize> =
                    link.piece_caps.iter().zip(&link.piece_part).filter(|(_, &q)| q == p).map(|(&c, _)| c).collect();
                count_bounded(m, &caps)
            })
            .product()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Node {
    pub id: usize,
    /// Particles per component of the cut graph.
    pub signature: Vec<usize>,
    /// Number of 0-cubes in the node.
    pub configurations: usize,
    pub group: GroupDescriptor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Link {
    pub id: usize,
    /// Index of the cut edge in the graph.
    pub label: usize,
    /// Node on the common-vertex side.
    pub source: usize,
    /// Node on the far side.
    pub target: usize,
    pub remainder: Vec<usize>,
    pub dual_edges: usize,
    pub group: GroupDescriptor,
    pub in_tree: bool,
}

/// Predicted against actual link count for one node pair and label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkTally {
    pub nodes: [usize; 2],
    pub label: usize,
    pub predicted: u128,
    pub actual: usize,
}

#[derive(Clone, Debug)]
pub struct GraphOfGroups {
    pub graph: FiniteGraph,
    pub n: usize,
    pub cut_edges: Vec<usize>,
    pub pivot: usize,
    /// Vertex lists of the components of the cut graph.
    pub cut_components: Vec<Vec<usize>>,
    pub nodes: Vec<Node>,
    pub links: Vec<Link>,
    pub tally: Vec<LinkTally>,
    /// Root of the spanning tree.
    pub root: usize,
}

/// How a trivial link splits off a free factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SplittingKind {
    /// Removing the link leaves `Λ` connected: its stable letter is a free `Z`.
    NonSeparating,
    /// The link is a bridge and one side carries a free factor.
    Bridge { side: Vec<usize>, side_group: GroupDescriptor },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreeSplitting {
    pub link: usize,
    pub label: String,
    #[serde(flatten)]
    pub kind: SplittingKind,
    pub conclusion: String,
}

/// Builds `UC_n(g)` and decomposes it along `cut_edges`.
pub fn decompose(
    g: &FiniteGraph,
    n: usize,
    cut_edges: &[usize],
    resolver: &Resolver<'_>,
) -> Result<GraphOfGroups, GogError> {
    let geo = CutGeometry::new(g, n, cut_edges)?;
    let cc = build_uc(g, n, Some(1))?;
    decompose_complex(&cc, &geo, resolver)
}

/// Decomposes a prebuilt complex (1-skeleton or more) of the same graph and
/// particle count as `geo`.
pub fn decompose_complex(
    cc: &CubeComplex,
    geo: &CutGeometry,
    resolver: &Resolver<'_>,
) -> Result<GraphOfGroups, GogError> {
    let g = cc.graph();
    if g != geo.graph() || cc.particles() != geo.particles() {
        return Err(GogError::ShapeMismatch("complex and cut geometry describe different spaces".into()));
    }
    let hs = hyperplanes_for_labels(cc, geo.cut_edges())?;
    let cut = cut_along(cc, &hs)?;
    let comps = cut.components_over(geo.part_of(), geo.capacities().len())?;

    // Nodes, in predicted order.
    let predicted = geo.node_signatures();
    if comps.len() != predicted.len() {
        return Err(GogError::ShapeMismatch(format!("{} nodes built, {} predicted", comps.len(), predicted.len())));
    }
    let mut node_of = vec![usize::MAX; cc.cube_count(0)];
    let mut nodes = Vec::with_capacity(predicted.len());
    for (id, sig) in predicted.iter().enumerate() {
        let mut matching = comps.iter().filter(|c| &c.signature == sig);
        let comp =
            matching.next().ok_or_else(|| GogError::ShapeMismatch(format!("no component with signature {sig:?}")))?;
        if matching.next().is_some() {
            return Err(GogError::ShapeMismatch(format!("several components with signature {sig:?}")));
        }
        for &v in &comp.vertices {
            node_of[v] = id;
        }
        let group = resolver.resolve(geo.cut_graph(), sig);
        nodes.push(Node { id, signature: sig.clone(), configurations: comp.vertices.len(), group });
    }

    // Links.
    let mut links = Vec::with_capacity(hs.len());
    let mut actual: BTreeMap<([usize; 2], usize), usize> = BTreeMap::new();
    for (id, h) in hs.iter().enumerate() {
        let i = geo.cut_edges().iter().position(|&e| e == h.label).expect("label is a cut edge");
        let side = |s: &[usize]| -> Result<usize, GogError> {
            let node = node_of[s[0]];
            if s.iter().any(|&v| node_of[v] != node) {
                return Err(GogError::ShapeMismatch(format!("hyperplane {id} has a side spanning two nodes")));
            }
            Ok(node)
        };
        let (lower, upper) = (side(&h.lower_side)?, side(&h.upper_side)?);
        let (source, target) = if g.edge(h.label)[0] == geo.pivot() { (lower, upper) } else { (upper, lower) };
        let expect = geo
            .hyperplane_signatures(i)
            .into_iter()
            .find(|s| s.remainder == h.remainder)
            .ok_or_else(|| GogError::ShapeMismatch(format!("hyperplane {id} has an unexpected remainder")))?;
        if expect.source != nodes[source].signature || expect.target != nodes[target].signature {
            return Err(GogError::ShapeMismatch(format!("hyperplane {id} attaches to unexpected nodes")));
        }
        *actual.entry(([source.min(target), source.max(target)], i)).or_default() += 1;
        let group = resolver.resolve(geo.link_graph(i), &h.remainder);
        links.push(Link {
            id,
            label: h.label,
            source,
            target,
            remainder: h.remainder.clone(),
            dual_edges: h.dual_edges.len(),
            group,
            in_tree: false,
        });
    }

    // Predicted against actual, over every node pair and label.
    let mut tally = Vec::new();
    for a in 0..nodes.len() {
        for b in a..nodes.len() {
            for i in 0..geo.cut_edges().len() {
                let p = geo.predict_link_count_for(&nodes[a].signature, &nodes[b].signature, i);
                let act = actual.get(&([a, b], i)).copied().unwrap_or(0);
                if p != act as u128 {
                    return Err(GogError::ShapeMismatch(format!(
                        "{} links labelled {} between nodes {a} and {b}, {p} predicted",
                        act,
                        g.edge_label(geo.cut_edges()[i])
                    )));
                }
                if p > 0 {
                    tally.push(LinkTally { nodes: [a, b], label: geo.cut_edges()[i], predicted: p, actual: act });
                }
            }
        }
    }

    let root = (0..nodes.len()).min_by(|&a, &b| nodes[a].signature.cmp(&nodes[b].signature)).unwrap_or(0);
    mark_spanning_tree(nodes.len(), &mut links, root)?;
    let mut cut_components = vec![Vec::new(); geo.capacities().len()];
    for (v, &p) in geo.part_of().iter().enumerate() {
        cut_components[p].push(v);
    }
    Ok(GraphOfGroups {
        graph: g.clone(),
        n: geo.particles(),
        cut_edges: geo.cut_edges().to_vec(),
        pivot: geo.pivot(),
        cut_components,
        nodes,
        links,
        tally,
        root,
    })
}

/// BFS from `root`, taking links in id order.
fn mark_spanning_tree(node_count: usize, links: &mut [Link], root: usize) -> Result<(), GogError> {
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    for l in links.iter() {
        incident[l.source].push(l.id);
        if l.target != l.source {
            incident[l.target].push(l.id);
        }
    }
    let mut seen = vec![false; node_count];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &id in &incident[u] {
            let w = if links[id].source == u { links[id].target } else { links[id].source };
            if !seen[w] {
                seen[w] = true;
                links[id].in_tree = true;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(GogError::ShapeMismatch("the underlying graph is disconnected".into()));
    }
    Ok(())
}

impl GraphOfGroups {
    /// First Betti number of `Λ`.
    pub fn loops(&self) -> usize {
        self.links.len() + 1 - self.nodes.len()
    }

    pub fn all_links_trivial(&self) -> bool {
        self.links.iter().all(|l| l.group.is_trivial())
    }

    pub fn shape_agrees(&self) -> bool {
        self.tally.iter().all(|t| t.predicted == t.actual as u128)
    }

    /// The fundamental group, as far as it can be written down: a free product
    /// when links are trivial, an HNN extension for one node and one link,
    /// and a symbolic graph of groups otherwise.
    pub fn assemble(&self) -> Result<GroupDescriptor, GogError> {
        let node_groups = || self.nodes.iter().map(|n| n.group.clone()).collect::<Vec<_>>();
        if self.all_links_trivial() {
            let mut factors = node_groups();
            factors.push(GroupDescriptor::Free { rank: self.loops() });
            return Ok(GroupDescriptor::FreeProduct { factors }.simplify());
        }
        for l in &self.links {
            let ends_opaque = self.nodes[l.source].group.is_opaque() || self.nodes[l.target].group.is_opaque();
            if !l.group.is_trivial() && (ends_opaque || l.group.is_opaque()) {
                return Err(GogError::MonomorphismsUnavailable(l.id));
            }
        }
        if self.nodes.len() == 1 && self.links.len() == 1 {
            return Ok(GroupDescriptor::Hnn {
                base: Box::new(self.nodes[0].group.clone()),
                edge: Box::new(self.links[0].group.clone()),
            }
            .simplify());
        }
        Ok(GroupDescriptor::GraphOfGroups {
            nodes: node_groups(),
            links: self.links.iter().map(|l| l.group.clone()).collect(),
            loops: self.loops(),
        }
        .simplify())
    }

    /// Group of the sub-graph of groups on `side` when all its internal links
    /// are trivial.
    fn side_group(&self, side: &[usize], skip: usize) -> Option<GroupDescriptor> {
        let inside: Vec<&Link> = self
            .links
            .iter()
            .filter(|l| l.id != skip && side.contains(&l.source) && side.contains(&l.target))
            .collect();
        if inside.iter().any(|l| !l.group.is_trivial()) {
            return None;
        }
        let mut factors: Vec<GroupDescriptor> = side.iter().map(|&v| self.nodes[v].group.clone()).collect();
        factors.push(GroupDescriptor::Free { rank: inside.len() + 1 - side.len() });
        Some(GroupDescriptor::FreeProduct { factors }.simplify())
    }

    /// First trivial link, in id order, that exhibits the group as `H * Z`.
    pub fn free_splitting(&self) -> Option<FreeSplitting> {
        for l in self.links.iter().filter(|l| l.group.is_trivial()) {
            let mut dsu = DisjointSets::new(self.nodes.len());
            for m in self.links.iter().filter(|m| m.id != l.id) {
                dsu.union(m.source, m.target);
            }
            let label = self.graph.edge_label(l.label);
            if dsu.find(l.source) == dsu.find(l.target) {
                return Some(FreeSplitting {
                    link: l.id,
                    label,
                    kind: SplittingKind::NonSeparating,
                    conclusion: "H * Z, with Z generated by the stable letter of a non-separating trivial link".into(),
                });
            }
            for end in [l.source, l.target] {
                let root = dsu.find(end);
                let side: Vec<usize> = (0..self.nodes.len()).filter(|&v| dsu.find(v) == root).collect();
                if let Some(group) = self.side_group(&side, l.id) {
                    if group.free_factor_rank() >= 1 {
                        return Some(FreeSplitting {
                            link: l.id,
                            label,
                            kind: SplittingKind::Bridge { side, side_group: group },
                            conclusion: "H * Z, with Z a free factor of one side of a trivial bridge".into(),
                        });
                    }
                }
            }
        }
        None
    }

    fn signature_text(sig: &[usize]) -> String {
        let parts: Vec<String> = sig.iter().map(|x| x.to_string()).collect();
        format!("({})", parts.join(","))
    }

    pub fn to_json(&self) -> Value {
        let g = &self.graph;
        let names = |vs: &[usize]| vs.iter().map(|&v| g.name(v).to_string()).collect::<Vec<_>>();
        let nodes: Vec<Value> = self
            .nodes
            .iter()
            .map(|nd| {
                json!({
                    "id": nd.id,
                    "signature": nd.signature,
                    "configurations": nd.configurations,
                    "group": nd.group.to_string(),
                    "group_detail": nd.group,
                })
            })
            .collect();
        let links: Vec<Value> = self
            .links
            .iter()
            .map(|l| {
                json!({
                    "id": l.id,
                    "label": g.edge_label(l.label),
                    "source": l.source,
                    "target": l.target,
                    "remainder": l.remainder,
                    "dual_edges": l.dual_edges,
                    "group": l.group.to_string(),
                    "group_detail": l.group,
                    "in_tree": l.in_tree,
                })
            })
            .collect();
        let tally: Vec<Value> = self
            .tally
            .iter()
            .map(|t| {
                json!({
                    "nodes": t.nodes,
                    "label": g.edge_label(t.label),
                    "predicted": t.predicted.to_string(),
                    "actual": t.actual,
                })
            })
            .collect();
        let assembled = match self.assemble() {
            Ok(d) => json!({ "group": d.to_string(), "detail": d }),
            Err(e) => json!({ "error": e.to_string() }),
        };
        json!({
            "n": self.n,
            "cut_edges": self.cut_edges.iter().map(|&e| g.edge_label(e)).collect::<Vec<_>>(),
            "common_vertex": g.name(self.pivot),
            "cut_components": self.cut_components.iter().map(|c| names(c)).collect::<Vec<_>>(),
            "nodes": nodes,
            "links": links,
            "link_counts": tally,
            "shape_agrees": self.shape_agrees(),
            "spanning_tree_root": self.root,
            "loops": self.loops(),
            "assembled": assembled,
            "free_splitting": self.free_splitting(),
        })
    }

    /// Graphviz rendering of `Λ`; spanning-tree links are bold.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph Lambda {\n");
        for nd in &self.nodes {
            let _ = writeln!(out, "  n{} [label=\"{}\\n{}\"];", nd.id, Self::signature_text(&nd.signature), nd.group);
        }
        for l in &self.links {
            let style = if l.in_tree { ", style=bold" } else { "" };
            let _ = writeln!(
                out,
                "  n{} -- n{} [label=\"{}\\n{}\"{style}];",
                l.source,
                l.target,
                self.graph.edge_label(l.label),
                l.group
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "nodes: {}, links: {}, loops: {}", self.nodes.len(), self.links.len(), self.loops());
        for nd in &self.nodes {
            let _ = writeln!(out, "  node {} {}: {}", nd.id, Self::signature_text(&nd.signature), nd.group);
        }
        for l in &self.links {
            let _ = writeln!(
                out,
                "  link {} [{}] {} -- {}: {}{}",
                l.id,
                self.graph.edge_label(l.label),
                l.source,
                l.target,
                l.group,
                if l.in_tree { " (tree)" } else { "" }
            );
        }
        match self.assemble() {
            Ok(d) => {
                let _ = writeln!(out, "group: {d}");
            }
            Err(e) => {
                let _ = writeln!(out, "group: {e}");
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn run(g: &FiniteGraph, n: usize, a: &str, b: &str) -> GraphOfGroups {
        let reg = StrategyRegistry::with_defaults();
        let e = g.find_edge(a, b).unwrap();
        decompose(g, n, &[e], &Resolver::new(&reg)).unwrap()
    }

    #[test]
    fn gamma_h_middle_edge() {
        let gog = run(&families::gamma_h_double_prime(), 4, "s1", "s2");
        let groups: Vec<String> = gog.nodes.iter().map(|n| n.group.to_string()).collect();
        assert_eq!(groups, ["F3", "F2", "Z^2", "F2", "F3"]);
        assert_eq!(gog.links.len(), 4);
        assert!(gog.all_links_trivial());
        assert_eq!(gog.assemble().unwrap().to_string(), "F10 * Z^2");
    }

    #[test]
    fn gamma_a_single_self_loop() {
        let gog = run(&families::gamma_a_prime(), 4, "b1", "b2");
        assert_eq!(gog.nodes.len(), 1);
        assert_eq!(gog.links.len(), 1);
        assert_eq!(gog.assemble().unwrap().to_string(), "F5 * Z^2");
    }

    #[test]
    fn gamma_q_is_free() {
        for n in 2..=4 {
            let gog = run(&families::gamma_q(n), n, "w", "u");
            assert_eq!((gog.nodes.len(), gog.links.len()), (1, n));
            assert_eq!(gog.assemble().unwrap(), GroupDescriptor::Free { rank: n });
            assert!(matches!(gog.free_splitting().unwrap().kind, SplittingKind::NonSeparating));
        }
    }

    #[test]
    fn gamma_theta_is_hnn() {
        let gog = run(&families::gamma_theta(), 4, "c1", "c2");
        assert_eq!(gog.assemble().unwrap().to_string(), "HNN(Z * Z^2 over Z)");
        assert!(gog.free_splitting().is_none());
    }

    #[test]
    fn adjacency_matches_counts() {
        let g = families::gamma_h_double_prime();
        let geo = CutGeometry::new(&g, 4, &[g.find_edge("s1", "s2").unwrap()]).unwrap();
        let sigs = geo.node_signatures();
        for k in &sigs {
            for l in &sigs {
                assert_eq!(geo.predict_adjacency(k, l), geo.predict_link_count(k, l) > 0);
            }
        }
        assert!(geo.predict_adjacency(&[3, 1], &[2, 2]));
        assert!(!geo.predict_adjacency(&[4, 0], &[2, 2]));
    }

    #[test]
    fn cut_validation() {
        let g = families::gamma_h();
        let e1 = g.find_edge("x", "x1").unwrap();
        let e2 = g.find_edge("y", "y1").unwrap();
        assert!(matches!(CutGeometry::new(&g, 4, &[e1, e2]), Err(GogError::NoCommonVertex(_))));
        assert!(matches!(CutGeometry::new(&g, 4, &[e1, e1]), Err(GogError::DuplicateCutEdge(_))));
        assert!(matches!(CutGeometry::new(&g, 1, &[e1]), Err(GogError::TooFewParticles(1))));
        assert!(matches!(CutGeometry::new(&g, 4, &[]), Err(GogError::EmptyCut)));
    }

    #[test]
    fn several_cut_edges_at_one_vertex() {
        let g = families::radial_subdivided(2, 3);
        let edges = g.incident_edges(g.index_of("o").unwrap());
        let reg = StrategyRegistry::with_defaults();
        let gog = decompose(&g, 2, &edges, &Resolver::new(&reg)).unwrap();
        assert!(gog.shape_agrees());
        assert_eq!(gog.assemble().unwrap(), GroupDescriptor::z());
    }
}
