//! Finite simple graphs with stable vertex identifiers.
//!
//! Vertices are indexed `0..|V|` in insertion order and carry string ids.
//! Edges are indexed in insertion order and stored with their endpoints in
//! ascending vertex-index order. All iteration is deterministic.

mod canonical;
mod classify;
mod criteria;
pub mod families;
mod subdivision;

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use canonical::{are_isomorphic, canonical_form, CanonicalForm};
pub use classify::{classify, rebuild_from_witness, GraphClass, GraphTag, Witness};
pub use criteria::{enumerate_simple_cycles, triviality_criterion, z2_witness, BraidTriviality, Z2Witness};
pub use subdivision::{
    branches, check_subdivision, subdivide_edge, subdivide_edges, sufficient_subdivision, Branch, SubdivisionReport,
    Violation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed graph description: {0}")]
    Malformed(String),
    #[error("duplicate vertex id {0:?}")]
    DuplicateVertex(String),
    #[error("edge references unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("loop at vertex {0:?}")]
    Loop(String),
    #[error("duplicate edge {0:?}-{1:?}")]
    DuplicateEdge(String, String),
    #[error("edge {0:?}-{1:?} is not in the graph")]
    MissingEdge(String, String),
    #[error("edge index {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("partition {partition:?} does not fit {components} components with {particles} particles")]
    PartitionMismatch { partition: Vec<usize>, components: usize, particles: usize },
    #[error("graph has {0} vertices or edges; at most 128 are supported")]
    TooLarge(usize),
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

#[derive(Clone, Debug)]
pub struct FiniteGraph {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
    edges: Vec<[usize; 2]>,
    edge_lookup: HashMap<[usize; 2], usize>,
    adjacency: Vec<Vec<usize>>,
}

impl PartialEq for FiniteGraph {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.edges == other.edges
    }
}

impl Eq for FiniteGraph {}

impl FiniteGraph {
    /// Builds a graph from vertex ids and id pairs, validating every invariant.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (S, S)>,
    {
        let mut g = Self::empty();
        for v in vertices {
            g.add_vertex(v.into())?;
        }
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            let ia = *g.lookup.get(&a).ok_or_else(|| GraphError::UnknownVertex(a.clone()))?;
            let ib = *g.lookup.get(&b).ok_or_else(|| GraphError::UnknownVertex(b.clone()))?;
            g.add_edge(ia, ib)?;
        }
        Ok(g)
    }

    /// Builds a graph from an edge list, declaring vertices in order of first appearance.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut vertices: Vec<&str> = Vec::new();
        for &(a, b) in edges {
            for v in [a, b] {
                if !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
        }
        Self::new(vertices, edges.iter().copied())
    }

    fn empty() -> Self {
        Self {
            names: Vec::new(),
            lookup: HashMap::new(),
            edges: Vec::new(),
            edge_lookup: HashMap::new(),
            adjacency: Vec::new(),
        }
    }

    fn add_vertex(&mut self, id: String) -> Result<usize, GraphError> {
        if self.lookup.contains_key(&id) {
            return Err(GraphError::DuplicateVertex(id));
        }
        let ix = self.names.len();
        self.lookup.insert(id.clone(), ix);
        self.names.push(id);
        self.adjacency.push(Vec::new());
        Ok(ix)
    }

    fn add_edge(&mut self, a: usize, b: usize) -> Result<usize, GraphError> {
        if a == b {
            return Err(GraphError::Loop(self.names[a].clone()));
        }
        let key = [a.min(b), a.max(b)];
        if self.edge_lookup.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(self.names[a].clone(), self.names[b].clone()));
        }
        let ix = self.edges.len();
        self.edges.push(key);
        self.edge_lookup.insert(key, ix);
        for (x, y) in [(a, b), (b, a)] {
            let adj = &mut self.adjacency[x];
            let pos = adj.partition_point(|&w| w < y);
            adj.insert(pos, y);
        }
        Ok(ix)
    }

    /// Parses the JSON schema `{"vertices": [...], "edges": [[u, v], ...]}`.
    pub fn parse_json(text: &str) -> Result<Self, GraphError> {
        let raw: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Malformed(e.to_string()))?;
        Self::new(raw.vertices, raw.edges)
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson {
            vertices: self.names.clone(),
            edges: self.edges.iter().map(|&[a, b]| (self.names[a].clone(), self.names[b].clone())).collect(),
        };
        serde_json::to_string(&raw).expect("graph serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.lookup.get(id).copied()
    }

    /// Endpoints of edge `e`, lower vertex index first.
    pub fn edge(&self, e: usize) -> [usize; 2] {
        self.edges[e]
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn edge_between(&self, a: usize, b: usize) -> Option<usize> {
        self.edge_lookup.get(&[a.min(b), a.max(b)]).copied()
    }

    /// Looks up an edge by its endpoint ids.
    pub fn find_edge(&self, a: &str, b: &str) -> Result<usize, GraphError> {
        let missing = || GraphError::MissingEdge(a.to_string(), b.to_string());
        let ia = self.index_of(a).ok_or_else(missing)?;
        let ib = self.index_of(b).ok_or_else(missing)?;
        self.edge_between(ia, ib).ok_or_else(missing)
    }

    pub fn edge_label(&self, e: usize) -> String {
        let [a, b] = self.edges[e];
        format!("{}-{}", self.names[a], self.names[b])
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Edge indices incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.adjacency[v].iter().map(|&w| self.edge_between(v, w).unwrap()).collect();
        out.sort_unstable();
        out
    }

    /// Per-vertex component label and the number of components. Components are
    /// numbered by their smallest vertex index.
    pub fn component_labels(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for &w in &self.adjacency[v] {
                    if label[w] == usize::MAX {
                        label[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    /// Vertex sets of the components, each ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let (label, count) = self.component_labels();
        let mut out = vec![Vec::new(); count];
        for (v, &c) in label.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    pub fn component_count(&self) -> usize {
        self.component_labels().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// First Betti number `|E| - |V| + #components`.
    pub fn cycle_rank(&self) -> usize {
        self.edge_count() + self.component_count() - self.vertex_count()
    }

    pub fn is_forest(&self) -> bool {
        self.cycle_rank() == 0
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.is_forest()
    }

    /// Connected path graph, including a single vertex.
    pub fn is_segment(&self) -> bool {
        self.vertex_count() > 0 && self.is_tree() && (0..self.vertex_count()).all(|v| self.degree(v) <= 2)
    }

    pub fn is_cycle(&self) -> bool {
        self.vertex_count() >= 3 && self.is_connected() && (0..self.vertex_count()).all(|v| self.degree(v) == 2)
    }

    /// Vertices of valence at least 3.
    pub fn essential_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.degree(v) >= 3).collect()
    }

    /// Induced subgraph on `keep` (any order). Returns the subgraph, whose
    /// vertices follow the parent's index order, and the map from new to old
    /// vertex indices.
    pub fn induced_subgraph(&self, keep: &[usize]) -> (FiniteGraph, Vec<usize>) {
        let mut mask = vec![false; self.vertex_count()];
        for &v in keep {
            mask[v] = true;
        }
        let old: Vec<usize> = (0..self.vertex_count()).filter(|&v| mask[v]).collect();
        let mut new_of = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in old.iter().enumerate() {
            new_of[v] = i;
        }
        let mut g = FiniteGraph::empty();
        for &v in &old {
            g.add_vertex(self.names[v].clone()).expect("ids already unique");
        }
        for &[a, b] in &self.edges {
            if mask[a] && mask[b] {
                g.add_edge(new_of[a], new_of[b]).expect("edges already simple");
            }
        }
        (g, old)
    }

    /// Same vertices, with the listed edges deleted (their interiors removed).
    pub fn remove_open_edges(&self, removed: &[usize]) -> Result<FiniteGraph, GraphError> {
        let mut drop = vec![false; self.edge_count()];
        for &e in removed {
            *drop.get_mut(e).ok_or(GraphError::EdgeOutOfRange(e))? = true;
        }
        let mut g = FiniteGraph::empty();
        for name in &self.names {
            g.add_vertex(name.clone()).expect("ids already unique");
        }
        for (i, &[a, b]) in self.edges.iter().enumerate() {
            if !drop[i] {
                g.add_edge(a, b).expect("edges already simple");
            }
        }
        Ok(g)
    }

    pub fn remove_open_edge(&self, e: usize) -> Result<FiniteGraph, GraphError> {
        self.remove_open_edges(&[e])
    }

    /// Induced subgraph on all vertices except the two endpoints of `e`.
    pub fn remove_closed_edge(&self, e: usize) -> Result<FiniteGraph, GraphError> {
        Ok(self.remove_closed_edge_with_map(e)?.0)
    }

    pub fn remove_closed_edge_with_map(&self, e: usize) -> Result<(FiniteGraph, Vec<usize>), GraphError> {
        let [a, b] = *self.edges.get(e).ok_or(GraphError::EdgeOutOfRange(e))?;
        let keep: Vec<usize> = (0..self.vertex_count()).filter(|&v| v != a && v != b).collect();
        Ok(self.induced_subgraph(&keep))
    }

    /// Sorted list of edges as id pairs; a relabelling-free identity key.
    pub fn edge_key(&self) -> Vec<(String, String)> {
        let mut key: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&[a, b]| {
                let (x, y) = (&self.names[a], &self.names[b]);
                if x <= y {
                    (x.clone(), y.clone())
                } else {
                    (y.clone(), x.clone())
                }
            })
            .collect();
        key.sort();
        key
    }

    /// Graphviz rendering with valence-3-or-more vertices highlighted.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (v, name) in self.names.iter().enumerate() {
            let style = if self.degree(v) >= 3 { " style=filled fillcolor=gold" } else { "" };
            let _ = writeln!(out, "  \"{}\" [label=\"{}\"{}];", esc(name), esc(name), style);
        }
        for &[a, b] in &self.edges {
            let _ = writeln!(out, "  \"{}\" -- \"{}\";", esc(&self.names[a]), esc(&self.names[b]));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn esc(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_smallest_segment() {
        let g = FiniteGraph::parse_json(r#"{"vertices":["a","b"],"edges":[["a","b"]]}"#).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert!(g.is_segment());
    }

    #[test]
    fn parses_star_valences() {
        let g = FiniteGraph::parse_json(r#"{"vertices":["c","x","y","z"],"edges":[["c","x"],["c","y"],["z","c"]]}"#)
            .unwrap();
        let valences: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
        assert_eq!(valences, vec![3, 1, 1, 1]);
    }

    #[test]
    fn parse_errors_name_the_element() {
        let loop_err = FiniteGraph::parse_json(r#"{"vertices":["a"],"edges":[["a","a"]]}"#);
        assert!(loop_err.unwrap_err().to_string().contains("loop"));
        let dup = FiniteGraph::parse_json(r#"{"vertices":["a","a"],"edges":[]}"#);
        assert_eq!(dup.unwrap_err(), GraphError::DuplicateVertex("a".into()));
        let unknown = FiniteGraph::parse_json(r#"{"vertices":["a"],"edges":[["a","q"]]}"#);
        assert_eq!(unknown.unwrap_err(), GraphError::UnknownVertex("q".into()));
        let multi = FiniteGraph::parse_json(r#"{"vertices":["a","b"],"edges":[["a","b"],["b","a"]]}"#);
        assert!(matches!(multi.unwrap_err(), GraphError::DuplicateEdge(..)));
        assert!(matches!(FiniteGraph::parse_json("{"), Err(GraphError::Malformed(_))));
    }

    #[test]
    fn json_round_trip() {
        let g = families::gamma_h();
        assert_eq!(FiniteGraph::parse_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn open_edge_removal() {
        let tri = families::cycle(3);
        let e = tri.find_edge("c0", "c1").unwrap();
        let p = tri.remove_open_edge(e).unwrap();
        assert!(p.is_segment());
        assert_eq!(p.vertex_count(), 3);

        let seg = families::segment(2);
        let bare = seg.remove_open_edge(0).unwrap();
        assert_eq!((bare.vertex_count(), bare.edge_count()), (2, 0));
        assert!(seg.remove_open_edge(5).is_err());
    }

    #[test]
    fn closed_edge_removal() {
        let p = families::segment(5);
        let e = p.find_edge("s1", "s2").unwrap();
        let h = p.remove_closed_edge(e).unwrap();
        let comps: Vec<Vec<&str>> = h.components().iter().map(|c| c.iter().map(|&v| h.name(v)).collect()).collect();
        assert_eq!(comps, vec![vec!["s0"], vec!["s3", "s4"]]);

        let tri = families::cycle(3);
        assert_eq!(tri.remove_closed_edge(0).unwrap().vertex_count(), 1);
    }

    #[test]
    fn closed_removal_is_induced_in_open_removal() {
        let g = families::gamma_theta();
        for e in 0..g.edge_count() {
            let open = g.remove_open_edge(e).unwrap();
            let (closed, map) = g.remove_closed_edge_with_map(e).unwrap();
            let (induced, _) = open.induced_subgraph(&map);
            assert_eq!(closed, induced);
        }
    }

    #[test]
    fn dot_highlights_essential_vertices() {
        let dot = families::star(&[1, 1, 1]).to_dot();
        assert_eq!(dot.matches("fillcolor").count(), 1);
    }
}
