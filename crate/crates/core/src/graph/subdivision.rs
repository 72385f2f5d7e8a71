//! Topological branches and the subdivision conditions under which the
//! discrete configuration space carries the full braid group.
//!
//! For `n` particles the conditions are: every path between distinct vertices
//! of valence other than 2 has length at least `n - 1`, and every cycle has
//! length at least `n + 1`. The shortest such path is always a single branch,
//! so checking branches suffices for the first condition.

use serde::Serialize;

use super::{enumerate_simple_cycles, FiniteGraph};

/// A maximal path whose interior vertices all have valence 2. A branch whose
/// two ends coincide is closed (a loop at an essential vertex, or a whole
/// cycle component).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Branch {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }
}

/// Decomposes the edge set into branches, starting from vertices of valence
/// other than 2 in index order, then closing pure cycle components.
pub fn branches(g: &FiniteGraph) -> Vec<Branch> {
    let mut used = vec![false; g.edge_count()];
    let mut out = Vec::new();
    let walk = |start: usize, first: usize, used: &mut Vec<bool>| -> Branch {
        let mut vertices = vec![start, first];
        let mut edges = vec![g.edge_between(start, first).unwrap()];
        used[edges[0]] = true;
        let (mut prev, mut cur) = (start, first);
        while g.degree(cur) == 2 && cur != start {
            let nb = g.neighbors(cur);
            let next = if nb[0] == prev { nb[1] } else { nb[0] };
            let e = g.edge_between(cur, next).unwrap();
            used[e] = true;
            edges.push(e);
            vertices.push(next);
            prev = cur;
            cur = next;
        }
        Branch { vertices, edges }
    };
    for v in 0..g.vertex_count() {
        if g.degree(v) == 2 {
            continue;
        }
        for &w in g.neighbors(v) {
            if !used[g.edge_between(v, w).unwrap()] {
                out.push(walk(v, w, &mut used));
            }
        }
    }
    for v in 0..g.vertex_count() {
        if let Some(&w) = g.neighbors(v).iter().find(|&&w| !used[g.edge_between(v, w).unwrap()]) {
            out.push(walk(v, w, &mut used));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// A branch between distinct essential vertices shorter than `n - 1`.
    ShortPath { from: String, to: String, length: usize, required: usize },
    /// A cycle shorter than `n + 1`.
    ShortCycle { vertices: Vec<String>, length: usize, required: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubdivisionReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

struct Offence {
    violation: Violation,
    edge: usize,
}

fn offences(g: &FiniteGraph, n: usize) -> Vec<Offence> {
    let mut out = Vec::new();
    let path_min = n.saturating_sub(1);
    for b in branches(g) {
        let (s, t) = b.ends();
        if s != t && b.len() < path_min {
            out.push(Offence {
                violation: Violation::ShortPath {
                    from: g.name(s).to_string(),
                    to: g.name(t).to_string(),
                    length: b.len(),
                    required: path_min,
                },
                edge: b.edges[0],
            });
        }
    }
    for cycle in enumerate_simple_cycles(g, Some(n)) {
        let edge =
            (0..cycle.len()).map(|i| g.edge_between(cycle[i], cycle[(i + 1) % cycle.len()]).unwrap()).min().unwrap();
        out.push(Offence {
            violation: Violation::ShortCycle {
                vertices: cycle.iter().map(|&v| g.name(v).to_string()).collect(),
                length: cycle.len(),
                required: n + 1,
            },
            edge,
        });
    }
    out
}

pub fn check_subdivision(g: &FiniteGraph, n: usize) -> SubdivisionReport {
    let violations: Vec<Violation> = offences(g, n).into_iter().map(|o| o.violation).collect();
    SubdivisionReport { ok: violations.is_empty(), violations }
}

/// Inserts `k` valence-2 vertices into each listed edge. New vertices are
/// appended after the existing ones and named `"<u>|<v>#<i>"`.
pub fn subdivide_edges(g: &FiniteGraph, targets: &[usize], k: usize) -> FiniteGraph {
    let mut hit = vec![false; g.edge_count()];
    for &e in targets {
        hit[e] = true;
    }
    let mut vertices: Vec<String> = g.names().to_vec();
    let mut taken: std::collections::HashSet<String> = vertices.iter().cloned().collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    for (e, &[a, b]) in g.edges().iter().enumerate() {
        let (u, v) = (g.name(a).to_string(), g.name(b).to_string());
        if !hit[e] || k == 0 {
            edges.push((u, v));
            continue;
        }
        let mut prev = u.clone();
        for i in 1..=k {
            let mut id = format!("{u}|{v}#{i}");
            while taken.contains(&id) {
                id.push('\'');
            }
            taken.insert(id.clone());
            vertices.push(id.clone());
            edges.push((prev, id.clone()));
            prev = id;
        }
        edges.push((prev, v));
    }
    FiniteGraph::new(vertices, edges).expect("subdivision preserves simplicity")
}

pub fn subdivide_edge(g: &FiniteGraph, e: usize, k: usize) -> FiniteGraph {
    subdivide_edges(g, &[e], k)
}

/// Repeatedly inserts `n` vertices into the first edge of every offending
/// branch or short cycle until both conditions hold.
pub fn sufficient_subdivision(g: &FiniteGraph, n: usize) -> FiniteGraph {
    let mut cur = g.clone();
    loop {
        let mut targets: Vec<usize> = offences(&cur, n).into_iter().map(|o| o.edge).collect();
        if targets.is_empty() {
            return cur;
        }
        targets.sort_unstable();
        targets.dedup();
        cur = subdivide_edges(&cur, &targets, n.max(1));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, families};

    #[test]
    fn star_conditions() {
        let r3 = families::star(&[1, 1, 1]);
        assert!(check_subdivision(&r3, 2).ok);
        let rep = check_subdivision(&r3, 3);
        assert!(!rep.ok);
        assert_eq!(rep.violations.len(), 3);
    }

    #[test]
    fn triangle_boundary_case() {
        let tri = families::cycle(3);
        assert!(check_subdivision(&tri, 2).ok);
        let rep = check_subdivision(&tri, 3);
        assert_eq!(
            rep.violations,
            vec![Violation::ShortCycle {
                vertices: vec!["c0".into(), "c1".into(), "c2".into()],
                length: 3,
                required: 4
            }]
        );
    }

    #[test]
    fn branches_cover_every_edge_once() {
        for g in [families::gamma_theta(), families::gamma_a(), families::cycle(5), families::gamma_q(2)] {
            let mut seen = vec![0; g.edge_count()];
            for b in branches(&g) {
                for e in b.edges {
                    seen[e] += 1;
                }
            }
            assert!(seen.iter().all(|&c| c == 1));
        }
    }

    #[test]
    fn subdivided_star_passes() {
        let r3 = families::star(&[1, 1, 1]);
        let s = sufficient_subdivision(&r3, 3);
        assert!(check_subdivision(&s, 3).ok);
        assert_eq!(s.vertex_count(), 4 + 3 * 3);
        assert!(s.index_of("o|p0_1#2").is_some());
    }

    #[test]
    fn valid_graph_is_a_fixed_point() {
        let g = families::gamma_theta();
        assert_eq!(sufficient_subdivision(&g, 4), g);
    }

    #[test]
    fn gamma_h_subdivision_matches_double_prime() {
        let s = sufficient_subdivision(&families::gamma_h(), 4);
        assert!(check_subdivision(&s, 4).ok);
        assert_eq!(s.vertex_count(), 24);
        assert!(are_isomorphic(&s, &families::gamma_h_double_prime()));
    }

    #[test]
    fn homeomorphism_invariants_preserved() {
        let graphs = [
            families::gamma_h(),
            families::gamma_a(),
            families::gamma_theta(),
            families::cycle(3),
            families::star(&[1, 1, 1, 1]),
            families::flower(&[3, 4], &[1]),
        ];
        for g in &graphs {
            for n in 1..=5 {
                let s = sufficient_subdivision(g, n);
                assert!(check_subdivision(&s, n).ok);
                let ess = |h: &FiniteGraph| {
                    let mut d: Vec<usize> = h.essential_vertices().iter().map(|&v| h.degree(v)).collect();
                    d.sort_unstable();
                    d
                };
                assert_eq!(ess(g), ess(&s));
                assert_eq!(g.cycle_rank(), s.cycle_rank());
            }
        }
    }
}
