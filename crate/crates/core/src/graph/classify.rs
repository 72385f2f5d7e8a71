//! Classification into the named graph families.
//!
//! Families overlap, so the first match in the order segment, cycle, radial
//! tree, generalised theta, flower, sun, pulsar, other tree, other wins.

use serde::Serialize;

use super::{branches, canonical_form, Branch, FiniteGraph, GraphError};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum GraphTag {
    Segment,
    Cycle,
    RadialTree { k: usize },
    GeneralisedTheta { m: usize },
    Flower,
    Sun,
    Pulsar,
    TreeOther,
    Other,
}

/// The parts whose gluing reproduces the graph. Paths and cycles are vertex
/// id sequences; cycles do not repeat their first vertex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub centers: Vec<String>,
    pub cycles: Vec<Vec<String>>,
    pub segments: Vec<Vec<String>>,
    pub arcs: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub tag: GraphTag,
    pub witness: Witness,
    /// Whether the graph also fits the flower definition (segments and cycles
    /// count as degenerate flowers).
    pub flower_compatible: bool,
}

fn names(g: &FiniteGraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.name(v).to_string()).collect()
}

fn split_branches(g: &FiniteGraph, bs: &[Branch]) -> (Vec<Vec<String>>, Vec<Vec<String>>) {
    let mut cycles = Vec::new();
    let mut segments = Vec::new();
    for b in bs {
        if b.is_closed() {
            cycles.push(names(g, &b.vertices[..b.vertices.len() - 1]));
        } else {
            segments.push(names(g, &b.vertices));
        }
    }
    (cycles, segments)
}

fn segment_order(g: &FiniteGraph) -> Vec<usize> {
    let start = (0..g.vertex_count()).find(|&v| g.degree(v) <= 1).unwrap_or(0);
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = g.neighbors(cur).iter().find(|&&w| w != prev) {
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Centre of a flower: the unique valence-3-or-more vertex when every branch
/// is a loop at it or runs from it to a leaf.
fn flower_center(g: &FiniteGraph, bs: &[Branch]) -> Option<usize> {
    let ess = g.essential_vertices();
    if ess.len() != 1 {
        return None;
    }
    let c = ess[0];
    let ok = bs.iter().all(|b| {
        let (s, t) = b.ends();
        (s == c && t == c) || (s == c && g.degree(t) == 1) || (t == c && g.degree(s) == 1)
    });
    ok.then_some(c)
}

pub fn classify(g: &FiniteGraph) -> Result<GraphClass, GraphError> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    let bs = branches(g);
    let ess = g.essential_vertices();
    let flower = flower_center(g, &bs);
    let flower_compatible = g.is_segment() || g.is_cycle() || flower.is_some();
    let mut witness = Witness::default();
    let class = |tag, witness| Ok(GraphClass { tag, witness, flower_compatible });

    if g.is_segment() {
        witness.segments.push(names(g, &segment_order(g)));
        return class(GraphTag::Segment, witness);
    }
    if g.is_cycle() {
        let (cycles, _) = split_branches(g, &bs);
        witness.cycles = cycles;
        return class(GraphTag::Cycle, witness);
    }
    if g.is_tree() && ess.len() == 1 {
        let (_, segments) = split_branches(g, &bs);
        witness.centers.push(g.name(ess[0]).to_string());
        witness.segments = segments;
        return class(GraphTag::RadialTree { k: g.degree(ess[0]) }, witness);
    }
    if let Some((x, y)) = theta_poles(g, &bs) {
        witness.centers = names(g, &[x, y]);
        witness.arcs = bs.iter().map(|b| names(g, &b.vertices)).collect();
        return class(GraphTag::GeneralisedTheta { m: g.degree(x) - 1 }, witness);
    }
    if let Some(c) = flower {
        let (cycles, segments) = split_branches(g, &bs);
        witness.centers.push(g.name(c).to_string());
        witness.cycles = cycles;
        witness.segments = segments;
        return class(GraphTag::Flower, witness);
    }
    if let Some(cycle) = sun_cycle(g) {
        let on_cycle: Vec<bool> = (0..g.vertex_count()).map(|v| cycle.contains(&v)).collect();
        witness.cycles.push(names(g, &cycle));
        witness.segments =
            bs.iter().filter(|b| b.vertices.iter().any(|&v| !on_cycle[v])).map(|b| names(g, &b.vertices)).collect();
        return class(GraphTag::Sun, witness);
    }
    if let Some((x, y)) = pulsar_poles(g, &bs) {
        let is_arc = |b: &Branch| b.ends() == (x, y) || b.ends() == (y, x);
        witness.centers = names(g, &[x, y]);
        witness.arcs = bs.iter().filter(|b| is_arc(b)).map(|b| names(g, &b.vertices)).collect();
        witness.segments = bs.iter().filter(|b| !is_arc(b)).map(|b| names(g, &b.vertices)).collect();
        return class(GraphTag::Pulsar, witness);
    }
    let (cycles, segments) = split_branches(g, &bs);
    witness.centers = names(g, &ess);
    witness.cycles = cycles;
    witness.segments = segments;
    if g.is_tree() {
        return class(GraphTag::TreeOther, witness);
    }
    class(GraphTag::Other, witness)
}

/// The two poles of a generalised theta graph: two vertices of equal valence
/// at least 3 joined by every branch.
fn theta_poles(g: &FiniteGraph, bs: &[Branch]) -> Option<(usize, usize)> {
    let ess = g.essential_vertices();
    let &[x, y] = ess.as_slice() else { return None };
    let all_arcs = bs.iter().all(|b| b.ends() == (x, y) || b.ends() == (y, x));
    (all_arcs && g.degree(x) == g.degree(y)).then_some((x, y))
}

/// The two poles of a pulsar: every branch joins them or runs from one of
/// them to a leaf, with at least one branch joining them.
fn pulsar_poles(g: &FiniteGraph, bs: &[Branch]) -> Option<(usize, usize)> {
    let ess = g.essential_vertices();
    let &[x, y] = ess.as_slice() else { return None };
    let pole = |v: usize| v == x || v == y;
    let mut arcs = 0;
    for b in bs {
        let (s, t) = b.ends();
        if pole(s) && pole(t) && s != t {
            arcs += 1;
        } else if !((pole(s) && g.degree(t) == 1) || (pole(t) && g.degree(s) == 1)) {
            return None;
        }
    }
    (arcs > 0).then_some((x, y))
}

/// The cycle of a sun: a unicyclic graph whose off-cycle vertices have
/// valence at most 2, so that everything off the cycle is a pendant path.
fn sun_cycle(g: &FiniteGraph) -> Option<Vec<usize>> {
    if g.cycle_rank() != 1 {
        return None;
    }
    let cycle = super::enumerate_simple_cycles(g, None).into_iter().next()?;
    let ok = (0..g.vertex_count()).all(|v| cycle.contains(&v) || g.degree(v) <= 2);
    ok.then_some(cycle)
}

/// Glues the witness parts back together.
pub fn rebuild_from_witness(w: &Witness) -> Result<FiniteGraph, GraphError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String)> = Vec::new();
    let add_v = |v: &String, vertices: &mut Vec<String>| {
        if !vertices.contains(v) {
            vertices.push(v.clone());
        }
    };
    let add_e = |a: &String, b: &String, edges: &mut Vec<(String, String)>| {
        if !edges.iter().any(|(x, y)| (x == a && y == b) || (x == b && y == a)) {
            edges.push((a.clone(), b.clone()));
        }
    };
    for c in &w.centers {
        add_v(c, &mut vertices);
    }
    for path in w.segments.iter().chain(&w.arcs) {
        for v in path {
            add_v(v, &mut vertices);
        }
        for pair in path.windows(2) {
            add_e(&pair[0], &pair[1], &mut edges);
        }
    }
    for cyc in &w.cycles {
        for v in cyc {
            add_v(v, &mut vertices);
        }
        for i in 0..cyc.len() {
            add_e(&cyc[i], &cyc[(i + 1) % cyc.len()], &mut edges);
        }
    }
    FiniteGraph::new(vertices, edges)
}

impl GraphClass {
    /// Re-glues the witness and compares canonical forms with `g`.
    pub fn round_trips(&self, g: &FiniteGraph) -> bool {
        rebuild_from_witness(&self.witness).map(|h| canonical_form(&h) == canonical_form(g)).unwrap_or(false)
    }
}
