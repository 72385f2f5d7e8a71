//! Named strategies for identifying reduced braid groups.
//!
//! A [`Resolver`] first splits a query over the components of the graph
//! (the braid group of a disjoint union is the product of the pieces), then
//! offers each connected piece to the registered strategies in order. The
//! first answer wins; if none answers, the group stays opaque. Results are
//! memoized by canonical form, so isomorphic subproblems are solved once.

use std::cell::{Cell, RefCell};

use rustc_hash::FxHashMap;

use super::formulas::star_rank;
use super::{CutGeometry, GogError, GroupDescriptor};
use crate::graph::{canonical_form, triviality_criterion, BraidTriviality, CanonicalForm, FiniteGraph};

/// `n` particles on a connected graph.
pub struct BraidQuery<'a> {
    pub graph: &'a FiniteGraph,
    pub n: usize,
}

pub trait GroupStrategy: Send + Sync {
    fn name(&self) -> &'static str;
    fn summary(&self) -> &'static str;
    fn resolve(&self, q: &BraidQuery<'_>, resolver: &Resolver<'_>) -> Option<GroupDescriptor>;
}

pub struct StrategyRegistry {
    strategies: Vec<Box<dyn GroupStrategy>>,
}

impl Default for StrategyRegistry {
    fn default() -> Self {
        Self::with_defaults()
    }
}

impl StrategyRegistry {
    pub fn empty() -> Self {
        Self { strategies: Vec::new() }
    }

    /// Every built-in strategy, cheapest first.
    pub fn with_defaults() -> Self {
        let mut r = Self::empty();
        for s in builtin() {
            r.register(s);
        }
        r
    }

    /// Built-in strategies selected by name, in the given order.
    pub fn from_names<S: AsRef<str>>(names: &[S]) -> Result<Self, GogError> {
        let mut r = Self::empty();
        for name in names {
            let name = name.as_ref().trim();
            let s = builtin()
                .into_iter()
                .find(|s| s.name() == name)
                .ok_or_else(|| GogError::UnknownStrategy(name.to_string()))?;
            r.register(s);
        }
        Ok(r)
    }

    pub fn register(&mut self, s: Box<dyn GroupStrategy>) {
        self.strategies.push(s);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.strategies.iter().map(|s| s.name()).collect()
    }

    pub fn available() -> Vec<(&'static str, &'static str)> {
        builtin().iter().map(|s| (s.name(), s.summary())).collect()
    }
}

fn builtin() -> Vec<Box<dyn GroupStrategy>> {
    vec![
        Box::new(TrivialCriterion),
        Box::new(SingleParticle),
        Box::new(CycleGraph),
        Box::new(ComplementDuality),
        Box::new(RadialTree),
        Box::new(RecursiveDecomposition),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution {
    pub group: GroupDescriptor,
    /// Strategy that answered, or `None` for opaque results.
    pub strategy: Option<&'static str>,
}

pub struct Resolver<'a> {
    registry: &'a StrategyRegistry,
    memo: RefCell<FxHashMap<(CanonicalForm, usize), Resolution>>,
    depth: Cell<usize>,
    max_depth: usize,
}

impl<'a> Resolver<'a> {
    pub fn new(registry: &'a StrategyRegistry) -> Self {
        Self { registry, memo: RefCell::default(), depth: Cell::new(0), max_depth: 48 }
    }

    pub fn registry(&self) -> &StrategyRegistry {
        self.registry
    }

    /// `RB_n(g, S)` where `partition[c]` particles sit in component `c`.
    pub fn resolve(&self, g: &FiniteGraph, partition: &[usize]) -> GroupDescriptor {
        let comps = g.components();
        assert_eq!(comps.len(), partition.len(), "partition must cover every component");
        let factors = comps
            .iter()
            .zip(partition)
            .filter(|(_, &m)| m > 0)
            .map(|(c, &m)| self.resolve_connected(&g.induced_subgraph(c).0, m).group)
            .collect();
        GroupDescriptor::DirectProduct { factors }.simplify()
    }

    pub fn resolve_connected(&self, g: &FiniteGraph, n: usize) -> Resolution {
        if n == 0 {
            return Resolution { group: GroupDescriptor::Trivial, strategy: Some("empty") };
        }
        let key = (canonical_form(g), n);
        if let Some(r) = self.memo.borrow().get(&key) {
            return r.clone();
        }
        let opaque = Resolution {
            group: GroupDescriptor::BraidOpaque {
                graph: format!("{}v{}e", g.vertex_count(), g.edge_count()),
                vertices: g.vertex_count(),
                n,
                partition: vec![n],
            },
            strategy: None,
        };
        if self.depth.get() >= self.max_depth {
            return opaque;
        }
        self.depth.set(self.depth.get() + 1);
        let q = BraidQuery { graph: g, n };
        let found = self.registry.strategies.iter().find_map(|s| s.resolve(&q, self).map(|d| (d, s.name())));
        self.depth.set(self.depth.get() - 1);
        let out = match found {
            Some((group, name)) => Resolution { group: group.simplify(), strategy: Some(name) },
            None => opaque,
        };
        if !out.group.is_opaque() {
            self.memo.borrow_mut().insert(key, out.clone());
        }
        out
    }
}

/// Cheap sufficient test for triviality of `RB(g, S)`: each occupied
/// component is trivial by the criterion, full, or has a trivially
/// resolvable complement.
pub(crate) fn quick_trivial(g: &FiniteGraph, partition: &[usize]) -> bool {
    g.components().iter().zip(partition).all(|(c, &m)| {
        if m == 0 || m == c.len() {
            return true;
        }
        let sub = g.induced_subgraph(c).0;
        let ok = |k: usize| triviality_criterion(&sub, k, &[k]) == Ok(BraidTriviality::Trivial);
        ok(m) || ok(c.len() - m)
    })
}

/// Segments, and anything else the infinite-diameter lemma rules trivial, plus
/// full graphs (a single configuration).
pub struct TrivialCriterion;

impl GroupStrategy for TrivialCriterion {
    fn name(&self) -> &'static str {
        "trivial-criterion"
    }
    fn summary(&self) -> &'static str {
        "trivial when no cycle is occupied and no branch point can hold two particles"
    }
    fn resolve(&self, q: &BraidQuery<'_>, _: &Resolver<'_>) -> Option<GroupDescriptor> {
        let trivial =
            q.n == q.graph.vertex_count() || triviality_criterion(q.graph, q.n, &[q.n]) == Ok(BraidTriviality::Trivial);
        trivial.then_some(GroupDescriptor::Trivial)
    }
}

/// One particle: `UC_1` is the graph itself.
pub struct SingleParticle;

impl GroupStrategy for SingleParticle {
    fn name(&self) -> &'static str {
        "single-particle"
    }
    fn summary(&self) -> &'static str {
        "one particle: free of rank equal to the cycle rank"
    }
    fn resolve(&self, q: &BraidQuery<'_>, _: &Resolver<'_>) -> Option<GroupDescriptor> {
        (q.n == 1).then(|| GroupDescriptor::Free { rank: q.graph.cycle_rank() })
    }
}

/// Particles on a cycle can only rotate together.
pub struct CycleGraph;

impl GroupStrategy for CycleGraph {
    fn name(&self) -> &'static str {
        "cycle"
    }
    fn summary(&self) -> &'static str {
        "fewer particles than vertices on a cycle: Z"
    }
    fn resolve(&self, q: &BraidQuery<'_>, _: &Resolver<'_>) -> Option<GroupDescriptor> {
        (q.graph.is_cycle() && q.n < q.graph.vertex_count()).then(GroupDescriptor::z)
    }
}

/// `UC_n(G)` and `UC_{|V|-n}(G)` are isomorphic by swapping occupied and empty
/// vertices; use the side with fewer particles.
pub struct ComplementDuality;

impl GroupStrategy for ComplementDuality {
    fn name(&self) -> &'static str {
        "complement-duality"
    }
    fn summary(&self) -> &'static str {
        "swap particles and holes when holes are fewer"
    }
    fn resolve(&self, q: &BraidQuery<'_>, r: &Resolver<'_>) -> Option<GroupDescriptor> {
        let holes = q.graph.vertex_count() - q.n;
        if holes >= q.n {
            return None;
        }
        let res = r.resolve_connected(q.graph, holes);
        (!res.group.is_opaque()).then_some(res.group)
    }
}

/// Trees with a single branch point have free braid groups whose rank is read
/// off the Euler characteristic.
pub struct RadialTree;

impl GroupStrategy for RadialTree {
    fn name(&self) -> &'static str {
        "radial-tree"
    }
    fn summary(&self) -> &'static str {
        "tree with one branch point: free of rank 1 - chi(UC_n)"
    }
    fn resolve(&self, q: &BraidQuery<'_>, _: &Resolver<'_>) -> Option<GroupDescriptor> {
        star_rank(q.graph, q.n).map(|rank| GroupDescriptor::Free { rank })
    }
}

/// Splits along a single edge and resolves the pieces recursively. Cuts whose
/// links are all trivial give free products directly; otherwise a one-node,
/// one-link cut gives an HNN extension, and any fully resolved cut gives a
/// symbolic graph of groups.
pub struct RecursiveDecomposition;

struct Candidate {
    nodes: Vec<GroupDescriptor>,
    links: Vec<GroupDescriptor>,
}

impl RecursiveDecomposition {
    fn evaluate(q: &BraidQuery<'_>, r: &Resolver<'_>, e: usize, links_trivial: bool) -> Option<Candidate> {
        let geo = CutGeometry::new(q.graph, q.n, &[e]).ok()?;
        let hyperplanes = geo.hyperplane_signatures(0);
        let sub = geo.link_graph(0);
        if links_trivial && !hyperplanes.iter().all(|h| quick_trivial(sub, &h.remainder)) {
            return None;
        }
        let mut nodes = Vec::new();
        for k in geo.node_signatures() {
            let g = r.resolve(geo.cut_graph(), &k);
            if g.is_opaque() {
                return None;
            }
            nodes.push(g);
        }
        let mut links = Vec::new();
        for h in &hyperplanes {
            let g = if links_trivial { GroupDescriptor::Trivial } else { r.resolve(sub, &h.remainder) };
            if g.is_opaque() {
                return None;
            }
            links.push(g);
        }
        Some(Candidate { nodes, links })
    }
}

impl GroupStrategy for RecursiveDecomposition {
    fn name(&self) -> &'static str {
        "recursive-decomposition"
    }
    fn summary(&self) -> &'static str {
        "cut one edge, resolve node and link groups recursively"
    }
    fn resolve(&self, q: &BraidQuery<'_>, r: &Resolver<'_>) -> Option<GroupDescriptor> {
        if q.n < 2 {
            return None;
        }
        let edges = 0..q.graph.edge_count();
        for e in edges.clone() {
            if let Some(c) = Self::evaluate(q, r, e, true) {
                let loops = c.links.len() + 1 - c.nodes.len();
                let mut factors = c.nodes;
                factors.push(GroupDescriptor::Free { rank: loops });
                return Some(GroupDescriptor::FreeProduct { factors });
            }
        }
        let mut fallback = None;
        for e in edges {
            if let Some(c) = Self::evaluate(q, r, e, false) {
                if c.nodes.len() == 1 && c.links.len() == 1 {
                    let (base, edge) = (c.nodes.into_iter().next()?, c.links.into_iter().next()?);
                    return Some(GroupDescriptor::Hnn { base: Box::new(base), edge: Box::new(edge) });
                }
                if fallback.is_none() {
                    let loops = c.links.len() + 1 - c.nodes.len();
                    fallback = Some(GroupDescriptor::GraphOfGroups { nodes: c.nodes, links: c.links, loops });
                }
            }
        }
        fallback
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn resolve(g: &FiniteGraph, n: usize) -> String {
        let reg = StrategyRegistry::with_defaults();
        Resolver::new(&reg).resolve_connected(g, n).group.to_string()
    }

    #[test]
    fn small_reduced_groups() {
        assert_eq!(resolve(&families::segment(5), 3), "1");
        assert_eq!(resolve(&families::cycle(6), 3), "Z");
        assert_eq!(resolve(&families::star(&[1, 1, 1]), 2), "Z");
        assert_eq!(resolve(&families::star(&[1, 1, 1]), 3), "1");
        assert_eq!(resolve(&families::gamma_h(), 4), "Z^2");
        assert_eq!(resolve(&families::gamma_a(), 4), "Z * Z^2");
    }

    #[test]
    fn unknown_names_are_rejected() {
        assert!(matches!(StrategyRegistry::from_names(&["cycle", "nope"]), Err(GogError::UnknownStrategy(_))));
        let r = StrategyRegistry::from_names(&["cycle"]).unwrap();
        assert_eq!(r.names(), vec!["cycle"]);
    }

    #[test]
    fn restricted_registry_leaves_groups_opaque() {
        let reg = StrategyRegistry::from_names(&["trivial-criterion"]).unwrap();
        let res = Resolver::new(&reg).resolve_connected(&families::cycle(5), 2);
        assert!(res.group.is_opaque());
        assert_eq!(res.strategy, None);
    }
}
