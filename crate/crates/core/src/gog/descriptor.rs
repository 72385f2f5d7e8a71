//! Symbolic descriptions of the groups attached to nodes and links.

use std::fmt;

use serde::Serialize;

use crate::combinatorics::binomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupDescriptor {
    Trivial,
    Free {
        rank: usize,
    },
    FreeAbelian {
        rank: usize,
    },
    DirectProduct {
        factors: Vec<GroupDescriptor>,
    },
    FreeProduct {
        factors: Vec<GroupDescriptor>,
    },
    /// HNN extension of `base` along a subgroup isomorphic to `edge`.
    Hnn {
        base: Box<GroupDescriptor>,
        edge: Box<GroupDescriptor>,
    },
    /// Fundamental group of a graph of groups with nontrivial links, kept
    /// symbolic; `loops` is the first Betti number of the underlying graph.
    GraphOfGroups {
        nodes: Vec<GroupDescriptor>,
        links: Vec<GroupDescriptor>,
        loops: usize,
    },
    /// A reduced braid group no strategy could identify.
    BraidOpaque {
        graph: String,
        vertices: usize,
        n: usize,
        partition: Vec<usize>,
    },
}

use GroupDescriptor as G;

impl GroupDescriptor {
    pub fn z() -> Self {
        G::Free { rank: 1 }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self, G::Trivial)
    }

    pub fn is_opaque(&self) -> bool {
        match self {
            G::BraidOpaque { .. } => true,
            G::DirectProduct { factors } | G::FreeProduct { factors } => factors.iter().any(G::is_opaque),
            G::Hnn { base, edge } => base.is_opaque() || edge.is_opaque(),
            G::GraphOfGroups { nodes, links, .. } => nodes.iter().chain(links).any(G::is_opaque),
            _ => false,
        }
    }

    /// Rank of the free part when the group is a free product with a free
    /// factor (including a free group itself).
    pub fn free_factor_rank(&self) -> usize {
        match self {
            G::Free { rank } => *rank,
            G::FreeProduct { factors } => factors.iter().map(G::free_factor_rank).sum(),
            _ => 0,
        }
    }

    /// Applies the collapsing rules until nothing changes.
    pub fn simplify(self) -> Self {
        match self {
            G::Free { rank: 0 } | G::FreeAbelian { rank: 0 } => G::Trivial,
            G::FreeAbelian { rank: 1 } => G::z(),
            G::DirectProduct { factors } => {
                let mut flat = Vec::new();
                for f in factors.into_iter().map(G::simplify) {
                    match f {
                        G::Trivial => {}
                        G::DirectProduct { factors } => flat.extend(factors),
                        other => flat.push(other),
                    }
                }
                let abelian_rank = |f: &G| match f {
                    G::Free { rank: 1 } => Some(1),
                    G::FreeAbelian { rank } => Some(*rank),
                    _ => None,
                };
                if flat.iter().all(|f| abelian_rank(f).is_some()) {
                    return G::FreeAbelian { rank: flat.iter().filter_map(abelian_rank).sum() }.simplify();
                }
                if flat.len() == 1 {
                    return flat.pop().unwrap();
                }
                G::DirectProduct { factors: flat }
            }
            G::FreeProduct { factors } => {
                let mut free = 0;
                let mut rest = Vec::new();
                for f in factors.into_iter().map(G::simplify) {
                    match f {
                        G::Trivial => {}
                        G::Free { rank } => free += rank,
                        G::FreeProduct { factors } => {
                            for g in factors {
                                match g {
                                    G::Free { rank } => free += rank,
                                    other => rest.push(other),
                                }
                            }
                        }
                        other => rest.push(other),
                    }
                }
                rest.sort_by_key(|f| f.to_string());
                let mut out = Vec::with_capacity(rest.len() + 1);
                if free > 0 {
                    out.push(G::Free { rank: free });
                }
                out.extend(rest);
                match out.len() {
                    0 => G::Trivial,
                    1 => out.pop().unwrap(),
                    _ => G::FreeProduct { factors: out },
                }
            }
            G::Hnn { base, edge } => {
                let (base, edge) = (base.simplify(), edge.simplify());
                if edge.is_trivial() {
                    // An HNN extension over the trivial group is a free product with Z.
                    return G::FreeProduct { factors: vec![base, G::z()] }.simplify();
                }
                G::Hnn { base: Box::new(base), edge: Box::new(edge) }
            }
            G::GraphOfGroups { nodes, links, loops } => G::GraphOfGroups {
                nodes: nodes.into_iter().map(G::simplify).collect(),
                links: links.into_iter().map(G::simplify).collect(),
                loops,
            },
            other => other,
        }
    }

    /// Betti numbers of the group, when determined by the description alone.
    /// Uses Künneth for products and additivity in positive degrees for free
    /// products; all building blocks here have torsion-free homology.
    pub fn betti(&self) -> Option<Vec<usize>> {
        let out = match self {
            G::Trivial => vec![1],
            G::Free { rank } => vec![1, *rank],
            G::FreeAbelian { rank } => (0..=*rank).map(|k| binomial(*rank as u64, k as u64) as usize).collect(),
            G::DirectProduct { factors } => {
                let mut acc = vec![1usize];
                for f in factors {
                    let b = f.betti()?;
                    let mut next = vec![0; acc.len() + b.len() - 1];
                    for (i, x) in acc.iter().enumerate() {
                        for (j, y) in b.iter().enumerate() {
                            next[i + j] += x * y;
                        }
                    }
                    acc = next;
                }
                acc
            }
            G::FreeProduct { factors } => {
                let mut acc = vec![1usize];
                for f in factors {
                    let b = f.betti()?;
                    if b.len() > acc.len() {
                        acc.resize(b.len(), 0);
                    }
                    for (k, x) in b.iter().enumerate().skip(1) {
                        acc[k] += x;
                    }
                }
                acc
            }
            _ => return None,
        };
        let mut out = out;
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        Some(out)
    }

    /// Euler characteristic, when determined: additive over graphs of groups
    /// (`sum over nodes - sum over links`), multiplicative over products.
    pub fn euler(&self) -> Option<i64> {
        match self {
            G::Trivial => Some(1),
            G::Free { rank } => Some(1 - *rank as i64),
            G::FreeAbelian { rank } => Some(if *rank == 0 { 1 } else { 0 }),
            G::DirectProduct { factors } => factors.iter().map(G::euler).product(),
            G::FreeProduct { factors } => {
                let parts: Option<Vec<i64>> = factors.iter().map(G::euler).collect();
                let parts = parts?;
                Some(parts.iter().sum::<i64>() - (parts.len() as i64 - 1))
            }
            G::Hnn { base, edge } => Some(base.euler()? - edge.euler()?),
            G::GraphOfGroups { nodes, links, .. } => {
                let v: Option<i64> = nodes.iter().map(G::euler).sum();
                let e: Option<i64> = links.iter().map(G::euler).sum();
                Some(v? - e?)
            }
            G::BraidOpaque { .. } => None,
        }
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, inside: bool) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, parts: &[G], sep: &str| -> fmt::Result {
            if inside {
                write!(f, "(")?;
            }
            for (i, p) in parts.iter().enumerate() {
                if i > 0 {
                    write!(f, "{sep}")?;
                }
                p.render(f, true)?;
            }
            if inside {
                write!(f, ")")?;
            }
            Ok(())
        };
        match self {
            G::Trivial => write!(f, "1"),
            G::Free { rank: 1 } => write!(f, "Z"),
            G::Free { rank } => write!(f, "F{rank}"),
            G::FreeAbelian { rank: 1 } => write!(f, "Z"),
            G::FreeAbelian { rank } => write!(f, "Z^{rank}"),
            G::DirectProduct { factors } => wrap(f, factors, " x "),
            G::FreeProduct { factors } => wrap(f, factors, " * "),
            G::Hnn { base, edge } => write!(f, "HNN({base} over {edge})"),
            G::GraphOfGroups { nodes, links, loops } => {
                let list = |v: &[G]| v.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
                write!(f, "GraphOfGroups(nodes: [{}]; links: [{}]; loops: {loops})", list(nodes), list(links))
            }
            G::BraidOpaque { graph, n, partition, .. } => {
                let p = partition.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
                write!(f, "RB_{n}({graph}; {p})")
            }
        }
    }
}

impl fmt::Display for GroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, false)
    }
}
