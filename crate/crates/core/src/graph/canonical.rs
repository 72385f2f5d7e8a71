//! Canonical labelling by colour refinement and individualisation.
//!
//! The search explores every individualisation branch without automorphism
//! pruning, which is exponential in the worst case but fast for the sparse
//! graphs with few symmetries handled here (up to about 30 vertices).

use super::FiniteGraph;

/// Relabelling-invariant form: vertex count and the sorted edge list under
/// the lexicographically least discrete labelling found by the search.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

fn refine(g: &FiniteGraph, colours: &mut Vec<usize>) {
    let n = colours.len();
    loop {
        let mut sig: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb, v)
            })
            .collect();
        sig.sort();
        let mut next = vec![0; n];
        let mut c = 0;
        for i in 0..n {
            if i > 0 && (sig[i].0 != sig[i - 1].0 || sig[i].1 != sig[i - 1].1) {
                c += 1;
            }
            next[sig[i].2] = c;
        }
        let before = colours.iter().copied().max().map_or(0, |m| m + 1);
        *colours = next;
        if c + 1 == before || n == 0 {
            return;
        }
    }
}

fn search(g: &FiniteGraph, colours: Vec<usize>, best: &mut Option<Vec<(usize, usize)>>) {
    let n = colours.len();
    let mut counts = vec![0; n];
    for &c in &colours {
        counts[c] += 1;
    }
    // First non-singleton cell, smallest colour wins; canonical because colours are.
    let target = (0..n).find(|&c| counts[c] > 1);
    match target {
        None => {
            let mut edges: Vec<(usize, usize)> = g
                .edges()
                .iter()
                .map(|&[a, b]| {
                    let (x, y) = (colours[a], colours[b]);
                    (x.min(y), x.max(y))
                })
                .collect();
            edges.sort_unstable();
            if best.as_ref().is_none_or(|b| edges < *b) {
                *best = Some(edges);
            }
        }
        Some(cell) => {
            for v in (0..n).filter(|&v| colours[v] == cell) {
                // Split v off ahead of its cell mates, then re-rank and refine.
                let mut next: Vec<usize> =
                    colours.iter().enumerate().map(|(w, &c)| 2 * c + usize::from(c == cell && w != v)).collect();
                let mut ranks: Vec<usize> = next.clone();
                ranks.sort_unstable();
                ranks.dedup();
                for c in next.iter_mut() {
                    *c = ranks.binary_search(c).unwrap();
                }
                refine(g, &mut next);
                search(g, next, best);
            }
        }
    }
}

pub fn canonical_form(g: &FiniteGraph) -> CanonicalForm {
    let mut colours = vec![0; g.vertex_count()];
    refine(g, &mut colours);
    let mut best = None;
    search(g, colours, &mut best);
    CanonicalForm { vertices: g.vertex_count(), edges: best.unwrap_or_default() }
}

pub fn are_isomorphic(a: &FiniteGraph, b: &FiniteGraph) -> bool {
    a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}
