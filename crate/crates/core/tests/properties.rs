//! Randomised invariants over small simple graphs.

use gbg_core::complex::{build_uc, complement_isomorphism};
use gbg_core::gog::{decompose, GroupDescriptor, Resolver, StrategyRegistry};
use gbg_core::graph::{are_isomorphic, check_subdivision, classify, rebuild_from_witness, sufficient_subdivision};
use gbg_core::homology::{check_boundary_squared, homology};
use gbg_core::hyperplanes::{
    crossing_pairs, cut_along, hyperplanes, hyperplanes_by_propagation, hyperplanes_for_labels,
};
use gbg_core::presentation::{pi1_presentation, tietze_simplify};
use gbg_core::FiniteGraph;
use proptest::prelude::*;

/// Random simple graph on `v` vertices: a random spanning tree plus extra edges.
fn connected_graph(max_v: usize) -> impl Strategy<Value = FiniteGraph> {
    (2..=max_v)
        .prop_flat_map(|v| {
            let parents: Vec<_> = (1..v).map(|i| 0..i).collect();
            (Just(v), parents, proptest::collection::vec((0..v, 0..v), 0..3))
        })
        .prop_map(|(v, parents, extra)| {
            let mut edges: Vec<(usize, usize)> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
            for (a, b) in extra {
                let e = (a.min(b), a.max(b));
                if a != b && !edges.iter().any(|&(x, y)| (x.min(y), x.max(y)) == e) {
                    edges.push(e);
                }
            }
            let names: Vec<String> = (0..v).map(|i| format!("v{i}")).collect();
            let pairs: Vec<(String, String)> =
                edges.iter().map(|&(a, b)| (names[a].clone(), names[b].clone())).collect();
            FiniteGraph::new(names, pairs).unwrap()
        })
}

/// Number of tuples `0 <= x_i <= caps[i]` summing to `m`.
fn brute_partitions(m: usize, caps: &[usize]) -> usize {
    match caps.split_first() {
        None => usize::from(m == 0),
        Some((&c, rest)) => (0..=c.min(m)).map(|x| brute_partitions(m - x, rest)).sum(),
    }
}

fn poincare_product(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn trim(mut b: Vec<usize>) -> Vec<usize> {
    while b.len() > 1 && *b.last().unwrap() == 0 {
        b.pop();
    }
    b
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homology_invariants(g in connected_graph(7), n in 1usize..4) {
        prop_assume!(n < g.vertex_count());
        let cc = build_uc(&g, n, None).unwrap();
        prop_assert!(check_boundary_squared(&cc).is_ok());
        cc.check_closure().unwrap();
        let h = homology(&cc).unwrap();
        prop_assert_eq!(h.betti(0), cc.components().unwrap().len());
        let alt: i64 = h.betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
        prop_assert_eq!(alt, h.euler);
        prop_assert_eq!(h.euler, cc.euler_characteristic().unwrap());
        let dual = complement_isomorphism(&g, n).unwrap();
        prop_assert_eq!(homology(&dual.target).unwrap(), h);
    }

    #[test]
    fn hyperplane_counts_and_propagation(g in connected_graph(7), n in 2usize..4) {
        prop_assume!(n <= g.vertex_count());
        let cc = build_uc(&g, n, Some(2)).unwrap();
        let hs = hyperplanes(&cc).unwrap();
        for e in 0..g.edge_count() {
            let caps: Vec<usize> = g.remove_closed_edge(e).unwrap().components().iter().map(Vec::len).collect();
            let count = hs.iter().filter(|h| h.label == e).count();
            prop_assert_eq!(count, brute_partitions(n - 1, &caps));
        }
        if cc.dim() >= 2 {
            let by_squares = hyperplanes_by_propagation(&cc).unwrap();
            let key = |v: &[gbg_core::hyperplanes::Hyperplane]| {
                let mut k: Vec<Vec<usize>> = v.iter().map(|h| { let mut d = h.dual_edges.clone(); d.sort(); d }).collect();
                k.sort();
                k
            };
            prop_assert_eq!(key(&hs), key(&by_squares));
        }
        for (a, b) in crossing_pairs(&cc, &hs) {
            let (ea, eb) = (g.edge(hs[a].label), g.edge(hs[b].label));
            prop_assert!(ea.iter().all(|x| !eb.contains(x)), "crossing hyperplanes share an endpoint");
        }
    }

    #[test]
    fn cutting_matches_the_cut_graph(g in connected_graph(7), n in 2usize..4, v in 0usize..7, pick in 1u8..8) {
        prop_assume!(n <= g.vertex_count());
        let v = v % g.vertex_count();
        let incident = g.incident_edges(v);
        let cut: Vec<usize> = incident.iter().enumerate().filter(|(i, _)| pick >> (i % 3) & 1 == 1).map(|(_, &e)| e).collect();
        prop_assume!(!cut.is_empty());
        let cc = build_uc(&g, n, None).unwrap();
        let cut_cc = cut_along(&cc, &hyperplanes_for_labels(&cc, &cut).unwrap()).unwrap();
        let direct = build_uc(&g.remove_open_edges(&cut).unwrap(), n, None).unwrap();
        prop_assert!(cut_cc.same_cubes_by_id(&direct));

        let reg = StrategyRegistry::with_defaults();
        let gog = decompose(&g, n, &cut, &Resolver::new(&reg)).unwrap();
        prop_assert!(gog.shape_agrees());
        if gog.nodes.iter().all(|x| x.group.is_trivial()) && gog.all_links_trivial() {
            let rank = gog.links.len() + 1 - gog.nodes.len();
            prop_assert_eq!(gog.assemble().unwrap(), GroupDescriptor::Free { rank }.simplify());
            prop_assert_eq!(homology(&cc).unwrap().betti(1), rank);
        }
    }

    #[test]
    fn presentation_matches_homology(g in connected_graph(6), n in 1usize..4) {
        prop_assume!(n < g.vertex_count());
        let cc = build_uc(&g, n, Some(2)).unwrap();
        prop_assume!(cc.components().unwrap().len() == 1);
        let raw = pi1_presentation(&cc, None).unwrap();
        prop_assert_eq!(raw.generators.len() + cc.cube_count(0), cc.cube_count(1) + 1);
        let simple = tietze_simplify(&raw);
        prop_assert_eq!(simple.abelianization(), raw.abelianization());
        let full = build_uc(&g, n, None).unwrap();
        let h = homology(&full).unwrap();
        let ab = raw.abelianization();
        prop_assert_eq!(ab.free_rank, h.betti(1));
        prop_assert_eq!(&ab.torsion, &h.torsion[1]);
    }

    #[test]
    fn subdivision_properties(g in connected_graph(6), n in 1usize..5) {
        let s = sufficient_subdivision(&g, n);
        prop_assert!(check_subdivision(&s, n).ok);
        let valences = |x: &FiniteGraph| {
            let mut d: Vec<usize> = (0..x.vertex_count()).map(|v| x.degree(v)).filter(|&d| d >= 3).collect();
            d.sort();
            d
        };
        prop_assert_eq!(valences(&s), valences(&g));
        prop_assert_eq!(s.cycle_rank(), g.cycle_rank());
        for e in 0..g.edge_count() {
            let open = g.remove_open_edge(e).unwrap();
            let closed = g.remove_closed_edge(e).unwrap();
            for name in closed.names() {
                prop_assert!(open.index_of(name).is_some());
            }
        }
        let class = classify(&g).unwrap();
        prop_assert!(class.round_trips(&g));
        prop_assert!(are_isomorphic(&rebuild_from_witness(&class.witness).unwrap(), &g));
    }

    #[test]
    fn kunneth_on_disjoint_unions(a in connected_graph(4), b in connected_graph(4), n in 2usize..4) {
        let rename = |g: &FiniteGraph, p: &str| -> Vec<(String, String)> {
            g.edges().iter().map(|&[x, y]| (format!("{p}{}", g.name(x)), format!("{p}{}", g.name(y)))).collect()
        };
        let names: Vec<String> = a.names().iter().map(|x| format!("a{x}")).chain(b.names().iter().map(|x| format!("b{x}"))).collect();
        let union = FiniteGraph::new(names, rename(&a, "a").into_iter().chain(rename(&b, "b"))).unwrap();
        prop_assume!(n <= union.vertex_count());
        let part = |g: &FiniteGraph, m: usize| {
            if m == 0 { vec![1] } else { homology(&build_uc(g, m, None).unwrap()).unwrap().betti }
        };
        // Each component of UC_n of the union is a product; summing the
        // product polynomials over all splittings k + l = n gives the total.
        let mut expected = vec![0usize; n + 1];
        for k in 0..=n.min(a.vertex_count()) {
            let l = n - k;
            if l > b.vertex_count() {
                continue;
            }
            for (i, x) in poincare_product(&part(&a, k), &part(&b, l)).into_iter().enumerate() {
                expected[i] += x;
            }
        }
        let h = homology(&build_uc(&union, n, None).unwrap()).unwrap();
        prop_assert!(h.is_torsion_free());
        prop_assert_eq!(trim(h.betti), trim(expected));
    }
}
