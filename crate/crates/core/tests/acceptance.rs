//! Acceptance suite: one numbered criterion per block, exact integers
//! throughout. Expected values come from closed formulas evaluated by the
//! small oracles below (independent of the library) or from the published
//! group descriptions. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use gbg_core::complex::{build_uc, complement_isomorphism};
use gbg_core::gog::criteria::{free_product_criterion_1, free_product_criterion_2, splitting_witness};
use gbg_core::gog::formulas::{modified_radial_rank, radial_rank};
use gbg_core::gog::{decompose, GraphOfGroups, GroupDescriptor, Resolver, StrategyRegistry};
use gbg_core::graph::{families, sufficient_subdivision};
use gbg_core::homology::{boundary_matrices, check_boundary_squared, homology, invariant_factors, HomologyProfile};
use gbg_core::hyperplanes::{check_special, cut_along, hyperplanes_by_propagation, hyperplanes_for_labels};
use gbg_core::presentation::{pi1_presentation, tietze_simplify};
use gbg_core::FiniteGraph;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);
type CutCase = (&'static str, FiniteGraph, usize, Vec<(&'static str, &'static str)>);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------- oracles

/// Binomial coefficient from Pascal's triangle; 0 outside the triangle.
fn choose(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let mut row = vec![1i128];
    for _ in 0..n {
        let mut next = vec![1i128; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row[k as usize]
}

/// Tuples `(x_1..x_r)` with `0 <= x_i <= caps[i]` summing to `m`, by odometer.
fn brute_partitions(m: usize, caps: &[usize]) -> usize {
    let mut x = vec![0usize; caps.len()];
    let mut count = 0;
    loop {
        if x.iter().sum::<usize>() == m {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == caps.len() {
                return count;
            }
            if x[i] < caps[i] {
                x[i] += 1;
                break;
            }
            x[i] = 0;
            i += 1;
        }
    }
}

/// Rank of the radial-tree braid group.
fn oracle_m(n: i64, k: i64) -> i128 {
    (k as i128 - 2) * choose(n + k - 2, k - 1) - choose(n + k - 2, k - 2) + 1
}

fn oracle_m1(n: i64, k: i64) -> i128 {
    (k as i128 - 2) * (choose(n + k - 4, k - 3) + 2 * choose(n + k - 4, k - 2)) - choose(n + k - 2, k - 2) + 1
}

fn oracle_m2(n: i64, k: i64) -> i128 {
    (k as i128 - 2) * (choose(n + k - 3, k - 2) + choose(n + k - 5, k - 3))
        - (k as i128 - 3) * choose(n + k - 6, k - 2)
        - choose(n + k - 2, k - 2)
        + 1
}

// ---------------------------------------------------------------- helpers

fn graph(edges: &[(String, String)]) -> FiniteGraph {
    let refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    FiniteGraph::from_edges(&refs).unwrap()
}

fn path_from(edges: &mut Vec<(String, String)>, start: &str, prefix: &str, len: usize) {
    let mut prev = start.to_string();
    for j in 1..=len {
        let id = format!("{prefix}{j}");
        edges.push((prev, id.clone()));
        prev = id;
    }
}

/// Tree with branch points `x` and `y`, legs of `leg` edges and a middle
/// path of `mid` edges; subdivided enough for `leg + 1` particles.
fn h_tree(leg: usize, mid: usize) -> FiniteGraph {
    let mut es = Vec::new();
    for (c, p) in [("x", "xa"), ("x", "xb"), ("y", "ya"), ("y", "yb")] {
        path_from(&mut es, c, p, leg);
    }
    path_from(&mut es, "x", "m", mid - 1);
    es.push((format!("m{}", mid - 1), "y".to_string()));
    graph(&es)
}

/// Disjoint union of a 3-prong star and a cycle.
fn star_plus_cycle() -> FiniteGraph {
    let mut es = Vec::new();
    for p in ["pa", "pb", "pc"] {
        path_from(&mut es, "o", p, 1);
    }
    for i in 0..4 {
        es.push((format!("c{i}"), format!("c{}", (i + 1) % 4)));
    }
    graph(&es)
}

fn edge(g: &FiniteGraph, a: &str, b: &str) -> usize {
    g.find_edge(a, b).unwrap()
}

fn run_decompose(g: &FiniteGraph, n: usize, cut: &[usize], reg: &StrategyRegistry) -> Result<GraphOfGroups, String> {
    decompose(g, n, cut, &Resolver::new(reg)).map_err(|e| e.to_string())
}

fn full_homology(g: &FiniteGraph, n: usize) -> Result<HomologyProfile, String> {
    let cc = build_uc(g, n, None).map_err(|e| e.to_string())?;
    check_boundary_squared(&cc).map_err(|e| e.to_string())?;
    homology(&cc).map_err(|e| e.to_string())
}

/// Betti numbers without trailing zeros.
fn trimmed(h: &HomologyProfile) -> Vec<usize> {
    let mut b = h.betti.clone();
    while b.len() > 1 && *b.last().unwrap() == 0 {
        b.pop();
    }
    b
}

/// `b_1` from `∂_1` and `∂_2` only, on the 2-skeleton.
fn b1_from_two_skeleton(g: &FiniteGraph, n: usize) -> usize {
    let cc = build_uc(g, n, Some(2)).unwrap();
    let ds = boundary_matrices(&cc);
    let r1 = ds.first().map_or(0, |d| invariant_factors(d).len());
    let r2 = ds.get(1).map_or(0, |d| invariant_factors(d).len());
    cc.cube_count(1) - r1 - r2
}

/// Every (graph, n) whose complex appears in criteria 1 to 10.
fn built_in_criteria_1_to_10() -> Vec<(String, FiniteGraph, usize)> {
    let mut out: Vec<(String, FiniteGraph, usize)> = Vec::new();
    for n in [2, 3] {
        out.push((format!("paths[3,3] n={n}"), families::disjoint_paths(&[3, 3]), n));
        out.push((format!("paths[3,4,3] n={n}"), families::disjoint_paths(&[3, 4, 3]), n));
        out.push((format!("star+cycle n={n}"), star_plus_cycle(), n));
    }
    for (name, g, n) in criterion_2_graphs() {
        out.push((format!("{name} n={n}"), g, n));
    }
    for (name, g, n, _) in criterion_3_cases() {
        out.push((format!("{name} n={n}"), g, n));
    }
    for n in 2..=5 {
        for k in 3..=8 - n {
            out.push((format!("R'_{k} n={n}"), families::radial_subdivided(n, k), n));
        }
    }
    out.push(("gamma_h'' n=4".into(), families::gamma_h_double_prime(), 4));
    out.push(("gamma_h' n=4".into(), families::gamma_h_prime(), 4));
    out.push(("gamma_a' n=4".into(), families::gamma_a_prime(), 4));
    out.push(("gamma_h n=4".into(), families::gamma_h(), 4));
    out.push(("gamma_a n=4".into(), families::gamma_a(), 4));
    out.push(("gamma_theta n=4".into(), families::gamma_theta(), 4));
    for n in 2..=4 {
        out.push((format!("gamma_q n={n}"), families::gamma_q(n), n));
    }
    out
}

fn criterion_2_graphs() -> Vec<(&'static str, FiniteGraph, usize)> {
    vec![
        ("gamma_h", families::gamma_h(), 2),
        ("gamma_h", families::gamma_h(), 3),
        ("gamma_a", families::gamma_a(), 3),
        ("gamma_theta", families::gamma_theta(), 3),
        ("star[2,2,2]", families::star(&[2, 2, 2]), 3),
        ("cycle6", families::cycle(6), 3),
        ("theta(2,2)", families::theta(2, 2), 2),
        ("two_triangles(3)", families::two_triangles_joined(3), 2),
        ("gamma_q(2)", families::gamma_q(2), 2),
    ]
}

/// (name, graph, n, cut edges as id pairs)
fn criterion_3_cases() -> Vec<CutCase> {
    vec![
        ("gamma_h", families::gamma_h(), 4, vec![("s1", "s2")]),
        ("gamma_h", families::gamma_h(), 3, vec![("x", "x1"), ("x", "x2")]),
        ("gamma_a", families::gamma_a(), 4, vec![("b1", "b2")]),
        ("gamma_theta", families::gamma_theta(), 4, vec![("c1", "c2")]),
        ("gamma_theta", families::gamma_theta(), 3, vec![("x", "a1"), ("x", "b1"), ("x", "c1")]),
        ("star[2,2,2]", families::star(&[2, 2, 2]), 3, vec![("o", "p0_1"), ("o", "p1_1"), ("o", "p2_1")]),
        ("cycle6", families::cycle(6), 3, vec![("c0", "c1")]),
        ("gamma_q(2)", families::gamma_q(2), 2, vec![("w", "u")]),
        ("theta(2,2)", families::theta(2, 2), 2, vec![("x", "t0_1")]),
        ("two_triangles(3)", families::two_triangles_joined(3), 2, vec![("a0", "a1"), ("a0", "j1")]),
        ("flower[3,3]", families::flower(&[3, 3], &[]), 2, vec![("o", "f0_1"), ("o", "f1_1")]),
    ]
}

// ---------------------------------------------------------------- criteria

fn c1_component_counts() -> Outcome {
    let mut checked = 0;
    for (g, k) in
        [(families::disjoint_paths(&[3, 3]), 2), (families::disjoint_paths(&[3, 4, 3]), 3), (star_plus_cycle(), 2)]
    {
        for n in [2i64, 3] {
            let cc = build_uc(&g, n as usize, Some(1)).map_err(|e| e.to_string())?;
            let got = cc.components().map_err(|e| e.to_string())?.len() as i128;
            let want = choose(n + k - 1, k - 1);
            ensure!(got == want, "{} vertices, k={k} n={n}: {got} components, expected {want}", g.vertex_count());
            checked += 1;
        }
    }
    Ok(format!("{checked} cases"))
}

fn c2_hyperplane_counts() -> Outcome {
    let (mut binomial_cases, mut bounded_cases) = (0, 0);
    for (name, g, n) in criterion_2_graphs() {
        let cc = build_uc(&g, n, Some(1)).unwrap();
        for e in 0..g.edge_count() {
            let sub = g.remove_closed_edge(e).unwrap();
            let caps: Vec<usize> = sub.components().iter().map(Vec::len).collect();
            let got = hyperplanes_for_labels(&cc, &[e]).map_err(|x| x.to_string())?.len();
            ensure!(
                got == brute_partitions(n - 1, &caps),
                "{name} n={n} e={}: {got} hyperplanes, oracle {}",
                g.edge_label(e),
                brute_partitions(n - 1, &caps)
            );
            if caps.iter().all(|&c| c + 1 >= n) {
                let k = caps.len() as i64;
                let want = choose(n as i64 + k - 2, k - 1);
                ensure!(got as i128 == want, "{name} n={n} e={}: {got} vs C = {want}", g.edge_label(e));
                binomial_cases += 1;
            } else {
                bounded_cases += 1;
            }
        }
    }
    ensure!(binomial_cases >= 10, "only {binomial_cases} uncapped triples");
    Ok(format!("{binomial_cases} binomial triples, {bounded_cases} capacity-bounded triples"))
}

fn c3_cut_equivalence() -> Outcome {
    let reg = StrategyRegistry::with_defaults();
    let mut count = 0;
    for (name, g, n, cut) in criterion_3_cases() {
        let edges: Vec<usize> = cut.iter().map(|&(a, b)| edge(&g, a, b)).collect();
        let cc = build_uc(&g, n, None).unwrap();
        let hs = hyperplanes_for_labels(&cc, &edges).unwrap();
        let cut_cc = cut_along(&cc, &hs).map_err(|e| e.to_string())?;
        let direct = build_uc(&g.remove_open_edges(&edges).unwrap(), n, None).unwrap();
        ensure!(cut_cc.same_cubes_by_id(&direct), "{name} n={n}: cut complex differs");
        let gog = run_decompose(&g, n, &edges, &reg)?;
        ensure!(gog.shape_agrees(), "{name} n={n}: shape disagrees");
        count += 1;
    }
    ensure!(count >= 10, "only {count} decompositions");
    Ok(format!("{count} decompositions, shapes agree"))
}

fn c4_radial_formula() -> Outcome {
    // Only the triviality criterion: node and link groups here are products of
    // segment groups, so the rank comes purely from the shape of Λ.
    let reg = StrategyRegistry::from_names(&["trivial-criterion"]).unwrap();
    let mut cases = Vec::new();
    for n in 2..=5usize {
        for k in 3..=8 - n {
            let g = families::radial_subdivided(n, k);
            let centre = g.index_of("o").unwrap();
            let gog = run_decompose(&g, n, &g.incident_edges(centre), &reg)?;
            let want = oracle_m(n as i64, k as i64);
            ensure!(radial_rank(n, k) == want, "radial_rank({n},{k}) = {}", radial_rank(n, k));
            let got = gog.assemble().map_err(|e| e.to_string())?;
            ensure!(got == GroupDescriptor::Free { rank: want as usize }.simplify(), "n={n} k={k}: {got}");
            let h = full_homology(&g, n)?;
            ensure!(h.betti(1) as i128 == want && h.betti(2) == 0, "n={n} k={k}: betti {:?}", h.betti);
            ensure!(h.betti.iter().skip(2).all(|&b| b == 0), "n={n} k={k}: higher homology {:?}", h.betti);
            cases.push(format!("M({n},{k})={want}"));
        }
    }
    Ok(cases.join(" "))
}

fn c5_modified_radial() -> Outcome {
    for (n, k, r, want) in [(4, 3, 1, oracle_m1(4, 3)), (3, 3, 1, oracle_m1(3, 3)), (4, 3, 2, oracle_m2(4, 3))] {
        ensure!(modified_radial_rank(n, k, r) == Some(want), "M{r}({n},{k})");
    }
    ensure!((oracle_m1(4, 3), oracle_m1(3, 3), oracle_m2(4, 3)) == (3, 2, 1), "published values 3, 2, 1");
    let reg = StrategyRegistry::with_defaults();
    let gh = families::gamma_h_double_prime();
    let gog = run_decompose(&gh, 4, &[edge(&gh, "s1", "s2")], &reg)?;
    ensure!(gog.nodes[0].group == GroupDescriptor::Free { rank: 3 }, "G_K40 = {}", gog.nodes[0].group);
    ensure!(gog.nodes[1].group == GroupDescriptor::Free { rank: 2 }, "G_K31 = {}", gog.nodes[1].group);
    // The x side of the cut graph on its own: b_1 of its 4-particle complex.
    let cut = gh.remove_open_edge(edge(&gh, "s1", "s2")).unwrap();
    let x_side = cut.components().into_iter().find(|c| c.contains(&gh.index_of("x").unwrap())).unwrap();
    let xg = cut.induced_subgraph(&x_side).0;
    let h = full_homology(&xg, 4)?;
    ensure!(trimmed(&h) == vec![1, 3], "UC_4 of the x side: {:?}", h.betti);
    let gp = families::gamma_h_prime();
    let gog = run_decompose(&gp, 4, &[edge(&gp, "s1", "s2")], &reg)?;
    ensure!(gog.nodes[0].group == GroupDescriptor::z(), "Γ'_H G_K40 = {}", gog.nodes[0].group);
    let assembled = gog.assemble().map_err(|e| e.to_string())?.to_string();
    ensure!(assembled == "F4 * Z^2", "RB_4(Γ'_H) = {assembled}");
    Ok("M1(4,3)=3 M1(3,3)=2 M2(4,3)=1; node groups F3, F2 and Z; RB_4(Γ'_H) = F4 * Z^2".into())
}

fn c6_gamma_h() -> Outcome {
    let g = families::gamma_h_double_prime();
    let gog = run_decompose(&g, 4, &[edge(&g, "s1", "s2")], &StrategyRegistry::with_defaults())?;
    let groups: Vec<String> = gog.nodes.iter().map(|n| n.group.to_string()).collect();
    ensure!(groups == ["F3", "F2", "Z^2", "F2", "F3"], "node groups {groups:?}");
    let got = gog.assemble().map_err(|e| e.to_string())?;
    ensure!(got.to_string() == "F10 * Z^2", "assembled {got}");
    let h = full_homology(&g, 4)?;
    ensure!(trimmed(&h) == vec![1, 12, 1] && h.is_torsion_free(), "homology {:?}", h.betti);
    ensure!(got.betti() == Some(trimmed(&h)), "descriptor betti {:?}", got.betti());
    Ok("F10 * Z^2, b = (1,12,1), torsion-free".into())
}

fn c7_gamma_a() -> Outcome {
    let g = families::gamma_a_prime();
    let gog = run_decompose(&g, 4, &[edge(&g, "b1", "b2")], &StrategyRegistry::with_defaults())?;
    ensure!(gog.nodes.len() == 1 && gog.links.len() == 1, "Λ has {} nodes, {} links", gog.nodes.len(), gog.links.len());
    let got = gog.assemble().map_err(|e| e.to_string())?;
    ensure!(got.to_string() == "F5 * Z^2", "assembled {got}");
    let h = full_homology(&g, 4)?;
    ensure!(trimmed(&h) == vec![1, 7, 1] && h.is_torsion_free(), "homology {:?}", h.betti);
    Ok("F5 * Z^2, b = (1,7,1)".into())
}

fn c8_unsubdivided() -> Outcome {
    let hh = full_homology(&families::gamma_h(), 4)?;
    ensure!(trimmed(&hh) == vec![1, 2, 1], "Γ_H: {:?}", hh.betti);
    let ha = full_homology(&families::gamma_a(), 4)?;
    ensure!(trimmed(&ha) == vec![1, 3, 1], "Γ_A: {:?}", ha.betti);
    Ok("Γ_H b = (1,2,1), Γ_A b = (1,3,1)".into())
}

fn c9_gamma_q() -> Outcome {
    let reg = StrategyRegistry::with_defaults();
    for n in 2..=4 {
        let g = families::gamma_q(n);
        let gog = run_decompose(&g, n, &[edge(&g, "w", "u")], &reg)?;
        ensure!(
            gog.nodes.len() == 1 && gog.links.len() == n,
            "n={n}: {} nodes, {} links",
            gog.nodes.len(),
            gog.links.len()
        );
        ensure!(gog.links.iter().all(|l| l.source == 0 && l.target == 0), "n={n}: links are not self-loops");
        ensure!(gog.nodes[0].group.is_trivial() && gog.all_links_trivial(), "n={n}: nontrivial groups");
        ensure!(gog.assemble().unwrap() == GroupDescriptor::Free { rank: n }, "n={n}: not F{n}");
        let h = full_homology(&g, n)?;
        ensure!(trimmed(&h) == vec![1, n], "n={n}: homology {:?}", h.betti);
        let p = tietze_simplify(&pi1_presentation(&build_uc(&g, n, Some(2)).unwrap(), None).unwrap());
        ensure!(p.free_rank() == Some(n), "n={n}: presentation {p}");
    }
    Ok("n = 2, 3, 4: one node, n trivial self-loops, b = (1,n)".into())
}

fn c10_gamma_theta() -> Outcome {
    let reg = StrategyRegistry::with_defaults();
    let g = families::gamma_theta();
    let gog = run_decompose(&g, 4, &[edge(&g, "c1", "c2")], &reg)?;
    ensure!(gog.nodes.len() == 1 && gog.links.len() == 1, "Λ shape");
    ensure!(gog.links[0].group == GroupDescriptor::z(), "link group {}", gog.links[0].group);
    let vertex =
        GroupDescriptor::FreeProduct { factors: vec![GroupDescriptor::FreeAbelian { rank: 2 }, GroupDescriptor::z()] }
            .simplify();
    ensure!(gog.nodes[0].group == vertex, "vertex group {}", gog.nodes[0].group);
    let node_graph = g.remove_open_edge(edge(&g, "c1", "c2")).unwrap();
    let how = Resolver::new(&reg).resolve_connected(&node_graph, 4).strategy;
    ensure!(how == Some("recursive-decomposition"), "vertex group resolved by {how:?}");
    let assembled = gog.assemble().map_err(|e| e.to_string())?;
    let want = GroupDescriptor::Hnn { base: Box::new(vertex), edge: Box::new(GroupDescriptor::z()) };
    ensure!(assembled == want, "assembled {assembled}");
    let h = full_homology(&g, 4)?;
    ensure!(Some(h.euler) == assembled.euler(), "euler {} vs {:?}", h.euler, assembled.euler());
    Ok(format!("{assembled}; homology b = {:?}, euler {}", trimmed(&h), h.euler))
}

fn c11_specialness() -> Outcome {
    let mut count = 0;
    for (name, g, n) in built_in_criteria_1_to_10() {
        let cc = build_uc(&g, n, Some(2)).map_err(|e| e.to_string())?;
        let rep = check_special(&cc).map_err(|e| e.to_string())?;
        ensure!(rep.passes(), "{name}: {rep:?}");
        count += 1;
    }
    Ok(format!("{count} complexes special"))
}

fn c12_properties() -> Outcome {
    let graphs = vec![
        families::star(&[1, 1, 1]),
        families::star(&[2, 2, 2]),
        families::cycle(6),
        families::theta(2, 2),
        families::gamma_h(),
        families::gamma_a(),
        families::gamma_theta(),
        families::gamma_q(2),
        families::two_triangles_joined(2),
        families::flower(&[3, 3], &[1]),
        families::disjoint_paths(&[3, 3]),
        families::delta_prime_reconstructed(),
        star_plus_cycle(),
    ];
    let mut complexes = 0;
    for g in &graphs {
        assert!(g.vertex_count() <= 12);
        for n in 1..g.vertex_count() {
            let cc = build_uc(g, n, None).unwrap();
            check_boundary_squared(&cc).map_err(|e| e.to_string())?;
            let h = homology(&cc).map_err(|e| e.to_string())?;
            ensure!(h.betti(0) == cc.components().unwrap().len(), "b0 vs components");
            let alt: i64 =
                h.betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
            ensure!(alt == cc.euler_characteristic().unwrap(), "euler");
            let dual = complement_isomorphism(g, n).map_err(|e| e.to_string())?;
            ensure!(homology(&dual.target).unwrap() == h, "complement homology differs");
            if cc.dim() >= 2 {
                hyperplanes_by_propagation(&cc).map_err(|e| e.to_string())?;
            }
            complexes += 1;
        }
    }
    Ok(format!("{complexes} complexes over {} graphs", graphs.len()))
}

fn c13_free_product_criteria() -> Outcome {
    let reg = StrategyRegistry::with_defaults();
    let small_tree = h_tree(4, 4);
    // (name, graph, n, criterion, graph for the b_1 check)
    let positive: Vec<(&str, FiniteGraph, usize, u8, Option<FiniteGraph>)> = vec![
        ("sun(4; 2)", sufficient_subdivision(&families::sun(4, &[(0, 2)]), 3), 3, 2, None),
        ("sun(5; 2, 2)", sufficient_subdivision(&families::sun(5, &[(0, 2), (2, 2)]), 3), 3, 2, None),
        ("flower[3,3,3] n=2", families::flower(&[3, 3, 3], &[]), 2, 1, None),
        ("flower[3,3,3] n=3", families::flower(&[3, 3, 3], &[]), 3, 1, None),
        ("flower[3,4;2] n=2", families::flower(&[3, 4], &[2]), 2, 1, None),
        ("flower[3,4;2] n=3", families::flower(&[3, 4], &[2]), 3, 1, None),
        ("H tree (legs 4)", small_tree.clone(), 5, 1, None),
        ("gamma_h", families::gamma_h(), 5, 1, Some(small_tree)),
    ];
    let mut lines = Vec::new();
    for (name, g, n, which, b1_graph) in positive {
        let hint: Vec<String> = match which {
            1 => {
                let c = free_product_criterion_1(&g, n).ok_or(format!("{name}: no criterion 1 certificate"))?;
                vec![c.vertex]
            }
            _ => {
                let c = free_product_criterion_2(&g, n)
                    .map_err(|e| e.to_string())?
                    .ok_or(format!("{name}: no criterion 2 certificate"))?;
                c.edge.to_vec()
            }
        };
        let hints: Vec<&str> = hint.iter().map(String::as_str).collect();
        let w = splitting_witness(&g, n, &hints, &Resolver::new(&reg))
            .map_err(|e| e.to_string())?
            .ok_or(format!("{name}: no decomposition exhibits the splitting"))?;
        ensure!(w.decomposition.links[w.splitting.link].group.is_trivial(), "{name}: splitting link not trivial");
        ensure!(w.splitting.conclusion.starts_with("H * Z"), "{name}: {}", w.splitting.conclusion);
        let b1 = b1_from_two_skeleton(b1_graph.as_ref().unwrap_or(&w.graph), n);
        ensure!(b1 >= 1, "{name}: b1 = 0");
        lines.push(format!("{name}: criterion {which}, b1={b1}"));
    }
    for (name, g, n) in [
        ("theta(2,2)", families::theta(2, 2), 3),
        ("theta(2,3)", families::theta(2, 3), 2),
        ("cycle6", families::cycle(6), 2),
        ("cycle6", families::cycle(6), 3),
    ] {
        ensure!(free_product_criterion_1(&g, n).is_none(), "{name} n={n}: unexpected criterion 1 certificate");
        ensure!(
            matches!(free_product_criterion_2(&g, n), Ok(None)),
            "{name} n={n}: unexpected criterion 2 certificate"
        );
    }
    lines.push("none for theta graphs and cycles".into());
    Ok(lines.join("; "))
}

fn main() {
    let criteria: [Criterion; 13] = [
        (1, "component counts", c1_component_counts),
        (2, "hyperplane counts", c2_hyperplane_counts),
        (3, "cut-graph equivalence", c3_cut_equivalence),
        (4, "radial formula", c4_radial_formula),
        (5, "modified radial formulas", c5_modified_radial),
        (6, "Γ_H at n=4", c6_gamma_h),
        (7, "Γ_A at n=4", c7_gamma_a),
        (8, "unsubdivided Γ_H, Γ_A", c8_unsubdivided),
        (9, "Γ_Q", c9_gamma_q),
        (10, "Γ_θ at n=4", c10_gamma_theta),
        (11, "specialness", c11_specialness),
        (12, "property suites", c12_properties),
        (13, "free-product criteria", c13_free_product_criteria),
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (id, name, f) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or(p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {id:>2} ({name}) [{secs:.1}s]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {id:>2} ({name}) [{secs:.1}s]: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion/criteria failed");
        std::process::exit(1);
    }
}
