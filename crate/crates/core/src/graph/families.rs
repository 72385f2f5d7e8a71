//! Builders for the named graphs used throughout the crate and its tests.
//!
//! Vertex ids are short and stable so that data files, reports and tests can
//! refer to specific vertices and edges.

use super::subdivision::subdivide_edges;
use super::FiniteGraph;

fn build(vertices: Vec<String>, edges: Vec<(String, String)>) -> FiniteGraph {
    FiniteGraph::new(vertices, edges).expect("family builders produce simple graphs")
}

fn path_ids(prefix: &str, len: usize) -> Vec<String> {
    (0..len).map(|i| format!("{prefix}{i}")).collect()
}

/// Path on `k` vertices `s0 - s1 - ... - s{k-1}`.
pub fn segment(k: usize) -> FiniteGraph {
    let vs = path_ids("s", k);
    let es = vs.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
    build(vs, es)
}

/// Cycle on `k >= 3` vertices `c0 .. c{k-1}`.
pub fn cycle(k: usize) -> FiniteGraph {
    let vs = path_ids("c", k);
    let es = (0..k).map(|i| (vs[i].clone(), vs[(i + 1) % k].clone())).collect();
    build(vs, es)
}

/// Disjoint union of paths on `a` and `b` vertices (`l*` and `r*`).
pub fn two_segments(a: usize, b: usize) -> FiniteGraph {
    disjoint_paths(&[a, b])
}

/// Disjoint union of paths with the given vertex counts; path `i` uses ids
/// `q{i}_{j}`.
pub fn disjoint_paths(sizes: &[usize]) -> FiniteGraph {
    let mut vs = Vec::new();
    let mut es = Vec::new();
    for (i, &k) in sizes.iter().enumerate() {
        let ids: Vec<String> = (0..k)
            .map(|j| format!("{}{j}", if sizes.len() == 2 { ["l", "r"][i].to_string() } else { format!("q{i}_") }))
            .collect();
        es.extend(ids.windows(2).map(|w| (w[0].clone(), w[1].clone())));
        vs.extend(ids);
    }
    build(vs, es)
}

/// Star with centre `o` and prong `i` a path `o - p{i}_1 - ... - p{i}_{len}`.
pub fn star(prongs: &[usize]) -> FiniteGraph {
    let mut vs = vec!["o".to_string()];
    let mut es = Vec::new();
    for (i, &len) in prongs.iter().enumerate() {
        let mut prev = "o".to_string();
        for j in 1..=len {
            let id = format!("p{i}_{j}");
            vs.push(id.clone());
            es.push((prev, id.clone()));
            prev = id;
        }
    }
    build(vs, es)
}

/// The radial tree `R_k` with every prong subdivided by `n` vertices.
pub fn radial_subdivided(n: usize, k: usize) -> FiniteGraph {
    star(&vec![n + 1; k])
}

/// `R_{k,r}`: `k - r` prongs subdivided by `n` vertices, then `r` bare prongs.
pub fn modified_radial(n: usize, k: usize, r: usize) -> FiniteGraph {
    let mut prongs = vec![n + 1; k - r];
    prongs.extend(std::iter::repeat_n(1, r));
    star(&prongs)
}

fn from_pairs(pairs: &[(&str, &str)], order: &[&str]) -> FiniteGraph {
    build(
        order.iter().map(|s| s.to_string()).collect(),
        pairs.iter().map(|&(a, b)| (a.to_string(), b.to_string())).collect(),
    )
}

/// The H-shaped tree: valence-3 vertices `x` and `y` joined by the path
/// `x - s1 - s2 - y`, each carrying two leaves. The middle edge is `s1 - s2`.
pub fn gamma_h() -> FiniteGraph {
    from_pairs(
        &[("x", "x1"), ("x", "x2"), ("x", "s1"), ("s1", "s2"), ("s2", "y"), ("y", "y1"), ("y", "y2")],
        &["x", "x1", "x2", "s1", "s2", "y", "y1", "y2"],
    )
}

/// `gamma_h` with each of its four leaf edges subdivided by 4 vertices.
pub fn gamma_h_double_prime() -> FiniteGraph {
    let g = gamma_h();
    let leaves: Vec<usize> = ["x1", "x2", "y1", "y2"]
        .iter()
        .map(|&l| g.find_edge(if l.starts_with('x') { "x" } else { "y" }, l).unwrap())
        .collect();
    subdivide_edges(&g, &leaves, 4)
}

/// `gamma_h` with one leaf edge on each side subdivided by 4 vertices.
pub fn gamma_h_prime() -> FiniteGraph {
    let g = gamma_h();
    let edges = [g.find_edge("x", "x1").unwrap(), g.find_edge("y", "y1").unwrap()];
    subdivide_edges(&g, &edges, 4)
}

/// A 6-cycle `x - a1 - a2 - y - b2 - b1 - x` with leaves `px` at `x` and `py`
/// at `y`. Deleting the open edge `b1 - b2` leaves a copy of `gamma_h`;
/// deleting it closed leaves a segment.
pub fn gamma_a() -> FiniteGraph {
    from_pairs(
        &[("x", "a1"), ("a1", "a2"), ("a2", "y"), ("y", "b2"), ("b2", "b1"), ("b1", "x"), ("x", "px"), ("y", "py")],
        &["x", "a1", "a2", "y", "b2", "b1", "px", "py"],
    )
}

/// `gamma_a` with both leaf edges subdivided by 4 vertices.
pub fn gamma_a_prime() -> FiniteGraph {
    let g = gamma_a();
    let edges = [g.find_edge("x", "px").unwrap(), g.find_edge("y", "py").unwrap()];
    subdivide_edges(&g, &edges, 4)
}

/// Two valence-3 vertices `x`, `y` joined by three arcs of length 3 (two
/// 6-cycles glued along a segment of length 3). The cut edge is `c1 - c2`.
pub fn gamma_theta() -> FiniteGraph {
    from_pairs(
        &[
            ("x", "a1"),
            ("a1", "a2"),
            ("a2", "y"),
            ("x", "b1"),
            ("b1", "b2"),
            ("b2", "y"),
            ("x", "c1"),
            ("c1", "c2"),
            ("c2", "y"),
        ],
        &["x", "a1", "a2", "y", "b1", "b2", "c1", "c2"],
    )
}

/// `gamma_theta` with a pendant edge at each pole.
pub fn gamma_theta_with_tails() -> FiniteGraph {
    let g = gamma_theta();
    let mut vs: Vec<String> = g.names().to_vec();
    vs.extend(["tx".to_string(), "ty".to_string()]);
    let mut es: Vec<(String, String)> =
        g.edges().iter().map(|&[a, b]| (g.name(a).to_string(), g.name(b).to_string())).collect();
    es.push(("x".into(), "tx".into()));
    es.push(("y".into(), "ty".into()));
    build(vs, es)
}

/// Triangle `w - u - t` with a pendant `p` at `w`; every edge except the cut
/// edge `w - u` is subdivided by `k` vertices.
pub fn gamma_q(k: usize) -> FiniteGraph {
    let g = from_pairs(&[("w", "u"), ("u", "t"), ("t", "w"), ("w", "p")], &["w", "u", "t", "p"]);
    subdivide_edges(&g, &[1, 2, 3], k)
}

/// Generalised theta graph with `m + 1` arcs of `arc_len >= 2` edges between
/// poles `x` and `y`.
pub fn theta(m: usize, arc_len: usize) -> FiniteGraph {
    let mut vs = vec!["x".to_string(), "y".to_string()];
    let mut es = Vec::new();
    for i in 0..=m {
        let mut prev = "x".to_string();
        for j in 1..arc_len {
            let id = format!("t{i}_{j}");
            vs.push(id.clone());
            es.push((prev, id.clone()));
            prev = id;
        }
        es.push((prev, "y".to_string()));
    }
    build(vs, es)
}

/// Flower with centre `o`: cycle petals of the given lengths (each at least 3)
/// and segment petals with the given numbers of edges.
pub fn flower(cycles: &[usize], segments: &[usize]) -> FiniteGraph {
    let mut vs = vec!["o".to_string()];
    let mut es = Vec::new();
    for (i, &len) in cycles.iter().enumerate() {
        let mut prev = "o".to_string();
        for j in 1..len {
            let id = format!("f{i}_{j}");
            vs.push(id.clone());
            es.push((prev, id.clone()));
            prev = id;
        }
        es.push((prev, "o".to_string()));
    }
    for (i, &len) in segments.iter().enumerate() {
        let mut prev = "o".to_string();
        for j in 1..=len {
            let id = format!("g{i}_{j}");
            vs.push(id.clone());
            es.push((prev, id.clone()));
            prev = id;
        }
    }
    build(vs, es)
}

/// Cycle `c0 .. c{len-1}` with pendant paths `(position, edges)` attached.
pub fn sun(cycle_len: usize, pendants: &[(usize, usize)]) -> FiniteGraph {
    let mut vs = path_ids("c", cycle_len);
    let mut es: Vec<(String, String)> =
        (0..cycle_len).map(|i| (vs[i].clone(), vs[(i + 1) % cycle_len].clone())).collect();
    for (k, &(pos, len)) in pendants.iter().enumerate() {
        let mut prev = format!("c{pos}");
        for j in 1..=len {
            let id = format!("r{k}_{j}");
            vs.push(id.clone());
            es.push((prev, id.clone()));
            prev = id;
        }
    }
    build(vs, es)
}

/// Two triangles `a0 a1 a2` and `b0 b1 b2` joined by a path of `path_len`
/// edges from `a0` to `b0`.
pub fn two_triangles_joined(path_len: usize) -> FiniteGraph {
    let mut vs: Vec<String> = ["a0", "a1", "a2", "b0", "b1", "b2"].iter().map(|s| s.to_string()).collect();
    let mut es: Vec<(String, String)> =
        [("a0", "a1"), ("a1", "a2"), ("a2", "a0"), ("b0", "b1"), ("b1", "b2"), ("b2", "b0")]
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
    let mut prev = "a0".to_string();
    for j in 1..path_len {
        let id = format!("j{j}");
        vs.push(id.clone());
        es.push((prev, id.clone()));
        prev = id;
    }
    es.push((prev, "b0".to_string()));
    build(vs, es)
}

/// Reconstructed, non-normative: four triangles `A = {x, z, a}`,
/// `C = {x, c1, c2}`, `D = {z, y, d}`, `B = {y, b1, b2}` in which exactly the
/// pairs `(A, B)`, `(B, C)`, `(C, D)` are vertex-disjoint, so the 2-particle
/// configuration space contains a chain of three tori.
pub fn delta_prime_reconstructed() -> FiniteGraph {
    from_pairs(
        &[
            ("x", "z"),
            ("z", "a"),
            ("a", "x"),
            ("x", "c1"),
            ("c1", "c2"),
            ("c2", "x"),
            ("z", "y"),
            ("y", "d"),
            ("d", "z"),
            ("y", "b1"),
            ("b1", "b2"),
            ("b2", "y"),
        ],
        &["x", "z", "a", "c1", "c2", "y", "d", "b1", "b2"],
    )
}

/// Reconstructed, non-normative: `delta_prime_reconstructed` plus an edge
/// `a - d` joining the free vertices of the outer triangles.
pub fn delta_reconstructed() -> FiniteGraph {
    let g = delta_prime_reconstructed();
    let vs: Vec<String> = g.names().to_vec();
    let mut es: Vec<(String, String)> =
        g.edges().iter().map(|&[a, b]| (g.name(a).to_string(), g.name(b).to_string())).collect();
    es.push(("a".into(), "d".into()));
    build(vs, es)
}
