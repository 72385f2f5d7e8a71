//! Serialization of complexes: DOT for the 1-skeleton and graded counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::CubeComplex;
use crate::graph::esc;

impl CubeComplex {
    /// Graded cube counts keyed by dimension.
    pub fn counts_by_dim(&self) -> BTreeMap<usize, usize> {
        self.counts().into_iter().enumerate().collect()
    }

    /// Graphviz rendering of the 1-skeleton; edges carry their graph labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph UC {\n");
        for (i, c) in self.cubes(0).iter().enumerate() {
            let label = self.config_names(c.base).join(",");
            let _ = writeln!(out, "  v{i} [label=\"{{{}}}\"];", esc(&label));
        }
        for i in 0..self.cube_count(1) {
            let (a, b) = self.edge_endpoints(i);
            let label = self.graph().edge_label(self.edge_label(i));
            let _ = writeln!(out, "  v{a} -- v{b} [label=\"{}\"];", esc(&label));
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use crate::complex::build_uc;
    use crate::graph::families;

    #[test]
    fn hexagon_dot() {
        let cc = build_uc(&families::star(&[1, 1, 1]), 2, None).unwrap();
        let dot = cc.to_dot();
        assert_eq!(dot.matches(" -- ").count(), 6);
        assert!(dot.contains("label=\"o-p0_1\""));
        assert_eq!(cc.counts_by_dim().get(&1), Some(&6));
    }
}
