//! Discrete configuration spaces of particles on finite graphs.
//!
//! The crate builds the cube complex `UC_n(G)` of unordered configurations of
//! `n` particles on a simple graph `G`, cuts it along hyperplanes, and reads
//! off graph-of-groups decompositions of the resulting braid groups. Exact
//! integral homology and fundamental-group presentations serve as independent
//! checks on every structural claim.
//!
//! Module map:
//! - [`graph`]: simple graphs, subdivision, classification into named families.
//! - [`complex`]: the cube complex `UC_n(G)`, its components and duality.
//! - [`hyperplanes`]: parallelism classes of edges and specialness checks.
//! - [`gog`]: graph-of-groups decompositions, group descriptors, criteria.
//! - [`presentation`]: presentations of fundamental groups.
//! - [`homology`]: boundary matrices, Smith normal form, Betti numbers.

pub mod combinatorics;
pub mod complex;
pub mod dsu;
pub mod gog;
pub mod graph;
pub mod homology;
pub mod hyperplanes;
pub mod presentation;

pub use complex::{build_uc, CubeComplex};
pub use graph::FiniteGraph;

/// Schema version stamped on every serialized report.
pub const SCHEMA_VERSION: u32 = 1;
