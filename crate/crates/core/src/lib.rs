//! High-order clique spectral radii of small graphs.
//!
//! The `r`-clique tensor of a graph has entry `1/(r-1)!` on every ordered
//! tuple of an `r`-clique; its spectral radius `μ_r(G)` generalises the
//! adjacency spectral radius (`r = 2`). This crate computes `μ_r` with a
//! certified power iteration, evaluates the known closed forms and bounds,
//! and runs exhaustive sweeps over small graphs to check extremal results
//! for graphs without two vertex-disjoint `r`-cliques.

pub mod canon;
pub mod clique;
pub mod construct;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::Graph;
