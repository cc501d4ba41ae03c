//! Restrained double Roman domination and related parameters on simple
//! undirected graphs.

pub mod analysis;
pub mod constructions;
pub mod exact;
pub mod fuzz;
pub mod graph;
pub mod labelings;
pub mod tree_dp;

pub use graph::{Graph, GraphError, VertexSet};
pub use labelings::Labeling;
