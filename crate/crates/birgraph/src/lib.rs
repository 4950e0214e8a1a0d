//! Weighted graphs of rational surfaces up to birational equivalence.

pub mod birational;
pub mod equivalence;
pub mod error;
pub mod format;
pub mod graph;
pub mod invariants;
pub mod sample;
pub mod standardize;
pub mod tables;

pub use error::{Error, Result};
pub use format::{format_graph, parse_graph};
pub use graph::{CircularGraph, EdgeId, LinearChain, Shape, VertexId, WeightedGraph};
