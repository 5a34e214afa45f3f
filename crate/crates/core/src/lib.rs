//! Certificates for the Hamiltonicity of k-connected graphs whose chromatic
//! number is at least `n - k`, plus the graph machinery they rest on.

pub mod cli;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod theorem;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
