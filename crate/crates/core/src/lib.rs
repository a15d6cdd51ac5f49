//! Graphs of large odd girth and high minimum degree: odd girth and parity
//! distances, edge-maximal saturation, detectors for the forbidden
//! configurations of edge-maximal graphs, and homomorphisms into odd cycles
//! built without generic search.

pub mod budget;
pub mod forbidden;
pub mod format;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod hom;
pub mod iso;
pub mod parity;
pub mod saturation;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
