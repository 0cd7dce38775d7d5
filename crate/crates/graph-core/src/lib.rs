//! Planar multigraphs with combinatorial (rotation-system) embeddings.
//!
//! Graphs here are multigraphs on the sphere: loops and parallel edges are
//! allowed, and the embedding is recorded as a cyclic order of edge-ends
//! around each vertex. Faces, blocks, cycles and orientations are all
//! derived from this data.

mod blocks;
mod canon;
mod cycles;
mod graph;
mod orientation;
mod surgery;
mod textfmt;

pub use blocks::{blocks, Block};
pub use canon::{
    canonical_form, canonical_map_code, graphs_isomorphic, maps_equivalent, CanonicalForm,
};
pub use cycles::{enumerate_cycles, Cycle};
pub use graph::{Dart, EdgeEnd, Face, PlanarMultigraph, SpanningForest};
pub use orientation::{
    is_acyclic_orientation, is_strongly_connected_orientation, EdgeOrientation,
};
pub use surgery::{contract_edge, delete_edges, restrict_to_edges, Surgered};
pub use textfmt::{parse_graph_text, write_graph_text};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("embedding is not spherical: component has V-E+F = {0}, expected 2")]
    NonSpherical(i64),
    #[error("parse error: {0}")]
    Parse(String),
}
