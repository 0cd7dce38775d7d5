//! Link-diagram frontend: PD-code parsing, checkerboard coloring, Tait
//! graphs, and the diagram-level classifiers built on top of the lattice
//! and graph machinery.

mod color;
mod pd;
mod report;
mod tait;

pub use color::{chessboard, corner_face, ColoredDiagram};
pub use pd::{parse_pd, LinkDiagram};
pub use report::{
    classify_link, link_determinant, preceq_link, ClassificationReport, Mod3Check,
    PreceqReport, Rational, SummandReport,
};
pub use tait::tait_graph;

#[derive(Debug, thiserror::Error)]
pub enum LinkError {
    #[error("malformed PD code: {0}")]
    MalformedPd(String),
    #[error("bad arc multiplicity: {0}")]
    ArcMultiplicity(String),
    #[error("split diagram: {0}")]
    SplitDiagram(String),
    #[error("not alternating: {0}")]
    NotAlternating(String),
    #[error("not a prime diagram: {0}")]
    NotPrime(String),
    #[error("diagram is not in the composition closure: {0}")]
    NotInD(String),
    #[error(transparent)]
    Graph(#[from] graph_core::GraphError),
    #[error(transparent)]
    Planar(#[from] planar_decomp::PlanarError),
    #[error(transparent)]
    Cube(#[from] cube_tiling::CubeError),
}
