//! Decomposing 4-cycles of embedded planar multigraphs, the factor and
//! composition moves they induce, a recursive classifier for the closure
//! of {singleton, edge} under composition, a bounded generator for that
//! family, and the induced partial order on its members.

mod classify;
mod decompose;
mod enumerate;
mod hajos;

pub use classify::{
    classify_g, recompose, DecompositionCertificate, FailureReason, FailureWitness,
};
pub use decompose::{
    compose, compose_full, decompose, find_4cycles, is_decomposing_cycle, Composition,
    CycleCheck, DecomposingCycle, Factor,
};
pub use enumerate::{enumerate_g, preceq, ENUM_EDGE_CAP};
pub use hajos::certificate_hajos;

use graph_core::{EdgeId, GraphError};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PlanarError {
    #[error("distinguished edge {0} is a loop")]
    LoopDistinguished(EdgeId),
    #[error("graph is not in the composition closure: {0}")]
    NotInG(String),
    #[error("bound too large: {0}")]
    BoundTooLarge(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Cube(#[from] cube_tiling::CubeError),
}
