//! Cubiquity and 2-cube-tiling decision procedures.
//!
//! A full-rank sublattice of Z^n is cubiquitous when it meets every unit
//! cube with integer corners, and a 2-cube tiling lattice when in addition
//! its determinant reaches the maximal value 4^n: its points then center a
//! tiling of R^n by cubes of side 2. Such lattices are exactly the images
//! of triangular certificate matrices with 2s on the diagonal, which this
//! crate extracts, enumerates and searches for.

mod cubiquity;
mod embed;
mod extract;
mod hajos;

pub use cubiquity::{is_2cube_tiling, is_cubiquitous, CubiquityReport};
pub use embed::{
    find_cubiquitous_embedding, find_stabilized_cubiquitous_embedding, StabilizedEmbedding,
};
pub use extract::{extract_hajos, reorder_for_square4, CoordinateChange};
pub use hajos::{classify_hajos_difference, hajos_vectors, HajosMatrix};

use lattice_core::LatticeError;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CubeError {
    #[error("lattice is not full rank")]
    NotFullRank,
    #[error("ambient rank {0} exceeds the cubiquity cap of {1}")]
    AmbientTooLarge(usize, usize),
    #[error("lattice is not a 2-cube tiling: {0}")]
    NotTiling(String),
    #[error("element does not have self-pairing 4")]
    NotSquare4,
    #[error("stabilized embedding search requires equal normalized determinants")]
    UnequalNormalizedDeterminant,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}
