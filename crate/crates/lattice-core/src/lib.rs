//! Exact-arithmetic positive definite integer lattices.
//!
//! Everything here is integer or rational arithmetic: Gram matrices,
//! determinants, membership tests, discriminant groups via Smith normal
//! form, short-vector enumeration, and brute-force classification of
//! simple/irreducible/rigid elements. No floating point anywhere.

mod classify;
mod enumerate;
mod isometry;
mod lattice;
mod matrix;
mod textfmt;

pub use classify::{classify_element, indecomposable_summands, ElementClass};
pub use enumerate::{short_vectors, SearchLimits};
pub use isometry::isometry_test;
pub use lattice::{DiscriminantGroup, EmbeddedLattice, GramLattice};
pub use matrix::{bareiss_determinant, mat_mul, mat_vec, smith_normal_form, SmithForm};
pub use textfmt::{parse_lattice_text, write_lattice_text, ParsedLattice};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("invalid lattice: {0}")]
    Invalid(String),
    #[error("lattice is not full rank in its ambient space")]
    NotFullRank,
    #[error("search exceeded its node ceiling: {0}")]
    BoundTooLarge(String),
    #[error("given vectors do not form a basis")]
    NotABasis,
    #[error("parse error: {0}")]
    Parse(String),
}
