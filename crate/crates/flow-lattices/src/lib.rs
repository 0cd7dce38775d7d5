//! Flow and cut lattices of embedded multigraphs: the graph-side
//! classification of simple, irreducible, and rigid elements, chain
//! decompositions over Flow ⊕ Cut, characteristic cosets and their short
//! elements, cycle nesting, and the lattice d-invariant.

mod charcoset;
mod classify;
mod dinv;
mod lattices;
mod nesting;

pub use charcoset::{
    characteristic_from_orientation, characteristic_self_pairing,
    short_characteristic_elements, unique_short_in_coset, CharCoset, ShortElement,
};
pub use classify::{
    classify_cut_element, classify_flow_element, decompose_simple_chain, CutClass, FlowClass,
};
pub use dinv::{
    d_invariant, d_invariant_from_orientations, d_invariants_isomorphic, DInvariant,
};
pub use lattices::{cut_lattice, flow_lattice, CutLattice, FlowLattice};
pub use nesting::{nesting_check, Nesting};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("not a flow: {0}")]
    NotAFlow(String),
    #[error("not a cut: {0}")]
    NotACut(String),
    #[error("not in the direct sum of the flow and cut lattices: {0}")]
    NotInDirectSum(String),
    #[error("enumeration bound exceeded: {0}")]
    BoundTooLarge(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Lattice(#[from] lattice_core::LatticeError),
}
