//! Exact Steiner-distance graph invariants and bound verification.
//!
//! The crate computes the Steiner k-Gutman index, the Steiner k-Wiener
//! index, the k-center Steiner degree distance and the classical Gutman
//! index of small simple graphs with arbitrary-precision arithmetic, and
//! evaluates a catalogue of upper and lower bounds on these quantities
//! (single graph and Nordhaus-Gaddum sum/product forms). Exhaustive
//! enumeration of small graphs lets every bound be checked, together with
//! its equality cases, over the complete universe of graphs of a given
//! order.
//!
//! Everything here is `no_std` with `alloc`; file formats other than the
//! graph6 codec, the command line, and threading live in the `sgut` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bounds;
pub mod canon;
pub mod enumerate;
mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod indices;
pub mod scalar;
pub mod steiner;
pub mod verify;

pub use bounds::{BoundCheck, BoundFamily, BoundId, BoundValue, Direction, PairedGraph};
pub use error::Error;
pub use graph::{DegreeProfile, Graph, VertexSet};
pub use scalar::ExactScalar;
pub use steiner::SteinerTable;

pub type Result<T, E = Error> = core::result::Result<T, E>;
