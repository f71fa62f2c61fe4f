//! Exhaustive census of 10-vertex graphs whose automorphism group is cyclic of
//! order 4, with exact recomputation of their structural invariants.
//!
//! The building blocks are usable on their own: [`graph::Graph`] with a
//! bit-exact [`graph6`] codec, permutation groups in [`perm`], a
//! refinement-and-backtracking automorphism engine in [`autgroup`], the
//! invariant-graph scan in [`enumerate`], exact invariants in [`invariants`],
//! and the JSON/text verification report in [`report`].

pub mod autgroup;
pub mod edgelist;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod perm;
pub mod report;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, VertexSet};
pub use perm::Permutation;
