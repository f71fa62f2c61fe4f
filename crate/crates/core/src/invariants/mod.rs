//! Exact graph invariants.

pub mod basic;
pub mod charpoly;
pub mod coloring;
pub mod connectivity;
pub mod core;
pub mod hamilton;
pub mod planarity;
pub mod profile;
pub mod transitivity;

pub use basic::{degree_stats, girth, is_eulerian, metric, DegreeStats, Length, Metric};
pub use charpoly::{char_poly, IntPolynomial};
pub use coloring::{chromatic_number, clique_number};
pub use connectivity::{connectivity, Connectivity};
pub use core::{hom_core, CoreKind};
pub use hamilton::{hamiltonian_cycle, is_hamiltonian};
pub use planarity::{is_planar, kuratowski_minor, planarity, Kuratowski, PlanarityResult};
pub use profile::{profile, InvariantProfile};
pub use transitivity::{transitivity, Transitivity};
