//! Permutation groups and graph symmetry, built around the family F(d) of
//! d-valent bicirculants in which one of the two orbits induces a cycle.
//!
//! Module map:
//!
//! * [`perm`], [`group`]: permutations (right action) and enumerated groups,
//!   cosets and double cosets.
//! * [`graph`], [`graph6`]: simple graphs, quotients, covers, serialisation.
//! * [`symmetry`]: automorphism groups by individualisation-refinement,
//!   transitivity, blocks of imprimitivity, kernels.
//! * [`bicirculant`], [`named`]: the F(d) symbol calculus and standard graphs.
//! * [`coset`]: coset graphs and the double-coset valence conditions.
//! * [`circulant`]: arc-transitive circulants and their structural cases.
//! * [`s5`]: the reduced A5/S5 computations closing the twice-odd argument.
//! * [`census`]: the exhaustive edge-transitive search and graph analysis.

pub mod bicirculant;
pub mod census;
pub mod circulant;
pub mod coset;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod group;
pub mod named;
mod par;
pub mod perm;
pub mod s5;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::{Graph, VertexPartition};
pub use group::Group;
pub use perm::Perm;
