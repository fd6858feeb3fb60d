//! Exact computation of location-domination invariants, the edge-labeled
//! graph associated with a locating-dominating set, extremal bipartite
//! constructions, and exhaustive verification suites over small graphs.
//!
//! Start with [`Graph`] and the [`solver`] module; the `examples/`
//! directory of this crate has one runnable example per capability.

pub mod assoc;
pub mod bipartite;
pub mod cactus;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod solver;
pub mod verify;

pub use bipartite::{bipartition, Bipartition};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use solver::{lambda, lambda_complement, lambda_global};
