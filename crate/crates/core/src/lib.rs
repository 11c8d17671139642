//! Construction of connected graphs with a prescribed finite automorphism
//! group and arbitrarily large clique number, together with the exact
//! solvers (automorphism search, maximum clique, graph coloring) used to
//! verify every claim on concrete instances.

pub mod aut;
pub mod clique;
pub mod color;
pub mod construct;
pub mod error;
pub mod graph;
pub mod group;
pub mod io;
pub mod perm;
pub mod report;

pub use error::{Error, Result};
pub use graph::{complete_graph, cycle_graph, empty_graph, path_graph, Graph, VertexSet};
pub use perm::{PermGroup, Permutation};
