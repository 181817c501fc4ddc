//! Neighbourhood corona products, exact automorphism groups, distinguishing
//! numbers and indices, and constructive symmetry-breaking labelings.

pub mod automorphisms;
pub mod config;
pub mod constructive;
pub mod corona;
pub mod distinguishing;
pub mod error;
pub mod families;
pub mod formats;
pub mod graph;
pub mod harness;

pub use automorphisms::{
    decompose_corona_automorphism, enumerate_automorphisms, induced_edge_permutation,
    restriction_to_base, AutomorphismGroup, CoronaDecomposition,
};
pub use config::{OutputFormat, RunConfig, SearchLimits};
pub use corona::{neighbourhood_corona, splitting_graph, CoronaGraph, CoronaIndex, Role};
pub use distinguishing::{
    distinguishing_index, distinguishing_number, is_distinguishing_edge, is_distinguishing_vertex,
    DistinguishingReport,
};
pub use error::{Error, Result};
pub use graph::{EdgeLabeling, Graph, Permutation, VertexLabeling};
