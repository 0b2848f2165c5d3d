//! Exact chromatic number and chromatic stability invariants for small
//! simple graphs.
//!
//! For a graph `G` with at least one edge this crate computes
//!
//! * `χ(G)`, the chromatic number, with a witness coloring;
//! * `vs_χ(G)`, the fewest vertices whose deletion lowers `χ` by one;
//! * `ivs_χ(G)`, the same but restricted to independent vertex sets;
//! * `es_χ(G)`, the fewest edges whose deletion lowers `χ` by one.
//!
//! Every solver has a slow brute-force counterpart used to cross-check it.
//! Graphs are limited to 62 vertices so that every vertex set fits in one
//! machine word.
//!
//! The crate is `no_std` and needs only `alloc`.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod checks;
pub mod chromatic;
pub mod constructions;
mod error;
pub mod graph;
pub mod graph6;
pub mod stability;
mod vertex_set;

pub use chromatic::{
    brooks_classify, chromatic_number, chromatic_oracle, greedy_clique_lower_bound, is_k_colorable,
    BrooksClass, Coloring,
};
pub use error::{Error, Result};
pub use graph::{Edge, Graph, InducedSubgraph, LabeledGraphs, MAX_VERTICES};
pub use graph6::{parse_graph6, to_graph6};
pub use stability::{
    edge_stability, edge_stability_oracle, independent_vertex_stability, stability, stability_by_components,
    vertex_stability, vertex_stability_oracle, StabilityKind, StabilityResult, Witness,
};
pub use vertex_set::VertexSet;
