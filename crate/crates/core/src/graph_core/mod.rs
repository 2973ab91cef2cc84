//! Small-graph representation, standard and named graphs, isomorphism,
//! automorphism orbits, induced-subgraph search and graph6 I/O.

pub mod canon;
pub mod graph;
pub mod graph6;
pub mod search;

pub use canon::{
    automorphism_orbits, canonical_form, canonical_graph, canonize, is_isomorphic, is_vertex_transitive,
    CanonicalForm, Canonization,
};
pub use graph::{make_named, make_standard, vertices_of, Graph, NamedGraph, StandardKind, VertexSet, MAX_ORDER};
pub use graph6::{decode as graph6_decode, encode as graph6_encode};
pub use search::{contains_induced, find_induced};
