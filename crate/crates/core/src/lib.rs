//! Full-homomorphism colourings of small graphs.
//!
//! A full-homomorphism `G -> H` maps vertices so that `uv` is an edge of
//! `G` exactly when the images are adjacent in `H`. This crate decides full
//! `H`-colourability through point-determining cores, enumerates
//! isomorphism classes of small graphs, computes minimal obstruction sets
//! by exhaustive search, and builds the explicit obstruction sets of paths
//! and cycles so the two routes can be checked against each other.

pub mod closed_form;
pub mod enumeration;
pub mod error;
pub mod fullhom;
pub mod graph_core;
pub mod obstructions;
pub mod pd_core;
pub mod validate;

pub use error::{Error, Result};
pub use graph_core::{CanonicalForm, Graph, NamedGraph, StandardKind};
