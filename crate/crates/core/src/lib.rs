//! Minimum eccentricity shortest paths on unweighted graphs.
//!
//! A shortest path `P` has eccentricity `ecc(P)`, the largest distance from
//! any vertex to `P`; `k(G)` is the least eccentricity over all shortest
//! paths. This crate provides the linear-time double-BFS and recursive
//! approximations, exhaustive oracles for small graphs, laminarity
//! parameters of diameters, and generators for extremal instances.

pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod laminarity;
pub mod mesp;
pub mod search;

pub use error::{Error, Result};
pub use graph::{build_graph, EccReport, Graph, Path};
