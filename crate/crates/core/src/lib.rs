//! Path decompositions of Cartesian products `G □ H` that stay within
//! Gallai's bound `⌈mn/2⌉`, where `m = |V(G)|` and `n = |V(H)|`.
//!
//! The pipeline: [`base`] splits `H` into paths grouped into trails,
//! [`product`] decomposes each `G ⊡ component` for paths, cycles and a few
//! special families, and [`structured`] reduces trees and graphs with one
//! or two cycles to those pieces. [`verify`] checks any result
//! independently and [`oracle`] computes exact minima on small graphs.

pub mod base;
mod bits;
pub mod catalog;
pub mod classify;
pub mod document;
pub mod dot;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod product;
pub mod structured;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, Vertex};
pub use structured::decompose;

/// Version of every JSON document the crate writes.
pub const SCHEMA_VERSION: u32 = 1;
