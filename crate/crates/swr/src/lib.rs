//! Exact-arithmetic toolkit for strongly walk-regular digraphs.
//!
//! A digraph is strongly l-walk-regular (l > 1) when the number of walks of
//! length l between two vertices depends only on whether the vertices are
//! identical, adjacent, or non-adjacent. This crate decides that property by
//! two independent exact methods (a direct matrix identity and Hoffman
//! polynomial divisibility), classifies diagonalizability of adjacency
//! matrices, generates the relevant digraph families, and exhaustively
//! enumerates small regular digraphs to cross-check the structure theory.

pub mod algebra;
pub mod census;
pub mod digraph;
pub mod engine;
pub mod error;
pub mod families;
pub mod spectral;

pub use error::{Error, Result};
