//! Orientation Ramsey toolkit: exhaustive arrow checks for oriented graphs,
//! constructive embeddings, and the numeric bound machinery around them.

pub mod arrows;
pub mod bounds;
pub mod canon;
pub mod catalog;
pub mod constructions;
pub mod certificate;
pub mod distance;
pub mod embedder;
pub mod embedding;
pub mod error;
pub mod graph;
pub mod io;
pub mod orientation;
pub mod random;
mod par;

pub use error::{Error, Result};
