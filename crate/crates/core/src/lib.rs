//! Odd edge-colorings of subdivisions of odd multigraphs.

pub mod error;
pub mod multigraph;
pub mod structure;
pub mod tjoin;
pub mod coloring;
pub mod sclass;
pub mod family;
pub mod canon;
pub mod oracle;
pub mod classifier;
pub mod census;
pub mod io;

pub use error::{Error, Result};
pub use multigraph::{EdgeId, EdgeSubset, MultiGraph, VertexId};
