//! Command-line surface, JSON documents and mesh export for `dlat-core`.

pub mod cli;
pub mod document;
pub mod mesh;
pub mod parallel;
