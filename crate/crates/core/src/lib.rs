//! Exact construction and coloring analysis of two-distance plane graphs.

pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod geometry;
pub mod graphs;
pub mod solver;

pub use error::{Error, Result};
