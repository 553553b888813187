//! Library side of the `twodist` command: graph documents, catalog
//! dispatch, SVG rendering and the reproduction battery.

pub mod build;
pub mod document;
pub mod render;
pub mod verify;

pub use document::{AnyGraph, Embedded, GraphDocument};
