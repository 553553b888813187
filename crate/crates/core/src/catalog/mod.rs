//! Parameter-free constructions of the named graphs.
//!
//! Pentagon family: `g5`, `g126`, `g16`, `g31`, `g31_alt`.
//! Hexagon family: `g7`, `g19`, `g313`, `g199`, `g397`.

mod hexfam;
mod pentfam;

pub use hexfam::{
    g19, g199, g199_with, g313, g313_with, g397, g7, hex_pair, hex_pair_indices, hex_targets,
    HexFilter, ReducedHex, SpindleDistance,
};
pub use pentfam::{
    g126, g126_extreme, g126_origin, g16, g16_pattern, g31, g31_alt, g5, pent_targets, G16_E1,
    G16_E2,
};

/// Names accepted by [`crate::catalog`] dispatchers such as the CLI `build`.
pub const NAMES: &[&str] = &[
    "g5", "g126", "g16", "g31", "g31-alt", "g7", "g19", "g313", "g199", "g397",
];
