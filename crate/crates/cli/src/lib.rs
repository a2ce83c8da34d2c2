//! Reusable pieces of the `antipodal` binary: set-file parsing and
//! serialization, deterministic SVG rendering, and the pitch-clock demo.

pub mod music;
pub mod setfile;
pub mod svg;
