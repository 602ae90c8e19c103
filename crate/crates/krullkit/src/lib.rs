//! Command line, text notation and JSON formats over `krullkit-core`.

pub mod cli;
pub mod formats;
pub mod notation;
