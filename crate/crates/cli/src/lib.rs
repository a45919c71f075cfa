//! Command-line companion to `sl2fd-core`: flag parsing, machine-readable
//! output, and approximate root labeling. All mathematics stays exact in
//! the core crate; this crate only formats and dispatches.

pub mod args;
pub mod commands;
pub mod output;
pub mod roots;
