//! File format, command drivers, and report shaping for the `valab` binary.
//!
//! The input format is JSON with every rational written as a string `"p"` or
//! `"p/q"`, so no number ever passes through floating point. Tensors are
//! dense nested arrays; see [`format::AlgebroidFile`] for the layout and
//! the fixture files shipped under `fixtures/` for worked examples.

pub mod commands;
pub mod format;
pub mod mutate;
pub mod report;
