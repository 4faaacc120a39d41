//! Command-line front end and file formats for `framekit-core`.
//!
//! Frames are exchanged as JSON ([`json`]), point sets and tables as CSV
//! ([`tables`]), and figures as SVG scatter plots ([`svg`]). The `framekit`
//! binary is a thin wrapper over [`cli::main`].

pub mod catalog;
pub mod cli;
mod error;
pub mod json;
pub mod parallel;
pub mod report;
pub mod svg;
pub mod tables;

pub use error::{Error, Result};
pub use framekit_core;
