//! Expression parsing, rendering, report documents, and the command-line
//! surface.

pub mod cli;
pub mod parse;
pub mod render;
pub mod report;
