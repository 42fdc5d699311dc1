//! Std companion to `gsbound-core`: the edge-list file format, JSON/text
//! report rendering, and the `gsbound` command-line tool.

pub mod cli;
pub mod format;
pub mod report;

pub use format::{parse_graph, serialize_graph, ParseError, ParseErrorKind};
