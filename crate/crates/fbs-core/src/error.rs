//! Error type shared by every fallible operation in the crate.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::NodeId;

/// Unified error for graph construction, parsing, and computation.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input text or structure could not be parsed. `line` is 1-based;
    /// 0 means the problem is not tied to a single line.
    Parse { line: usize, message: String },
    /// A graph with zero nodes was supplied where a non-empty one is required.
    EmptyGraph,
    /// A node id at or beyond `node_count`.
    NodeOutOfRange { node: NodeId, node_count: usize },
    /// A node label that does not occur in the graph. `suggestions` holds
    /// up to three close label matches, best first.
    UnknownLabel {
        label: String,
        suggestions: Vec<String>,
    },
    /// A parameter outside its documented domain, or inputs whose shapes
    /// do not line up.
    InvalidInput(String),
    /// An iterative solver hit its iteration cap before reaching the
    /// requested tolerance. `last` is the final iterate.
    NonConvergence {
        iterations: u32,
        residual: f64,
        last: Vec<f64>,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { line, message } => {
                if *line == 0 {
                    write!(f, "parse error: {message}")
                } else {
                    write!(f, "parse error at line {line}: {message}")
                }
            }
            Error::EmptyGraph => write!(f, "empty graph"),
            Error::NodeOutOfRange { node, node_count } => {
                write!(f, "node id {node} out of range (graph has {node_count} nodes)")
            }
            Error::UnknownLabel { label, suggestions } => {
                write!(f, "unknown node label {label:?}")?;
                if !suggestions.is_empty() {
                    write!(f, " (did you mean: {})", suggestions.join(", "))?;
                }
                Ok(())
            }
            Error::InvalidInput(message) => write!(f, "invalid input: {message}"),
            Error::NonConvergence {
                iterations,
                residual,
                ..
            } => write!(
                f,
                "did not converge after {iterations} iterations (residual {residual:e})"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
