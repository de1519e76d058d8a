//! OFF and OBJ mesh files, JSON documents and the command-line surface.

pub mod cli;
pub mod json;
mod off;

pub use json::AnalysisDocument;
pub use off::{off_string, parse_off, read_off, write_obj, write_off};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IoError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse { line: usize, col: usize, message: String },
    #[error("not convex: vertex {vertex} lies outside the plane of face {face}")]
    NotConvex { vertex: usize, face: usize },
    #[error("degenerate geometry: {0}")]
    DegenerateGeometry(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("schema: {0}")]
    Schema(String),
}
