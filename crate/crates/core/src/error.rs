use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is not a clique")]
    NotAClique,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("missing `*Vertices` header")]
    MissingVerticesHeader,
    #[error("line {line}: vertex id {id} outside declared range 1..={declared}")]
    VertexIdOutOfRange {
        line: usize,
        id: i64,
        declared: usize,
    },
    #[error("unbalanced brackets in GML document")]
    UnbalancedBrackets,
    #[error("edge references undeclared node id {0}")]
    UndeclaredNode(String),
    #[error("no `graph [ ... ]` block found")]
    MissingGraphBlock,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("invalid configuration: {0}")]
    Invalid(String),
    #[error("malformed configuration document: {0}")]
    Syntax(#[from] toml::de::Error),
}

/// Crate-level error for I/O-facing entry points.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{}: {source}", path.display())]
    Parse { path: PathBuf, source: ParseError },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("dataset `{name}` failed to load: {reason}")]
    Dataset { name: String, reason: String },
    #[error(
        "reports cover different datasets: only in first {only_a:?}, only in second {only_b:?}"
    )]
    DatasetMismatch {
        only_a: Vec<String>,
        only_b: Vec<String>,
    },
    #[error("report is empty")]
    EmptyReport,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
