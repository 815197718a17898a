use std::fmt;

use crate::graph::EdgeId;

/// What went wrong on a particular input line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    MissingHeader,
    MalformedHeader,
    NonInteger(String),
    WrongTokenCount { expected: usize, found: usize },
    VertexOutOfRange { vertex: usize, n: usize },
    EdgeCountMismatch { declared: usize, found: usize },
    Other(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::MissingHeader => write!(f, "missing header line"),
            ParseErrorKind::MalformedHeader => write!(f, "malformed header"),
            ParseErrorKind::NonInteger(tok) => write!(f, "non-integer token {tok:?}"),
            ParseErrorKind::WrongTokenCount { expected, found } => {
                write!(f, "expected {expected} tokens, found {found}")
            }
            ParseErrorKind::VertexOutOfRange { .. } => write!(f, "vertex index out of range"),
            ParseErrorKind::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges, found {found}")
            }
            ParseErrorKind::Other(msg) => f.write_str(msg),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{kind}, line {line}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("unknown edge id {0}")]
    UnknownEdge(EdgeId),

    #[error("graph is not strongly connected")]
    NotStronglyConnected,

    #[error("graph contains a cycle")]
    Cyclic,

    #[error("{what}: size {size} exceeds the limit {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid cycle: {0}")]
    InvalidCycle(String),

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, kind: ParseErrorKind) -> Self {
        Error::Parse { line, kind }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
