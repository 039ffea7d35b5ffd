use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("graph capacity exceeded: {requested} vertices requested, at most {max} supported")]
    Capacity { requested: usize, max: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{what} inapplicable: {reason}")]
    Inapplicable { what: &'static str, reason: String },

    #[error(
        "power iteration for order {order} did not converge after {iterations} iterations; \
         radius bracket [{lower}, {upper}]"
    )]
    NotConverged {
        order: usize,
        iterations: usize,
        lower: f64,
        upper: f64,
    },

    #[error("while evaluating graph {graph6}: {source}")]
    AtGraph {
        graph6: String,
        #[source]
        source: Box<Error>,
    },

    #[error("catalog line {line}: {message}")]
    Catalog { line: usize, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Graph6ErrorKind {
    Empty,
    BadChar(u8),
    Truncated,
    TrailingData,
    VertexCount(usize),
}

impl std::fmt::Display for Graph6ErrorKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Graph6ErrorKind::Empty => write!(f, "empty input"),
            Graph6ErrorKind::BadChar(c) => write!(f, "byte 0x{c:02x} outside the graph6 range 63..=126"),
            Graph6ErrorKind::Truncated => write!(f, "payload truncated"),
            Graph6ErrorKind::TrailingData => write!(f, "unexpected trailing data"),
            Graph6ErrorKind::VertexCount(n) => write!(f, "vertex count {n} exceeds the supported maximum"),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn inapplicable(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Inapplicable {
            what,
            reason: reason.into(),
        }
    }

    /// True when this error (or the error it wraps) is a power-iteration failure.
    pub fn is_non_convergence(&self) -> bool {
        match self {
            Error::NotConverged { .. } => true,
            Error::AtGraph { source, .. } => source.is_non_convergence(),
            _ => false,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
