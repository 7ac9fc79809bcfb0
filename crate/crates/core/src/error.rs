use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Vertex and edge ids are stored 0-based; messages print them 1-based to
/// match the file formats.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {} out of range (hypergraph has {n_vertices} vertices)", .vertex + 1)]
    VertexOutOfRange { vertex: usize, n_vertices: usize },

    #[error("edge {} is empty", .edge + 1)]
    EmptyEdge { edge: usize },

    #[error("edge {} contains vertex {} twice", .edge + 1, .vertex + 1)]
    DuplicateVertex { edge: usize, vertex: usize },

    #[error("expected {expected} {what}, found {found}")]
    LengthMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("{what} {value} outside {range}")]
    OutOfRange {
        what: &'static str,
        value: String,
        range: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("hypergraph is not linear: edges {} and {} share {shared} vertices", .first + 1, .second + 1)]
    NotLinear {
        first: usize,
        second: usize,
        shared: usize,
    },

    #[error("invariant breach in round {round} at vertex {}: {what} is {observed}, bound {bound}", .vertex + 1)]
    InvariantBreach {
        round: usize,
        vertex: usize,
        what: &'static str,
        observed: String,
        bound: String,
    },

    #[error("instance too large for exhaustive search: {0}")]
    TooLarge(String),

    #[error("generator gave up: {0}")]
    GeneratorExhausted(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    /// Precondition failures and malformed input, as opposed to internal
    /// invariant breaches.
    pub fn is_input_error(&self) -> bool {
        !matches!(self, Error::InvariantBreach { .. } | Error::Io(_))
    }
}
