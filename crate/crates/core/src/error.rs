use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {0}-{1} joins two vertices of the same part")]
    NotAHostEdge(usize, usize),

    #[error("color {color} out of range 1..={k}")]
    ColorOutOfRange { color: usize, k: usize },

    #[error("coloring is partial: {0} pair(s) uncolored")]
    PartialColoring(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0}")]
    NotEulerian(String),

    #[error("no legal swap while a red component has {edges} > {target} edges")]
    NoLegalSwap { edges: u64, target: u64 },

    #[error("instance n={n}, k={k} exceeds the search guard (n <= {max_n}, k <= {max_k})")]
    SearchTooLarge {
        n: usize,
        k: usize,
        max_n: usize,
        max_k: usize,
    },

    /// A check that holds for every valid input failed. Always a bug.
    #[error("bound check failed: {0}")]
    CheckFailed(String),
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
