use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("{what}: instance size {size} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("resource limit reached: {0}")]
    ResourceLimit(String),

    #[error("set is not a minimal dominating set")]
    NotMinimalDominating,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("hyperedge {0} is empty and cannot be hit")]
    EmptyHyperedge(usize),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors that come from a configured cap or time/node budget.
    pub fn is_resource_error(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::ResourceLimit(_))
    }
}
