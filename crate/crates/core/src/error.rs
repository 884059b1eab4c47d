use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("decomposition is not nice: {0}")]
    NotNice(String),

    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{solver} refused a graph with {n} vertices (budget {budget})")]
    Refused {
        solver: String,
        n: usize,
        budget: usize,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
