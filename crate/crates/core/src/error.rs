use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) references a vertex outside 0..{order}")]
    VertexOutOfRange { u: usize, v: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertices {0} and {1} are twins")]
    Twins(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not a split graph")]
    NotSplit,
    #[error("invalid split partition: {0}")]
    InvalidSplitPartition(String),
    #[error("clique is not maximal: stable vertex {0} is adjacent to every clique vertex")]
    NonMaximalClique(usize),
    #[error("order {order} is too small (need at least {min})")]
    OrderTooSmall { order: usize, min: usize },
    #[error("order {order} exceeds the supported limit {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("coloring is not proper: edge ({0}, {1}) is monochromatic")]
    NotProper(usize, usize),
    #[error("invalid coloring: {0}")]
    InvalidColoring(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("search budget exceeded after {nodes} nodes")]
    BudgetExceeded { nodes: u64 },
    #[error("THEOREM-COUNTEREXAMPLE: {0}")]
    TheoremCounterexample(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
