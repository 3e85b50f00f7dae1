use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}:{line}: self-loop on node '{token}'")]
    SelfLoop {
        path: String,
        line: usize,
        token: String,
    },
    #[error("unknown node id {0}")]
    UnknownNode(usize),
    #[error("unknown node label '{0}'")]
    UnknownLabel(String),
    #[error("nodes must be distinct, got node {0} twice")]
    IdenticalNodes(usize),
    #[error("graph must have at least 3 nodes, has {0}")]
    TooFewNodes(usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("need at least 2 edges to rewire, have {0}")]
    TooFewEdges(usize),
    #[error("weight multiset has {got} entries but the graph has {expected} edges")]
    WeightCountMismatch { got: usize, expected: usize },
    #[error("total edge weight is zero")]
    TotalWeightZero,
    #[error("node {0} has no class label")]
    MissingClass(usize),
    #[error("empty ensemble")]
    EmptyEnsemble,
    #[error("invalid specification: {0}")]
    InvalidSpec(String),
    #[error("truth sets do not partition the graph's nodes")]
    TruthMismatch,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
