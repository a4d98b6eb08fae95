use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("DIMACS input has no 'p edge' line")]
    MissingHeader,
    #[error("DIMACS header declares {declared} edges but {parsed} distinct edges were read")]
    EdgeCountMismatch { declared: usize, parsed: usize },
    #[error("generator: {0}")]
    Generator(String),
    #[error("invalid alpha: {0}")]
    Alpha(String),
    #[error("invalid mode: {0}")]
    Mode(String),
    #[error("{mode} is undefined for minimum degree {min_degree} (needs at least {needed})")]
    ModeUndefined {
        mode: String,
        min_degree: usize,
        needed: usize,
    },
    #[error("probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("alpha-degree is zero, so the empty set is already optimal; pass an explicit probability to sample anyway")]
    EmptySetOptimal,
    #[error("exact solver is capped at {cap} vertices, graph has {n}")]
    TooLarge { n: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
