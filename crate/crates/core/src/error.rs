use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("graph order {order} outside supported range 1..={max}")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("graph is bipartite")]
    Bipartite,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("invalid branch: {0}")]
    InvalidBranch(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("no U(n={n}, k, g={g}) realizes domination number {gamma}; profile {profile:?}")]
    UnrealizedGamma {
        n: usize,
        g: usize,
        gamma: usize,
        profile: Vec<usize>,
    },

    #[error("graph class is empty: {0}")]
    EmptyClass(String),

    #[error("extraction step '{step}' broke an invariant on {graph6}")]
    ExtractionInvariant { step: &'static str, graph6: String },
}
