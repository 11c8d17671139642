use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex count {n} exceeds the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} is not allowed")]
    LoopRejected(usize),
    #[error("invalid graph6: {0}")]
    Graph6(String),
    #[error("invalid edge list: {0}")]
    EdgeList(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid permutation: {0}")]
    BadPermutation(String),
    #[error("invalid Cayley table: {0}")]
    BadCayleyTable(String),
    #[error("invalid group spec: {0}")]
    BadGroupSpec(String),
    #[error("group enumeration cap of {0} elements exceeded")]
    CapExceeded(usize),
    #[error("instance too large for this solver: {n} exceeds the cap of {cap}")]
    SolverCapExceeded { n: usize, cap: usize },
    #[error("input graph is complete; apply corollary_base to obtain a non-complete graph with the same automorphism group")]
    CompleteInput,
    #[error("boost requires a base graph on at least 2 vertices")]
    TooSmallToBoost,
    #[error("malformed certificate: {0}")]
    BadCertificate(String),
    #[error("validation failed: {0}")]
    ValidationFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
