use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("self-loop {0}-{0} not allowed in a simple graph")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for order {n}")]
    VertexRange { vertex: usize, n: usize },
    #[error("invalid graph6 string: {0}")]
    Graph6(String),
    #[error("eccentricity undefined: graph disconnected")]
    Disconnected,
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("matrix order mismatch: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("Jacobi iteration did not converge after {0} sweeps")]
    NoConvergence(usize),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("invalid family spec: {0}")]
    FamilySpec(String),
    #[error("enumeration order {n} exceeds cap {cap}")]
    EnumerationCap { n: usize, cap: usize },
    #[error("could not sample a connected graph after {0} attempts; increase edge probability")]
    SamplingExhausted(usize),
    #[error("unknown check id: {0}")]
    UnknownCheck(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
