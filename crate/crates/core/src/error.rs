use thiserror::Error;

/// Errors produced by graph construction, search and the constructive labelings.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid label: {0}")]
    InvalidLabel(String),

    #[error("permutation is not an automorphism")]
    NotAnAutomorphism,

    #[error("graph of order {n} exceeds the vertex cap {cap}")]
    VertexCapExceeded { n: usize, cap: usize },

    #[error("automorphism group exceeds the group cap {cap}")]
    GroupCapExceeded { cap: usize },

    #[error("labeling search at k = {k} exceeded the labeling cap {cap}")]
    LabelingCapExceeded { k: usize, cap: u64 },

    #[error("hypothesis violation: {0}")]
    HypothesisViolation(String),

    #[error("decomposition failure: {0}")]
    DecompositionFailure(String),

    #[error("base labeling is not distinguishing: {0}")]
    NotDistinguishing(String),

    #[error("distinguishing index undefined: a non-identity automorphism fixes every edge")]
    EdgeDegenerate,

    #[error("{needed} blades requested but only {available} canonical tuples exist over {labels} labels")]
    InsufficientLabels {
        needed: usize,
        available: usize,
        labels: usize,
    },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
