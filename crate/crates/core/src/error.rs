use alloc::string::String;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("vertex count {0} outside [1, {max}]", max = crate::MAX_VERTICES)]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),

    #[error("adjacency is not symmetric at ({a}, {b})")]
    InvalidAdjacency { a: usize, b: usize },

    #[error("unknown graph name `{0}`")]
    UnknownGraph(String),

    #[error("size {size} out of range for `{family}` (allowed {min}..={max})")]
    NamedGraphSize {
        family: &'static str,
        size: usize,
        min: usize,
        max: usize,
    },

    #[error("bipartition side must be a proper non-empty subset")]
    TrivialBipartition,

    #[error("vertex set is not independent")]
    NotIndependent,

    #[error("product state has {got} qubits, graph has {expected}")]
    QubitCountMismatch { expected: usize, got: usize },

    #[error("invalid product state: {0}")]
    InvalidProductState(&'static str),

    #[error("{what} limited to n <= {max}, got n = {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("invalid optimizer config: {0}")]
    InvalidConfig(&'static str),

    #[error("Schmidt rank {0} is not a power of two")]
    NonDyadicSchmidtRank(usize),

    #[error(
        "consistency violation: fidelity {fidelity} exceeds certified ceiling {ceiling} \
         (lower bound {ebits} ebits)"
    )]
    CeilingViolation {
        fidelity: f64,
        ceiling: f64,
        ebits: usize,
    },
}
