use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("simple graphs cannot contain the loop at vertex {0}")]
    Loop(usize),

    #[error("element {element} is not in Z_{modulus}")]
    NotInGroup { element: usize, modulus: usize },

    #[error("{divisor} does not divide {modulus}")]
    NotADivisor { divisor: usize, modulus: usize },

    #[error("permutations act on domains of different sizes ({0} vs {1})")]
    DomainMismatch(usize, usize),

    #[error("image list is not a permutation of 0..{0}")]
    NotAPermutation(usize),

    #[error("the permutation is not an automorphism of the graph")]
    NotAutomorphism,

    #[error("the cyclic action has fixed points or short cycles (not free)")]
    NotFree,

    #[error("graph has {vertices} vertices, above the configured cap of {cap}")]
    Oversize { vertices: usize, cap: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("malformed cover vertex: {0}")]
    MalformedCoverVertex(String),

    #[error("the graph does not match the family tag {0}")]
    TagMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
