use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph order {0} exceeds the vertex cap {}", crate::graph::MAX_VERTICES)]
    TooManyVertices(usize),

    #[error("graph6 parse error: {0}")]
    Graph6(#[from] Graph6Error),

    #[error("vertices {0:?} do not form a triangle")]
    NotATriangle([usize; 3]),

    #[error("graph is not (k,t)-regular: {0}")]
    NotKtRegular(String),

    #[error("graph is not regular: {0}")]
    NotRegular(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("partition side must be a proper nonempty vertex subset")]
    TrivialPartition,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unknown catalog graph `{0}`")]
    UnknownCatalogName(String),

    #[error("permutation group error: {0}")]
    Group(String),

    #[error("identity element in Cayley connection set")]
    IdentityInConnectionSet,

    #[error("suborbit selection is not symmetric: {0}")]
    AsymmetricSelection(String),

    #[error("recipe parse error: {0}")]
    RecipeParse(String),

    #[error("invalid recipe: {0}")]
    InvalidRecipe(String),

    #[error("canonical form supports at most 64 vertices, got {0}")]
    CanonicalTooLarge(usize),

    #[error("search task invalid: {0}")]
    InvalidSearchTask(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header")]
    MalformedHeader,
    #[error("character {0:?} outside graph6 range")]
    InvalidChar(char),
    #[error("expected {expected} payload characters, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("nonzero padding bits at end of payload")]
    TrailingBits,
    #[error("declared order {0} exceeds the vertex cap")]
    OrderTooLarge(u64),
}
