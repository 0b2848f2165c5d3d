use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has {n} vertices; at most {max} are supported")]
    TooManyVertices { n: usize, max: usize },
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: usize, v: usize },
    #[error("edge ({u}, {v}) is not present")]
    EdgeNotPresent { u: usize, v: usize },
    #[error("graph6: {0}")]
    Graph6(&'static str),
    #[error("graph6: byte {byte} at position {position} is outside 63..=126")]
    Graph6Byte { position: usize, byte: u8 },
    #[error("graph6: expected {expected} bytes, found {found}")]
    Graph6Length { expected: usize, found: usize },
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is not connected")]
    Disconnected,
    #[error("{what} is {actual}, oracle limit is {limit}")]
    OracleGuard { what: &'static str, actual: usize, limit: usize },
    #[error("enumeration order {n} outside 1..={max}")]
    EnumerationRange { n: usize, max: usize },
    #[error("{family}: {reason}")]
    InvalidParameter { family: &'static str, reason: &'static str },
}
