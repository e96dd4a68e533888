use thiserror::Error;

/// Errors raised by graph construction, parsing and the named constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the 64-vertex capacity")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop requested at vertex {0}")]
    Loop(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("label count {labels} does not match order {n}")]
    LabelCount { labels: usize, n: usize },
    #[error("no vertex labelled {0:?}")]
    UnknownLabel(String),

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("the null graph has no chromatic stability parameters")]
    NullGraph,

    #[error("order {n} outside the supported range {min}..={max}")]
    OrderOutOfRange { n: usize, min: usize, max: usize },
    #[error("max degree bound {bound} exceeds n-1 for n = {n}")]
    DegreeBound { bound: usize, n: usize },
    #[error("catalog mixes graphs of orders {0} and {1}")]
    MixedOrders(usize, usize),

    #[error("chord index {index} outside 1..={max}")]
    ChordOutOfRange { index: usize, max: usize },
    #[error("subdivision count {count} for edge {u}-{v} is not a positive even number")]
    OddSubdivision { u: usize, v: usize, count: usize },
    #[error("edge {0}-{1} has both endpoints in C_chi")]
    ForbiddenEdge(usize, usize),

    #[error("host graph is not bipartite")]
    HostNotBipartite,
    #[error("host graph has maximum degree {0} > 4")]
    HostDegreeTooLarge(usize),
    #[error("attachment vertices must be distinct")]
    SameAttachment,
    #[error("attachment vertex {vertex} has degree {degree}, expected 2")]
    AttachmentDegree { vertex: usize, degree: usize },
    #[error("attachment vertices {0} and {1} are adjacent")]
    AttachmentsAdjacent(usize, usize),
    #[error("attachment vertices {0} and {1} are in different components")]
    AttachmentsDisconnected(usize, usize),
    #[error("attachment vertices are at even distance {0}")]
    EvenDistance(usize),
    #[error("no cycle of length at least 6 passes through both {0} and {1}")]
    NoCommonCycle(usize, usize),

    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
