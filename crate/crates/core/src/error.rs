use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("order {n} exceeds the supported maximum of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("order {n} is below the required minimum of {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    IndexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex set is not contained in the vertex range of the graph")]
    SetOutOfRange,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("complement of the graph is disconnected")]
    ComplementDisconnected,
    #[error("k = {k} outside the admissible range [{min}, {max}]")]
    KOutOfRange { k: usize, min: usize, max: usize },
    #[error("invalid order {n} for family {family}")]
    InvalidFamilyOrder { family: &'static str, n: usize },
    #[error("no case of the bound applies (delta = {delta}, Delta = {max_degree}, n = {n})")]
    NoCaseApplies {
        delta: usize,
        max_degree: usize,
        n: usize,
    },
    #[error("degenerate degrees: delta * (n - Delta - 1) = 0")]
    DegenerateDegrees,
    #[error("bound check is not tight")]
    NotTight,
    #[error("unknown bound selector `{0}`")]
    UnknownBound(alloc::string::String),
    #[error("unknown graph family `{0}`")]
    UnknownFamily(alloc::string::String),
    #[error("malformed graph6 header")]
    MalformedHeader,
    #[error("graph6 string is truncated")]
    Truncated,
    #[error("invalid graph6 byte {0:#04x}")]
    InvalidByte(u8),
    #[error("trailing bytes after graph6 payload")]
    TrailingGarbage,
    #[error("graph6 padding bits are not zero")]
    NonCanonicalPadding,
}
