use thiserror::Error;

use crate::theorem::HypothesisFlag;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("order {n} exceeds the limit of {max}")]
    OrderTooLarge { n: usize, max: usize },
    #[error("order {n} is below the minimum of {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("operation undefined on the empty graph")]
    EmptyGraph,

    #[error("graph6: byte {byte:#04x} at offset {offset} outside 63..=126")]
    MalformedByte { offset: usize, byte: u8 },
    #[error("graph6: payload truncated, expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6: {extra} trailing bytes after payload")]
    TrailingBytes { extra: usize },
    #[error("graph6: nonzero padding bits")]
    NonzeroPadding,
    #[error("graph6: empty input")]
    EmptyInput,

    #[error("graph is acyclic")]
    Acyclic,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("vertex {0} lies on the cycle")]
    OnCycle(usize),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("only {found} disjoint paths exist, {required} required")]
    InsufficientPaths { found: usize, required: usize },
    #[error("attachments are not in cycle order")]
    AttachmentsOutOfOrder,
    #[error("case precondition violated: {0}")]
    CasePrecondition(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(HypothesisFlag),
}
