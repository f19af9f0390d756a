use thiserror::Error;

use crate::construct::CaseKind;
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A family parameter is outside its admissible range.
    #[error("{param} must be at least {min} (got {got})")]
    TooSmall {
        param: &'static str,
        min: u32,
        got: u32,
    },
    #[error("n must exceed l (got n={n}, l={l})")]
    NoLeaves { n: u32, l: u32 },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("self-loop at {0}")]
    SelfLoop(VertexId),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(VertexId, VertexId),
    #[error("unlabeled vertex {0}")]
    Unlabeled(VertexId),
    #[error("labeled vertex {0} is not in the graph")]
    UnknownVertex(VertexId),
    #[error("invalid vertex name {0:?}")]
    VertexName(alloc::string::String),
    #[error("instance is {actual}, constructor handles {expected}")]
    WrongCase {
        expected: CaseKind,
        actual: CaseKind,
    },
}
