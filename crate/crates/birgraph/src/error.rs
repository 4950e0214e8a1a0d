use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("edge ({0}, {1}) references an undeclared vertex")]
    DanglingEdge(usize, usize),
    #[error("weight overflow at vertex {0}")]
    WeightOverflow(VertexId),
    #[error("no such vertex {0}")]
    MissingVertex(VertexId),
    #[error("no such edge {0}")]
    MissingEdge(EdgeId),
    #[error("vertex {0} cannot be blown down: {1}")]
    NotBlowdownable(VertexId, &'static str),
    #[error("vertex {0} does not have weight 0")]
    NotZeroVertex(VertexId),
    #[error("vertex {0} is not at most linear")]
    NotAtMostLinear(VertexId),
    #[error("pattern mismatch: {0}")]
    PatternMismatch(String),
    #[error("chain is not of the form [[0,...,0]] with an odd number of zeros")]
    NotOddZeroChain,
    #[error("circular graph is not almost standard")]
    NotAlmostStandard,
    #[error("trace source fingerprint {expected} does not match graph {found}")]
    FingerprintMismatch { expected: String, found: String },
    #[error("vertex {0} is not part of the trace source")]
    UnknownVertex(VertexId),
    #[error("graph is not standard")]
    NotStandard,
    #[error("graph is not a linear chain")]
    NotLinear,
    #[error("endpoints are not standard with zeros on the left")]
    EndpointsNotStandard,
    #[error("malformed fraction: {0}")]
    MalformedFraction(String),
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("graphs are not birationally equivalent")]
    NotEquivalent,
    #[error("invalid trace: {0}")]
    InvalidTrace(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
