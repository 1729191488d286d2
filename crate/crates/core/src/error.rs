use thiserror::Error;

use crate::graph::VertexId;
use crate::weights::KrFactor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1")]
    ZeroRank,
    #[error("node {node} is outside the diagram A{rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    #[error("[{lo},{hi}] is not a subdiagram of A{rank}")]
    InvalidSubdiagram { lo: usize, hi: usize, rank: usize },
    #[error("node {node} is outside the subdiagram [{lo},{hi}]")]
    NodeOutsideSubdiagram { node: usize, lo: usize, hi: usize },
    #[error("KR length must be at least 1")]
    ZeroLength,
    #[error("polynomials live over different diagrams (A{0} vs A{1})")]
    DiagramMismatch(usize, usize),
    #[error("divisor does not divide the polynomial")]
    NotDivisible,
    #[error("{0} and {1} are not in special position")]
    NotSpecialPosition(KrFactor, KrFactor),
    #[error("{0} and {1} form an irreducible pair")]
    IrreduciblePair(KrFactor, KrFactor),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("polynomial is not supported on a single node")]
    NotMonochromatic,
    #[error("polynomial does not have snake support")]
    NoSnakeSupport,
    #[error("expected a q-factorization graph with {expected} vertices, found {found}")]
    WrongVertexCount { expected: usize, found: usize },
    #[error("unexpected graph shape: {0}")]
    UnexpectedShape(String),
    #[error("graph has {size} vertices, above the enumeration bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("invalid multicut: {0}")]
    InvalidMulticut(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
