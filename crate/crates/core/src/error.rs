use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{op}: dimension mismatch between {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("entry ({row}, {col}) is {value}, expected 0 or 1")]
    NotZeroOne { row: usize, col: usize, value: u32 },
    #[error("ragged rows: row {row} has {len} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("not a permutation: {0}")]
    NotPermutation(&'static str),
    #[error("arc ({tail}, {head}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { tail: usize, head: usize, n: usize },
    #[error("digraph is not regular: vertex {vertex} has in-degree {in_degree} and out-degree {out_degree}")]
    NotRegular {
        vertex: usize,
        in_degree: usize,
        out_degree: usize,
    },
    #[error(
        "digraph has no vertices or degree 0; a dicycle factorization needs degree at least 1"
    )]
    ZeroDegree,
    #[error("no perfect matching: rows {witness:?} reach only {neighbours} columns")]
    NoPerfectMatching {
        witness: Vec<usize>,
        neighbours: usize,
    },
    #[error("degree {d} exceeds vertex count {n}")]
    DegreeExceedsOrder { n: usize, d: usize },
    #[error("retry budget exhausted while sampling factor {factor}")]
    RetryBudgetExhausted { factor: usize },
    #[error("line digraph undefined for empty arc set")]
    EmptyArcSet,
    #[error("not a spanning subdigraph: {0}")]
    NotSpanningSubdigraph(&'static str),
    #[error("factorization inconsistent with digraph: {0}")]
    InconsistentFactorization(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
