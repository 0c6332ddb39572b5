use crate::graph::Node;

/// Errors surfaced by the library.
///
/// Everything here is exact arithmetic, so there are no tolerance or
/// convergence failures; errors are either bad inputs (non-dominant weights,
/// malformed patterns, degenerate evaluation points) or internal-consistency
/// violations that indicate a bug rather than a recoverable condition.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("weight {0:?} is not dominant (entries must be non-increasing)")]
    NonDominant(Vec<i64>),

    #[error("weight {0:?} is not regular (entries must be strictly decreasing)")]
    NotRegular(Vec<i64>),

    #[error("pattern row {row} has {got} entries, expected {expected}")]
    BadPatternShape {
        row: usize,
        got: usize,
        expected: usize,
    },

    #[error("interlacing violated at row {row}, position {pos}")]
    InterlacingViolated { row: usize, pos: usize },

    #[error("pattern count {count} for lambda {lambda:?} exceeds cap {cap}")]
    PatternCapExceeded {
        lambda: Vec<i64>,
        count: String,
        cap: u64,
    },

    #[error("no value assigned to variable {0}")]
    MissingAssignment(String),

    #[error("variable {0} is zero but occurs with a negative exponent")]
    ZeroAtNegativeExponent(String),

    #[error("exponent {0} does not fit in a machine integer")]
    ExponentOverflow(i64),

    #[error("denominator is the zero polynomial")]
    ZeroDenominator,

    #[error("denominator vanishes at the evaluation point")]
    DenominatorVanishes,

    #[error("reduced denominator still vanishes at s = 1; decomposition is inconsistent")]
    PoleAtOne,

    #[error("pattern {pattern:?} is not a vertex (entry at row {row}, position {pos} matches no upper neighbour)")]
    NotAVertex {
        pattern: Vec<Vec<i64>>,
        row: usize,
        pos: usize,
    },

    #[error("pattern is not simplicial; row {0} drops more than one value")]
    NotSimplicial(usize),

    #[error("entry {value} is not a coordinate of lambda {lambda:?}")]
    ValueNotInLambda { value: i64, lambda: Vec<i64> },

    #[error("weight {mu:?} is not in the orbit of {lambda:?}")]
    NotInOrbit { mu: Vec<i64>, lambda: Vec<i64> },

    #[error("node set is not an ordinary subgraph: {0}")]
    NotOrdinary(String),

    #[error("subgraph node {0:?} lies outside the triangle for n = {1}")]
    NodeOutOfRange(Node, usize),

    #[error("evaluation point rejected: {0}")]
    DegeneratePoint(String),

    #[error("failed to sample a generic point after {0} attempts")]
    SamplingExhausted(u32),

    #[error("weights {0:?} and {1:?} have different lengths")]
    LengthMismatch(usize, usize),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
