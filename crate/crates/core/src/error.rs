use thiserror::Error;

use crate::set::PointSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set has {0} points; at most {max} are supported", max = crate::set::MAX_POINTS)]
    GroundTooLarge(usize),
    #[error("intersection closure exceeded {0} sets")]
    ClosureTooLarge(usize),
    #[error("duplicate ground label {0:?}")]
    DuplicateLabel(String),
    #[error("set {0} is not a subset of the ground set")]
    OutOfGround(PointSet),
    #[error("family does not contain the empty set")]
    MissingEmptySet,
    #[error("family does not contain the full ground set")]
    MissingFullSet,
    #[error("family is not closed under intersection: {0} and {1}")]
    NotIntersectionClosed(PointSet, PointSet),
    #[error("set {0} is not convex in this space")]
    NotConvex(PointSet),

    #[error("distribution has {got} weights for a ground set of {expected} points")]
    WeightCount { expected: usize, got: usize },
    #[error("weight {0} is negative")]
    NegativeWeight(usize),
    #[error("weights sum to {0}, not 1")]
    NotNormalized(String),
    #[error("cannot condition on a set of measure zero: {0}")]
    ZeroMassCondition(PointSet),
    #[error("malformed rational {0:?}; expected \"p/q\"")]
    BadRational(String),
    #[error("epsilon must lie in (0, 1], got {0}")]
    EpsilonOutOfRange(String),
    #[error("Helly number must be at least 1")]
    ZeroHelly,

    #[error("dense half-spaces have empty intersection (Helly premise violated)")]
    EmptyIntersection,
    #[error("empty set has measure >= epsilon; no net exists")]
    Infeasible,
    #[error("graph has {got} vertices; exact search is capped at {cap}")]
    TooLargeForExact { got: usize, cap: usize },
    #[error("family {0} is not intersecting")]
    NotIntersecting(usize),

    #[error("invalid generator parameters: {0}")]
    InvalidParameters(String),
    #[error("malformed space file: {0}")]
    Format(String),
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    /// Errors that indicate a broken internal invariant rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::EmptyIntersection | Error::Consistency(_))
    }
}
