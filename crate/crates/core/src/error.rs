use alloc::string::String;

/// Errors raised by the core algorithms.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An exhaustive step would exceed its configured size limit.
    #[error("{what} is {actual}, exceeding the limit of {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: u128,
        actual: u128,
    },

    #[error("invalid monotone map: {0}")]
    InvalidStrategy(String),

    /// Deals must form a chain strictly increasing in both coordinates.
    #[error("deal set is not a non-crossing chain: {0}")]
    InvalidDealSet(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("hypergraph edge {edge} is empty or outside the ground set")]
    InvalidEdge { edge: usize },

    #[error("label {0:?} already belongs to the ground set")]
    LabelCollision(String),

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    /// Row `row` and column `col` have no common outcome, so property (i) fails.
    #[error("cell ({row}, {col}) is empty")]
    EmptyCell { row: usize, col: usize },

    #[error("cell ({row}, {col}) holds several outcomes and no selection was given")]
    AmbiguousCell { row: usize, col: usize },

    /// The equilibrium search ran out of outcomes; the input is not tight.
    #[error("game correspondence is not tight: {0}")]
    NotTight(String),

    #[error("invalid planar map: {0}")]
    InvalidMap(String),

    /// Internal consistency check failed. Always a bug.
    #[error("validation failed: {0}")]
    ValidationFailure(String),

    #[error("utility realization infeasible: {0}")]
    RealizationInfeasible(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
