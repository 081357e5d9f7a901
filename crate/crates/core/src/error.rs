use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point {0} does not belong to the action")]
    PointNotInAction(String),

    #[error("element is not a member of the acting group")]
    ElementNotInGroup,

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("group enumeration exceeds the element cap of {cap}")]
    ElementCapExceeded { cap: usize },

    #[error("search budget of {budget} checks exhausted")]
    BudgetExceeded { budget: u64 },

    #[error("only {available} coloring orbits exist, {requested} requested")]
    InsufficientOrbits { requested: usize, available: usize },

    #[error("no r <= {cap} satisfies the count bound; the sequence may never reach it")]
    IterationCapExceeded { cap: u64 },

    #[error("{m}x{n} grid has no distinguishing {k}-coloring: {reason}")]
    Infeasible {
        m: usize,
        n: usize,
        k: usize,
        reason: String,
    },

    #[error("cannot extend to {requested} columns: allowed range is {min}..={max} ({available} fresh columns)")]
    ExtendOutOfRange {
        requested: usize,
        min: usize,
        max: String,
        available: String,
    },

    #[error("{count} column colorings exceed the enumeration cap of {cap}")]
    ColumnCapExceeded { count: String, cap: usize },

    #[error(
        "{m} rows exceed the fast verifier cap of {cap}; use the group-enumeration check instead"
    )]
    VerifyCapExceeded { m: usize, cap: usize },
}

impl Error {
    /// True for failures caused by a size cap or search budget rather than by
    /// malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::ElementCapExceeded { .. }
                | Error::BudgetExceeded { .. }
                | Error::IterationCapExceeded { .. }
                | Error::ColumnCapExceeded { .. }
                | Error::VerifyCapExceeded { .. }
        )
    }
}
