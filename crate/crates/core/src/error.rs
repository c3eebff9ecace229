use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A Bell argument vector or sequence prefix is shorter than required.
    #[error("argument vector too short: index {index} requested, {len} terms stored")]
    TooShort { index: usize, len: usize },

    /// `f0(j) > b^(j-1)`: more admissible blocks than exist.
    #[error("f0({j}) = {count} exceeds the {available} blocks of length {j}")]
    TooManyBlocks {
        j: usize,
        count: String,
        available: String,
    },

    /// A selector produced a block set whose size disagrees with `f0(j)`.
    #[error("selector yields {found} blocks of length {j}, but f0({j}) = {expected}")]
    SelectorMismatch {
        j: usize,
        expected: String,
        found: usize,
    },

    #[error("cannot decompose word: {0}")]
    Decomposition(String),

    /// Exhaustive work would exceed the configured budget.
    #[error("budget exceeded: {needed} candidates requested, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },

    /// Budget exhaustion inside the verification harness, with its location.
    #[error("budget exceeded at m={m}, n={n}: {source}")]
    BudgetAt {
        m: u32,
        n: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    /// True for budget errors, including ones tagged with a location.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::BudgetAt { .. })
    }
}
