use thiserror::Error;

/// Errors raised by object validation, enumeration budgets and checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value out of range: {0}")]
    Domain(String),

    #[error("vertex {vertex} never reaches the root 0")]
    Cycle { vertex: usize },

    #[error("tree is not increasing: vertex {vertex} has the larger ancestor {ancestor}")]
    NotIncreasing { vertex: usize, ancestor: usize },

    #[error("{0:?} is not a parking function")]
    NotParkingFunction(Vec<i64>),

    #[error("{0:?} is not a permutation of 1..n")]
    NotPermutation(Vec<usize>),

    #[error("invalid shard {index} of {count}")]
    InvalidShard { index: usize, count: usize },

    #[error("statistic {statistic} does not apply to {object}")]
    IncompatibleSpec {
        object: &'static str,
        statistic: &'static str,
    },

    #[error(
        "{what} needs {requested} objects, above the budget of {limit}; \
         pass --budget-override or raise TREEPARK_BUDGET"
    )]
    Budget {
        what: String,
        requested: u128,
        limit: u128,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
