use thiserror::Error;

use crate::rat::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,
    #[error("index {index} out of range for {len} columns")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("{what}: size {size} exceeds cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },
    #[error("invalid mixed strategy: {0}")]
    InvalidStrategy(String),
    #[error("strategy is not optimal: {0}")]
    NotOptimal(String),
    #[error("M = {given} is below the required bound {required}")]
    BoundTooSmall { given: Box<Rat>, required: Box<Rat> },
    #[error("M must be positive, got {0}")]
    NonPositiveBound(Box<Rat>),
    #[error("the primal or the dual LP is infeasible")]
    InfeasibleSide,
    #[error("the system is feasible")]
    FeasibleInput,
    /// A constructed certificate failed its own re-verification.
    #[error("internal verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err($crate::error::Error::Verification(format!($($arg)+)));
        }
    };
}

pub(crate) use ensure;
