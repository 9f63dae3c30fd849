use thiserror::Error;

use crate::support::ExponentPair;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent pair {0} occurs more than once")]
    DuplicatePair(ExponentPair),
    #[error("the pair (0,0) is not allowed in a reduced model")]
    OriginPair,
    #[error("a model needs at least one entry")]
    EmptyModel,
    #[error("coefficient of {0} must be strictly positive")]
    NonPositiveCoefficient(ExponentPair),
    #[error("the coordinates do not sum to one identically")]
    IdentityFails,
    #[error("invalid support: {0}")]
    InvalidSupport(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("node budget of {budget} exceeded while enumerating (n, d) = ({n}, {d})")]
    BudgetExceeded { n: u32, d: u32, budget: u64 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
