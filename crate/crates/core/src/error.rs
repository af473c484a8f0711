use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("weight ({0},{1}) is not dominant")]
    NotDominant(i64, i64),

    #[error("case {case} is not admissible for lambda = ({l1},{l2})")]
    NotAdmissible { l1: i64, l2: i64, case: usize },

    #[error("a denominator vanishes: {0}")]
    VanishingDenominator(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("no solution: {0}")]
    NoSolution(String),

    #[error("numerical failure: {0}")]
    Numeric(String),

    #[error("operator is not Fuchsian at {0}")]
    NotFuchsian(String),

    #[error("indicial polynomial at {0} has non-integer roots")]
    NonIntegerExponents(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by bad user input rather than a mathematical failure.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::InvalidInput(_) | Error::NotDominant(..) | Error::Io(_) | Error::Json(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
