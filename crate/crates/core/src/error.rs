use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid s-sequence: {0}")]
    InvalidSequence(String),

    #[error("invalid inversion sequence: {0}")]
    InvalidInversionSequence(String),

    #[error("inconsistent lattice point counts: {0}")]
    InconsistentCounts(String),

    #[error("enumeration budget exceeded: estimated cost {cost} > limit {limit}")]
    BudgetExceeded { cost: u128, limit: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported sequence: {0}")]
    Unsupported(String),

    #[error("origin is not interior: half-space {index} has right-hand side {b}")]
    OriginNotInterior { index: usize, b: i64 },

    /// A theorem verdict disagreed with the brute-force oracle, or a proof
    /// obligation failed. Always a headline event.
    #[error("mathematical inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Short machine-readable tag used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Dimension { .. } => "dimension",
            Error::Overflow(_) => "overflow",
            Error::InvalidSequence(_) => "invalid-sequence",
            Error::InvalidInversionSequence(_) => "invalid-inversion-sequence",
            Error::InconsistentCounts(_) => "inconsistent-counts",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::Precondition(_) => "precondition",
            Error::Unsupported(_) => "unsupported",
            Error::OriginNotInterior { .. } => "origin-not-interior",
            Error::Inconsistency(_) => "inconsistency",
            Error::Parse(_) => "parse",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
