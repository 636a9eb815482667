use crate::error::{Error, Result};

/// Environment variable overriding the default enumeration budget.
pub const BUDGET_ENV: &str = "HALLWALK_BUDGET";

pub const DEFAULT_BUDGET: u128 = 10_000_000;

/// Upper bound on the number of point-membership tests (or enumerated
/// objects) a single operation may perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    limit: u128,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            limit: DEFAULT_BUDGET,
        }
    }
}

impl Budget {
    pub fn new(limit: u128) -> Self {
        Budget { limit }
    }

    pub fn unlimited() -> Self {
        Budget { limit: u128::MAX }
    }

    /// Reads `HALLWALK_BUDGET`, falling back to the default when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var(BUDGET_ENV) {
            Ok(raw) => raw
                .trim()
                .replace('_', "")
                .parse::<u128>()
                .map(Budget::new)
                .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={raw:?} is not a nonnegative integer"))),
            Err(_) => Ok(Budget::default()),
        }
    }

    pub fn limit(&self) -> u128 {
        self.limit
    }

    pub fn check(&self, cost: u128) -> Result<()> {
        if cost > self.limit {
            Err(Error::BudgetExceeded {
                cost,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}
