//! Node budgets for exhaustive searches.

use thiserror::Error;

/// Default node limit shared by the detectors and the bounded solvers.
pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// The search visited more nodes than its budget allowed.
#[derive(Error, Debug, Clone, Copy, PartialEq, Eq)]
#[error("search budget of {0} nodes exhausted before the search completed")]
pub struct BudgetExceeded(pub u64);

/// Counts search nodes against a fixed limit.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    pub fn unlimited() -> Budget {
        Budget::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), BudgetExceeded> {
        self.used += 1;
        if self.used > self.limit {
            Err(BudgetExceeded(self.limit))
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Budget {
        Budget::new(DEFAULT_BUDGET)
    }
}
