use std::cell::Cell;

use thiserror::Error;

/// Default cap on branch nodes for a single top-level computation.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("search budget of {limit} nodes exhausted")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// Node counter shared by every search started under one top-level call.
///
/// Distinguishes "too hard for the configured budget" from a negative
/// answer. Not `Sync`: each thread owns its own budget.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: Cell<u64>,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: Cell::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    #[inline]
    pub fn tick(&self) -> Result<(), BudgetExceeded> {
        let used = self.used.get() + 1;
        self.used.set(used);
        if used > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used.get()
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_NODE_BUDGET)
    }
}
