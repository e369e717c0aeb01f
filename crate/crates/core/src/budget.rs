//! Step budgets and cooperative cancellation for long searches.

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetError {
    #[error("step budget of {limit} exhausted")]
    Exhausted { limit: u64 },
    #[error("cancelled after {steps} steps")]
    Cancelled { steps: u64 },
    #[error("result of order {order} exceeds the table limit of {limit}")]
    TooLarge { order: usize, limit: usize },
}

/// A limit on the number of elementary steps a search may take, plus an
/// optional flag another thread can raise to stop it between steps.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    cancel: Option<Arc<AtomicBool>>,
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(Self::DEFAULT_STEPS)
    }
}

impl Budget {
    pub const DEFAULT_STEPS: u64 = 1_000_000;

    pub fn new(limit: u64) -> Self {
        Self { limit, cancel: None }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn with_cancel_flag(mut self, flag: Arc<AtomicBool>) -> Self {
        self.cancel = Some(flag);
        self
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn meter(&self) -> Meter<'_> {
        Meter { budget: self, used: 0 }
    }
}

/// Running count against a [`Budget`].
#[derive(Debug)]
pub struct Meter<'a> {
    budget: &'a Budget,
    used: u64,
}

impl Meter<'_> {
    pub fn tick(&mut self, steps: u64) -> Result<(), BudgetError> {
        self.used = self.used.saturating_add(steps);
        if let Some(flag) = &self.budget.cancel {
            if flag.load(Ordering::Relaxed) {
                return Err(BudgetError::Cancelled { steps: self.used });
            }
        }
        if self.used > self.budget.limit {
            return Err(BudgetError::Exhausted { limit: self.budget.limit });
        }
        Ok(())
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhausts_past_limit() {
        let b = Budget::new(3);
        let mut m = b.meter();
        assert!(m.tick(3).is_ok());
        assert_eq!(m.tick(1), Err(BudgetError::Exhausted { limit: 3 }));
    }

    #[test]
    fn cancel_flag_stops() {
        let flag = Arc::new(AtomicBool::new(false));
        let b = Budget::unlimited().with_cancel_flag(flag.clone());
        let mut m = b.meter();
        assert!(m.tick(1).is_ok());
        flag.store(true, Ordering::Relaxed);
        assert_eq!(m.tick(1), Err(BudgetError::Cancelled { steps: 2 }));
    }
}
