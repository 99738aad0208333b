use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Cooperative limits for a heuristic run, checked between sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SubsolverBudget {
    pub max_time: Option<Duration>,
    pub max_sweeps: Option<usize>,
    pub seed: u64,
}

impl SubsolverBudget {
    pub const DEFAULT_SWEEPS: usize = 1000;

    pub fn sweeps(max_sweeps: usize, seed: u64) -> Self {
        Self { max_time: None, max_sweeps: Some(max_sweeps), seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_time.is_none() && self.max_sweeps.is_none() {
            return Err(Error::InvalidConfig("budget needs a time or sweep limit".into()));
        }
        Ok(())
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    /// Sweep cap; time-only budgets fall back to an effectively unbounded count.
    pub(crate) fn sweep_cap(&self) -> usize {
        self.max_sweeps.unwrap_or(usize::MAX)
    }

    pub(crate) fn clock(&self) -> Clock {
        Clock { start: Instant::now(), limit: self.max_time }
    }
}

impl Default for SubsolverBudget {
    fn default() -> Self {
        Self::sweeps(Self::DEFAULT_SWEEPS, 0)
    }
}

pub(crate) struct Clock {
    start: Instant,
    limit: Option<Duration>,
}

impl Clock {
    pub fn expired(&self) -> bool {
        self.limit.is_some_and(|l| self.start.elapsed() >= l)
    }
}
