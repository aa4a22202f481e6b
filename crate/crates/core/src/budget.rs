use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Default node-expansion limit for exact searches.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

/// Limits applied to an exact search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
    pub time: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            nodes: DEFAULT_NODE_BUDGET,
            time: None,
        }
    }
}

impl Budget {
    pub fn nodes(nodes: u64) -> Self {
        Budget { nodes, time: None }
    }

    pub fn unlimited() -> Self {
        Budget {
            nodes: u64::MAX,
            time: None,
        }
    }

    pub fn with_time(mut self, time: Duration) -> Self {
        self.time = Some(time);
        self
    }

    pub fn meter(&self) -> Meter {
        Meter {
            limit: self.nodes,
            deadline: self.time.map(|t| Instant::now() + t),
            nodes: 0,
        }
    }
}

/// Running node counter for one search.
#[derive(Debug)]
pub struct Meter {
    limit: u64,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Meter {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::BudgetExceeded { nodes: self.nodes });
        }
        if self.nodes & 0xfff == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(Error::BudgetExceeded { nodes: self.nodes });
                }
            }
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }
}
