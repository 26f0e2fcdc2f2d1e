use crate::error::{Error, Result};
use std::time::{Duration, Instant};

/// Caps for the exponential-time routines. Exceeding one is an error, never
/// a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` accepted by the enumerators and exact solvers.
    pub enum_cap: usize,
    /// Largest `n` accepted by the full chain computation.
    pub chain_cap: usize,
    /// Largest bag accepted by the path decomposition DP.
    pub max_bag: usize,
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            enum_cap: 24,
            chain_cap: 16,
            max_bag: 9,
            time_limit: None,
            node_limit: None,
        }
    }
}

impl Limits {
    pub fn check_enum(&self, n: usize) -> Result<()> {
        cap("enumeration", n, self.enum_cap)
    }

    pub fn check_chain(&self, n: usize) -> Result<()> {
        cap("chain values", n, self.chain_cap)
    }

    pub fn meter(&self) -> Meter {
        Meter {
            deadline: self.time_limit.map(|d| Instant::now() + d),
            node_limit: self.node_limit,
            nodes: 0,
        }
    }
}

pub(crate) fn cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        Err(Error::CapExceeded { what, size, cap })
    } else {
        Ok(())
    }
}

/// Counts search nodes and enforces the node/time budget of a run.
#[derive(Debug, Clone)]
pub struct Meter {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: u64,
}

impl Meter {
    pub fn unlimited() -> Self {
        Meter {
            deadline: None,
            node_limit: None,
            nodes: 0,
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if let Some(limit) = self.node_limit {
            if self.nodes > limit {
                return Err(Error::ResourceLimit(format!("node limit {limit} reached")));
            }
        }
        if self.nodes & 0x3ff == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    return Err(Error::ResourceLimit("time limit reached".into()));
                }
            }
        }
        Ok(())
    }
}
