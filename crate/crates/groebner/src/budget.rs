use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

/// Caps for a single Gröbner computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub time: Duration,
    pub memory_bytes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { time: Duration::from_secs(30 * 60), memory_bytes: 4 << 30 }
    }
}

impl Budget {
    pub fn new(time: Duration, memory_bytes: u64) -> Self {
        Budget { time, memory_bytes }
    }

    pub fn minutes(m: f64) -> Self {
        Budget { time: Duration::from_secs_f64(m * 60.0), ..Budget::default() }
    }

    pub fn with_memory_mib(mut self, mib: u64) -> Self {
        self.memory_bytes = mib << 20;
        self
    }

    pub(crate) fn start(&self) -> Meter {
        Meter { budget: *self, started: Instant::now() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resource {
    Time,
    Memory,
}

impl fmt::Display for Resource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Resource::Time => f.write_str("time"),
            Resource::Memory => f.write_str("memory"),
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("resource budget exceeded ({resource}) after {elapsed:?}: {basis_len} basis elements, {pairs_left} pairs pending")]
    ResourceBudgetExceeded {
        resource: Resource,
        elapsed: Duration,
        basis_len: usize,
        pairs_left: usize,
    },
    #[error("too many variables ({0}); the engine supports at most 64")]
    TooManyVariables(usize),
    #[error("exponent overflow (an exponent exceeded 127)")]
    ExponentOverflow,
    #[error("polynomials live over different variable lists")]
    VariableMismatch,
    #[error("empty generator list")]
    NoGenerators,
    #[error("the zero polynomial is not allowed here")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Meter {
    budget: Budget,
    started: Instant,
}

impl Meter {
    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }

    pub fn check(&self, approx_bytes: u64, basis_len: usize, pairs_left: usize) -> Result<(), GroebnerError> {
        let elapsed = self.elapsed();
        let resource = if elapsed > self.budget.time {
            Resource::Time
        } else if approx_bytes > self.budget.memory_bytes {
            Resource::Memory
        } else {
            return Ok(());
        };
        Err(GroebnerError::ResourceBudgetExceeded { resource, elapsed, basis_len, pairs_left })
    }
}
