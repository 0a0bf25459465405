//! Search budgets.
//!
//! Every enumeration in this crate is exponential in the worst case.  A
//! [`Budget`] caps the number of candidate extension steps; exceeding the cap
//! is an error, never silent truncation.

use std::cell::Cell;

/// Default cap on candidate assignments in any single enumeration.
pub const DEFAULT_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("search bound exceeded: {spent} candidate steps (cap {cap})")]
pub struct BoundExceeded {
    pub cap: u64,
    pub spent: u64,
}

/// Step counter threaded through backtracking searches.
#[derive(Debug)]
pub struct Budget {
    cap: u64,
    spent: Cell<u64>,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { cap, spent: Cell::new(0) }
    }

    /// Begin a fresh enumeration scope: the cap applies to each enumeration
    /// separately, never silently truncating any single search.
    pub fn start_scope(&self) {
        self.spent.set(0);
    }

    /// Charge one candidate step.
    pub fn step(&self) -> Result<(), BoundExceeded> {
        let n = self.spent.get() + 1;
        self.spent.set(n);
        if n > self.cap {
            Err(BoundExceeded { cap: self.cap, spent: n })
        } else {
            Ok(())
        }
    }

    pub fn spent(&self) -> u64 {
        self.spent.get()
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BOUND)
    }
}

/// Global knobs for the verification suites and the CLI.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_objects: usize,
    pub max_morphisms: usize,
    pub word_length: usize,
    pub bound: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_objects: 4, max_morphisms: 16, word_length: 6, bound: DEFAULT_BOUND }
    }
}
