//! Tri-state search results and node-expansion budgets.
//!
//! Every NP-hard query in the crate returns an [`Outcome`]: a positive answer
//! always carries a witness, a negative answer is only produced by exhaustive
//! search, and running out of budget is reported explicitly. `Undecided` must
//! never be coerced to `No` — downstream code pattern-matches all three arms.

use serde::Serialize;

/// Result of a budgeted exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome<T> {
    /// Found; carries the witness/certificate.
    Yes(T),
    /// Proven absent by exhausted search.
    No,
    /// Budget ran out before the search space was exhausted.
    Undecided,
}

impl<T> Outcome<T> {
    pub fn is_yes(&self) -> bool {
        matches!(self, Outcome::Yes(_))
    }

    pub fn is_no(&self) -> bool {
        matches!(self, Outcome::No)
    }

    pub fn is_undecided(&self) -> bool {
        matches!(self, Outcome::Undecided)
    }

    pub fn witness(&self) -> Option<&T> {
        match self {
            Outcome::Yes(w) => Some(w),
            _ => None,
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Yes(w) => Outcome::Yes(f(w)),
            Outcome::No => Outcome::No,
            Outcome::Undecided => Outcome::Undecided,
        }
    }
}

/// Default node-expansion cap shared by every search entry point.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// A decrementing node-expansion counter.
///
/// One unit is charged per search-tree node (one attempted assignment or
/// candidate extension). A budget is per-call: clone or recreate it rather
/// than sharing across independent queries.
#[derive(Debug, Clone)]
pub struct Budget {
    remaining: u64,
    initial: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { remaining: cap, initial: cap }
    }

    /// Charges one node expansion; `false` means the budget is spent.
    #[inline]
    pub fn spend(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        true
    }

    pub fn exhausted(&self) -> bool {
        self.remaining == 0
    }

    pub fn used(&self) -> u64 {
        self.initial - self.remaining
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}
