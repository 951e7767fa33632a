//! Symbolic shift maps on the positive integers.
//!
//! A [`ShiftInjection`] denotes the partial bijection `i ↦ i + delta` with
//! domain `{i : i ≥ start}`. The forward link is `(start 1, delta +1)`; the
//! backward link, its inverse, is `(start 2, delta -1)`. These give an exact
//! model of the inverse semigroup generated by a forward link, with no
//! truncation, which is how the bicyclic comparisons are run.

use crate::error::{Error, Result};

/// A shift `i ↦ i + delta` on `{i ≥ start}`, or the empty map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShiftInjection {
    Empty,
    Shift { start: i64, delta: i64 },
}

impl ShiftInjection {
    /// Builds a shift, requiring `start ≥ 1` and image inside the positives
    /// (`start + delta ≥ 1`).
    pub fn new(start: i64, delta: i64) -> Result<Self> {
        if start < 1 || start + delta < 1 {
            return Err(Error::InvalidArgument(format!(
                "shift (start {start}, delta {delta}) must stay within the positive integers"
            )));
        }
        Ok(ShiftInjection::Shift { start, delta })
    }

    /// The forward link `i ↦ i + 1` on all of the positives.
    pub fn forward_link() -> Self {
        ShiftInjection::Shift { start: 1, delta: 1 }
    }

    /// The backward link, inverse of the forward link.
    pub fn backward_link() -> Self {
        ShiftInjection::Shift { start: 2, delta: -1 }
    }

    /// Applies `self` first, then `other`.
    pub fn compose(self, other: Self) -> Self {
        match (self, other) {
            (ShiftInjection::Empty, _) | (_, ShiftInjection::Empty) => ShiftInjection::Empty,
            (
                ShiftInjection::Shift { start: s1, delta: d1 },
                ShiftInjection::Shift { start: s2, delta: d2 },
            ) => {
                // i must satisfy i ≥ s1 and i + d1 ≥ s2; the domain is never
                // empty and start + delta ≥ 1 is preserved automatically.
                ShiftInjection::Shift {
                    start: s1.max(s2 - d1),
                    delta: d1 + d2,
                }
            }
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            ShiftInjection::Empty => ShiftInjection::Empty,
            ShiftInjection::Shift { start, delta } => ShiftInjection::Shift {
                start: start + delta,
                delta: -delta,
            },
        }
    }
}
