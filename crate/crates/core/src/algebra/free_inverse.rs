//! The triple model of the free monogenic inverse semigroup.
//!
//! An element records the statistics of a walk on the integers starting at 0:
//! the leftmost point reached (≤ 0), the rightmost point reached (≥ 0) and the
//! endpoint. The generator is one step right, `(0, 1, 1)`; its inverse is one
//! step left, `(-1, 0, -1)`. Multiplication concatenates walks, translating
//! the second walk by the endpoint of the first.
//!
//! Words over the two-letter alphabet `{x, X}` (with `X` standing for the
//! inverse of `x`) can be evaluated two independent ways: by folding the
//! triple multiplication ([`eval`]) or by taking prefix-sum statistics of the
//! walk directly ([`eval_walk`]). The two must always agree, which the test
//! suite exploits.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Generator letter for words in the free monogenic inverse semigroup.
pub const GEN: char = 'x';
/// Letter standing for the inverse of the generator.
pub const GEN_INV: char = 'X';

/// An element `(-l, n, m)` of the free monogenic inverse semigroup:
/// leftmost reach `-l ≤ 0`, rightmost reach `n ≥ 0`, endpoint `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeInverseTriple {
    min: i64,
    max: i64,
    end: i64,
}

impl FreeInverseTriple {
    /// Builds a triple, checking the model invariants: `min ≤ 0 ≤ max`,
    /// `min ≤ end ≤ max`, and the walk is nonempty (`min < 0` or `max > 0`).
    pub fn new(min: i64, max: i64, end: i64) -> Result<Self> {
        if min > 0 || max < 0 {
            return Err(Error::InvalidArgument(format!(
                "triple ({min},{max},{end}): reach bounds must satisfy min ≤ 0 ≤ max"
            )));
        }
        if min == 0 && max == 0 {
            return Err(Error::InvalidArgument(format!(
                "triple ({min},{max},{end}): a walk must make at least one step"
            )));
        }
        if end < min || end > max {
            return Err(Error::InvalidArgument(format!(
                "triple ({min},{max},{end}): endpoint must lie between the reaches"
            )));
        }
        Ok(Self { min, max, end })
    }

    /// The generator: one step right.
    pub fn generator() -> Self {
        Self { min: 0, max: 1, end: 1 }
    }

    /// Leftmost reach (≤ 0).
    pub fn min_reach(&self) -> i64 {
        self.min
    }

    /// Rightmost reach (≥ 0).
    pub fn max_reach(&self) -> i64 {
        self.max
    }

    /// Endpoint of the walk.
    pub fn endpoint(&self) -> i64 {
        self.end
    }

    /// The unique semigroup inverse: the reversed walk, translated so it
    /// starts at 0.
    pub fn inverse(&self) -> Self {
        Self {
            min: self.min - self.end,
            max: self.max - self.end,
            end: -self.end,
        }
    }

    /// Idempotents are exactly the round trips (endpoint 0).
    pub fn is_idempotent(&self) -> bool {
        self.end == 0
    }
}

impl Mul for FreeInverseTriple {
    type Output = FreeInverseTriple;

    fn mul(self, rhs: FreeInverseTriple) -> FreeInverseTriple {
        FreeInverseTriple {
            min: self.min.min(self.end + rhs.min),
            max: self.max.max(self.end + rhs.max),
            end: self.end + rhs.end,
        }
    }
}

impl fmt::Display for FreeInverseTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.min, self.max, self.end)
    }
}

impl FromStr for FreeInverseTriple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidArgument(format!("triple must look like (-l,n,m): {s}")))?;
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::InvalidArgument(format!(
                "triple must have three coordinates: {s}"
            )));
        }
        let coord = |t: &str| {
            t.parse::<i64>()
                .map_err(|_| Error::InvalidArgument(format!("bad triple coordinate '{t}'")))
        };
        Self::new(coord(parts[0])?, coord(parts[1])?, coord(parts[2])?)
    }
}

fn letter(c: char) -> Result<FreeInverseTriple> {
    match c {
        GEN => Ok(FreeInverseTriple::generator()),
        GEN_INV => Ok(FreeInverseTriple::generator().inverse()),
        other => Err(Error::SymbolOutsideAlphabet(other)),
    }
}

/// Evaluates a word over `{x, X}` by folding the triple multiplication.
pub fn eval(word: &str) -> Result<FreeInverseTriple> {
    let mut chars = word.chars();
    let first = chars.next().ok_or(Error::EmptyWord)?;
    let mut acc = letter(first)?;
    for c in chars {
        acc = acc * letter(c)?;
    }
    Ok(acc)
}

/// Evaluates a word over `{x, X}` directly from its walk: the triple of
/// (minimum prefix sum, maximum prefix sum, final sum). Independent of
/// [`eval`] by construction; used as its oracle.
pub fn eval_walk(word: &str) -> Result<FreeInverseTriple> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let (mut pos, mut min, mut max) = (0i64, 0i64, 0i64);
    for c in word.chars() {
        match c {
            GEN => pos += 1,
            GEN_INV => pos -= 1,
            other => return Err(Error::SymbolOutsideAlphabet(other)),
        }
        min = min.min(pos);
        max = max.max(pos);
    }
    FreeInverseTriple::new(min, max, pos)
}
