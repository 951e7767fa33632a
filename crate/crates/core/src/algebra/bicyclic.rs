//! The bicyclic monoid `Mon⟨b, c | bc = 1⟩`, in normal form `c^i b^j`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An element `c^i b^j` of the bicyclic monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BicyclicElement {
    c_pow: u64,
    b_pow: u64,
}

impl BicyclicElement {
    pub fn new(c_pow: u64, b_pow: u64) -> Self {
        Self { c_pow, b_pow }
    }

    pub fn identity() -> Self {
        Self::new(0, 0)
    }

    /// The generator `b` (the one that cancels on the left of `c`).
    pub fn b() -> Self {
        Self::new(0, 1)
    }

    /// The generator `c`.
    pub fn c() -> Self {
        Self::new(1, 0)
    }

    pub fn c_pow(&self) -> u64 {
        self.c_pow
    }

    pub fn b_pow(&self) -> u64 {
        self.b_pow
    }
}

impl Mul for BicyclicElement {
    type Output = BicyclicElement;

    // c^i b^j · c^k b^l: min(j, k) many `bc` factors cancel in the middle.
    fn mul(self, rhs: BicyclicElement) -> BicyclicElement {
        let cancel = self.b_pow.min(rhs.c_pow);
        BicyclicElement {
            c_pow: self.c_pow + rhs.c_pow - cancel,
            b_pow: self.b_pow + rhs.b_pow - cancel,
        }
    }
}

impl fmt::Display for BicyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c^{} b^{}", self.c_pow, self.b_pow)
    }
}

impl FromStr for BicyclicElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::InvalidArgument(format!("bicyclic element must look like c^i b^j: {s}"));
        let mut parts = s.split_whitespace();
        let c_part = parts.next().ok_or_else(err)?;
        let b_part = parts.next().ok_or_else(err)?;
        if parts.next().is_some() {
            return Err(err());
        }
        let c_pow = c_part.strip_prefix("c^").and_then(|t| t.parse().ok()).ok_or_else(err)?;
        let b_pow = b_part.strip_prefix("b^").and_then(|t| t.parse().ok()).ok_or_else(err)?;
        Ok(Self::new(c_pow, b_pow))
    }
}

fn check_word(word: &str) -> Result<()> {
    match word.chars().find(|&ch| ch != 'b' && ch != 'c') {
        Some(ch) => Err(Error::SymbolOutsideAlphabet(ch)),
        None => Ok(()),
    }
}

/// Evaluates a word over `{b, c}` by folding the closed-form multiplication.
/// The empty word is the identity.
pub fn eval(word: &str) -> Result<BicyclicElement> {
    check_word(word)?;
    Ok(word.chars().fold(BicyclicElement::identity(), |acc, ch| {
        acc * if ch == 'b' { BicyclicElement::b() } else { BicyclicElement::c() }
    }))
}

/// Evaluates a word over `{b, c}` by literally deleting `bc` factors until
/// none remains, then reading off the normal form `c^i b^j`. Deliberately
/// naive; serves as the oracle for [`eval`].
pub fn eval_rewrite(word: &str) -> Result<BicyclicElement> {
    check_word(word)?;
    let mut chars: Vec<char> = word.chars().collect();
    loop {
        let hit = (1..chars.len()).find(|&k| chars[k - 1] == 'b' && chars[k] == 'c');
        match hit {
            Some(k) => {
                chars.drain(k - 1..=k);
            }
            None => break,
        }
    }
    // No `bc` factor left, so every c precedes every b.
    let c_pow = chars.iter().take_while(|&&ch| ch == 'c').count() as u64;
    let b_pow = chars.len() as u64 - c_pow;
    debug_assert!(chars[c_pow as usize..].iter().all(|&ch| ch == 'b'));
    Ok(BicyclicElement::new(c_pow, b_pow))
}
