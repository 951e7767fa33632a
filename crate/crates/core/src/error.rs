use crate::algebra::PartialInjection;
use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol '{0}' is not in the alphabet")]
    SymbolOutsideAlphabet(char),

    #[error("the empty word is not a valid semigroup word")]
    EmptyWord,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("ground size mismatch: {left} vs {right}")]
    GroundSizeMismatch { left: usize, right: usize },

    #[error("invalid tape window [{start}, {end}] for word of length {len}")]
    InvalidWindow {
        start: usize,
        end: usize,
        len: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The inverse closure grew past the requested cap. Carries everything
    /// collected so far, in canonical order.
    #[error("inverse closure exceeded cap {cap} ({} elements collected)", partial.len())]
    ClosureCapExceeded {
        cap: usize,
        partial: Vec<PartialInjection>,
    },

    #[error("alphabet mismatch: expected {expected:?}, found {found:?}")]
    AlphabetMismatch {
        expected: Vec<char>,
        found: Vec<char>,
    },

    #[error("operation requires a finite semigroup model")]
    NotFiniteModel,

    /// The pumping bound was overridden with an n too small for the
    /// pigeonhole argument and no state repeat was found.
    #[error("inconclusive: no loop found with n = {n} on an automaton with {states} states")]
    Inconclusive { n: usize, states: usize },

    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
