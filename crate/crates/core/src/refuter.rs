//! Refutation of candidate recognizers for the word problem of the free
//! monogenic inverse semigroup.
//!
//! For any automaton over `{x, X}` this produces verified evidence that it
//! does not recognize the word problem: either the automaton rejects the
//! valid pair `(xⁿXⁿxⁿ, xⁿ)` outright, or it accepts it and an accepting
//! run must repeat a state somewhere along the middle `X` block once `n`
//! exceeds the state count; pumping that repeat yields an accepted pair
//! `(xⁿXⁿ⁺ⁱxⁿ, xⁿ⁺ʲ)` with `i ≥ 1`, whose sides evaluate to `(-i, n, n-i)`
//! and `(0, n+j, n+j)`, which are never equal since `-i < 0`.
//!
//! Witness verification recomputes everything from scratch and evaluates
//! words with the prefix-sum walk rather than the triple multiplication, so
//! the check does not share a code path with the machinery it certifies.

use std::fmt::Write;

use crate::afsa::{Afsa, WordPair};
use crate::algebra::free_inverse::{self, FreeInverseTriple, GEN, GEN_INV};
use crate::error::{Error, Result};

/// Verified evidence that an automaton fails to recognize the free
/// monogenic inverse word problem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefutationWitness {
    /// The automaton rejects a pair that belongs to the word problem.
    RejectedValidPair {
        pair: WordPair,
        n: usize,
        lhs: FreeInverseTriple,
        rhs: FreeInverseTriple,
    },
    /// The automaton accepts a pair whose sides denote different elements.
    AcceptedInvalidPair {
        pair: WordPair,
        n: usize,
        /// Extra tape-1 symbols the pumped loop inserted (`i ≥ 1`).
        i: usize,
        /// Extra tape-2 symbols the pumped loop inserted.
        j: usize,
        lhs: FreeInverseTriple,
        rhs: FreeInverseTriple,
    },
}

impl RefutationWitness {
    pub fn pair(&self) -> &WordPair {
        match self {
            RefutationWitness::RejectedValidPair { pair, .. } => pair,
            RefutationWitness::AcceptedInvalidPair { pair, .. } => pair,
        }
    }

    /// Key-value document form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            RefutationWitness::RejectedValidPair { pair, n, lhs, rhs } => {
                writeln!(out, "kind: rejected-valid-pair").unwrap();
                writeln!(out, "u: {}", pair.first).unwrap();
                writeln!(out, "v: {}", pair.second).unwrap();
                writeln!(out, "n: {n}").unwrap();
                writeln!(out, "lhs: {lhs}").unwrap();
                writeln!(out, "rhs: {rhs}").unwrap();
            }
            RefutationWitness::AcceptedInvalidPair {
                pair,
                n,
                i,
                j,
                lhs,
                rhs,
            } => {
                writeln!(out, "kind: accepted-invalid-pair").unwrap();
                writeln!(out, "u: {}", pair.first).unwrap();
                writeln!(out, "v: {}", pair.second).unwrap();
                writeln!(out, "n: {n}").unwrap();
                writeln!(out, "i: {i}").unwrap();
                writeln!(out, "j: {j}").unwrap();
                writeln!(out, "lhs: {lhs}").unwrap();
                writeln!(out, "rhs: {rhs}").unwrap();
            }
        }
        out
    }
}

/// The pair `(xⁿXⁿxⁿ, xⁿ)`, which belongs to the word problem for every
/// `n ≥ 1`: both sides evaluate to `(0, n, n)`.
pub fn fi_valid_pair(n: usize) -> WordPair {
    assert!(n >= 1, "the valid pair needs n >= 1");
    let x = GEN.to_string().repeat(n);
    let x_inv = GEN_INV.to_string().repeat(n);
    let pair = WordPair::new(format!("{x}{x_inv}{x}"), x);
    debug_assert_eq!(
        free_inverse::eval(&pair.first).unwrap(),
        free_inverse::eval(&pair.second).unwrap(),
    );
    pair
}

fn expected_alphabet(afsa: &Afsa) -> Result<()> {
    let found: Vec<char> = afsa.alphabet().iter().copied().collect();
    if found != [GEN_INV, GEN] {
        return Err(Error::AlphabetMismatch {
            expected: vec![GEN_INV, GEN],
            found,
        });
    }
    Ok(())
}

/// Refutes a candidate recognizer over `{x, X}` with the pumping bound
/// `n = state count + 1`, the smallest value the pigeonhole argument
/// supports.
pub fn refute_fi_recognizer(afsa: &Afsa) -> Result<RefutationWitness> {
    refute_fi_recognizer_with_n(afsa, afsa.state_count() + 1)
}

/// Refutes with an explicit pumping bound. With `n` above the state count a
/// witness always exists; smaller `n` may fail with
/// [`Error::Inconclusive`] when no state repeat shows up.
pub fn refute_fi_recognizer_with_n(afsa: &Afsa, n: usize) -> Result<RefutationWitness> {
    expected_alphabet(afsa)?;
    if n == 0 {
        return Err(Error::InvalidArgument("the pumping bound must be positive".into()));
    }
    let pair = fi_valid_pair(n);
    let value = free_inverse::eval(&pair.first)?;

    let Some(run) = afsa.find_accepting_run(&pair)? else {
        return Ok(RefutationWitness::RejectedValidPair {
            pair,
            n,
            lhs: value,
            rhs: value,
        });
    };

    // The X block occupies tape-1 positions n..=2n; its n+1 first-occurrence
    // configurations must repeat a state once n exceeds the state count.
    let Some(decomp) = run.find_loop(n..=2 * n)? else {
        if n <= afsa.state_count() {
            return Err(Error::Inconclusive {
                n,
                states: afsa.state_count(),
            });
        }
        return Err(Error::Internal(
            "pigeonhole failed: no state repeat on the middle block".into(),
        ));
    };

    let i = decomp.consumed_first();
    let j = decomp.consumed_second();
    let pumped = decomp.pump(2);
    if !afsa.accepts(&pumped)? {
        return Err(Error::Internal("pumped pair was not accepted".into()));
    }
    let lhs = free_inverse::eval(&pumped.first)?;
    let rhs = free_inverse::eval(&pumped.second)?;
    if lhs == rhs {
        return Err(Error::Internal(
            "pumped pair evaluates equal on both sides".into(),
        ));
    }
    Ok(RefutationWitness::AcceptedInvalidPair {
        pair: pumped,
        n,
        i,
        j,
        lhs,
        rhs,
    })
}

/// Re-checks a witness from scratch. Acceptance is re-run on the automaton
/// and both words are re-evaluated with the independent walk oracle; any
/// mismatch with the recorded values makes the witness invalid.
pub fn verify_witness(afsa: &Afsa, witness: &RefutationWitness) -> bool {
    let walk = |w: &str| free_inverse::eval_walk(w).ok();
    match witness {
        RefutationWitness::RejectedValidPair { pair, lhs, rhs, .. } => {
            let (Some(u), Some(v)) = (walk(&pair.first), walk(&pair.second)) else {
                return false;
            };
            u == v
                && u == *lhs
                && v == *rhs
                && afsa.accepts(pair) == Ok(false)
        }
        RefutationWitness::AcceptedInvalidPair {
            pair, i, lhs, rhs, ..
        } => {
            let (Some(u), Some(v)) = (walk(&pair.first), walk(&pair.second)) else {
                return false;
            };
            *i >= 1
                && u == *lhs
                && v == *rhs
                && u != v
                && afsa.accepts(pair) == Ok(true)
        }
    }
}
