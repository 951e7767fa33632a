//! Two-tape asynchronous finite automata, executable semigroup models, and
//! word-problem machinery, including a refuter that turns any candidate
//! recognizer for the free monogenic inverse word problem into a verified
//! counterexample.
//!
//! The pieces:
//!
//! * [`afsa`]: automata over pairs of words: acceptance, run extraction,
//!   loop detection, pumping, bounded enumeration, a text format and DOT
//!   export.
//! * [`algebra`]: the semigroup models: finite multiplication tables, the
//!   bicyclic monoid, partial injections (links, cycles, disjoint unions,
//!   inverse closures), symbolic shifts, and the triple model of the free
//!   monogenic inverse semigroup with an independent walk-statistics oracle.
//! * [`wordproblem`]: projections, the two-tape word problem, the
//!   free-monoid automaton, the Cayley-graph automaton for finite
//!   semigroups, and bounded automaton-vs-oracle comparison.
//! * [`refuter`]: the pumping argument, mechanized: a verified witness that
//!   a given automaton fails on the free monogenic inverse word problem.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything is safe to share across threads.

pub mod afsa;
pub mod algebra;
pub mod error;
pub mod refuter;
pub mod wordproblem;

pub use afsa::{Afsa, Configuration, LoopDecomposition, Run, Transition, WordPair};
pub use algebra::{
    BicyclicElement, FiniteSemigroup, FreeInverseTriple, MonogenicType, PartialInjection,
    ShiftInjection,
};
pub use error::{Error, Result};
pub use refuter::{fi_valid_pair, refute_fi_recognizer, verify_witness, RefutationWitness};
pub use wordproblem::{
    cayley_afsa, check_afsa_against_oracle, free_monoid_afsa, kernel_equal_up_to,
    parse_model_file, Element, GeneratedSemigroup, SemigroupModel, WpReport,
};
