//! Executable semigroup models: finite multiplication tables, the bicyclic
//! monoid, partial injections, symbolic shifts, and the triple model of the
//! free monogenic inverse semigroup.

pub mod bicyclic;
pub mod finite;
pub mod free_inverse;
pub mod pinj;
pub mod shift;

pub use bicyclic::BicyclicElement;
pub use finite::FiniteSemigroup;
pub use free_inverse::FreeInverseTriple;
pub use pinj::{MonogenicType, PartialInjection};
pub use shift::ShiftInjection;
