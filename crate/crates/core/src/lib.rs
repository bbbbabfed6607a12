//! Exact arithmetic for the twisted ("deformed") addition on the integer lattice.
//!
//! The crate covers five layers, all pure and allocation-only (`no_std` + `alloc`):
//!
//! * [`twisted`]: the twisted product on maps `{1..n} -> Z` for an arbitrary
//!   permutation action, its identity, and the invertibility criterion.
//! * [`units`]: the unit group for the canonical cyclic action, seen through the
//!   residue-distinct vectors and the transported group law.
//! * [`semidirect`]: `Z^n x| S_n`, the explicit isomorphism with the unit group,
//!   and the per-cycle factorisation for non-cyclic actions.
//! * [`words`] and [`closure`]: words over the generators, relation presets,
//!   derived identities, and breadth-first generation checks.
//! * [`geometry`]: the permutohedral prism tessellation in exact rational
//!   arithmetic.
//!
//! Points of `V` are 1-based throughout. An [`IntVector`] stores the value at
//! point `i` in slot `i - 1`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closure;
mod error;
pub mod geometry;
mod perm;
pub mod semidirect;
pub mod twisted;
pub mod units;
mod vector;
pub mod words;

pub use error::{Error, Result};
pub use perm::{CycleStructure, Permutation};
pub use semidirect::SemiElement;
pub use twisted::{ActionSpec, TwistedElement};
pub use vector::IntVector;
