//! Coxeter-system combinatorics and scrambled-boundary decisions.
//!
//! The crate covers the word problem and descent sets for arbitrary Coxeter
//! systems, a fast normal form for right-angled systems together with the
//! descent-pushing constructions built on it, a combinatorial simulator of
//! the boundary action, and decision procedures that classify when the
//! boundary of a right-angled system is a scrambled set.
//!
//! ```
//! use coxeter_boundary::{catalog, decision::{decide, Outcome}};
//!
//! let sys = catalog::free(3);
//! assert_eq!(decide(&sys).outcome, Outcome::Scrambled);
//! let product = catalog::dinf_squared();
//! assert_eq!(decide(&product).outcome, Outcome::NotScrambled);
//! ```

pub mod ball;
pub mod boundary;
pub mod catalog;
pub mod decision;
mod decompose;
pub mod finite_type;
mod matrix;
pub mod racg;
mod system;
mod word;
mod word_problem;

#[cfg(test)]
mod testing;

pub use finite_type::FiniteType;
pub use matrix::{CoxeterMatrix, Order, ParseOrderError, RaggedMatrix};
pub use system::{CoxeterSystem, SystemError};
pub use word::{Generator, GeneratorSubset, Word, MAX_RANK};
