//! Fragment-aware subsumption engine for ALC-style concepts over arbitrary
//! Boolean operator sets.
//!
//! Instead of fixing the usual ⊓/⊔/¬ vocabulary, concepts here are built from
//! arbitrary Boolean operators `∘_f` (given by truth tables) plus the two
//! quantifiers ∃R.C and ∀R.C. The engine
//!
//! 1. detects which operators and quantifiers an instance actually uses,
//! 2. identifies the clone (composition closure) generated by the operators,
//! 3. reports the complexity classification of that fragment, and
//! 4. decides subsumption with the cheapest algorithm that is correct for it,
//!    falling back to a general type-elimination decider.
//!
//! The crate also ships the instance transformations relating the fragments
//! to each other (dualization, constant elimination, base change, graph
//! encodings) and the brute-force ground-truth deciders used to cross-check
//! everything.
//!
//! Hot loops (assignment enumeration, bounded countermodel search, witness
//! checks during type elimination) run on rayon when the `parallel` feature
//! is enabled (the default) and on plain iterators otherwise.

pub mod boolfun;
pub mod classify;
pub mod error;
mod exec;
pub mod generate;
pub mod reductions;
pub mod selfcheck;
pub mod semantics;
pub mod solvers;
pub mod syntax;

pub use error::{Error, Result};
