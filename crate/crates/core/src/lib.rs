//! The paracomplete logic mb*: formulas, a Hilbert-style proof checker, an
//! exact decision procedure for its two-valued non-deterministic semantics,
//! exact-rational paracomplete probability, and finite paracomplete
//! probability spaces.

pub mod error;
pub mod formula;
pub mod probability;
pub mod random;
pub mod proof;
pub mod rational;
pub mod semantics;
pub mod spaces;

pub use error::{Error, Result};
pub use formula::{parse, Formula, FormulaSet};
