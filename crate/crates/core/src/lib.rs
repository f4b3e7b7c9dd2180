//! Propositional reasoning for the logic of minimal belief and negation as
//! failure (MBNF).
//!
//! The crate is `no_std` and only needs `alloc`. It contains:
//!
//! - [`formula`]: the bimodal language, its parser and printer, and the
//!   syntactic classes (objective, subjective, flat, positive, negative).
//! - [`propsat`]: a small complete SAT procedure used as the propositional
//!   oracle by everything else.
//! - [`partition`]: modal-atom tables, guesses over them, substitution,
//!   objective knowledge and the constructive induced partition.
//! - [`s5`]: validity of flat subjective positive formulas in S5.
//! - [`engine`]: the two partition-based entailment procedures, the
//!   dispatcher, and the MKNF and autoepistemic wrappers.
//! - [`oracle`]: brute-force model enumeration over tiny alphabets, used as
//!   ground truth.
//! - [`report`]: deterministic text rendering of verdicts and models.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod engine;
mod error;
pub mod formula;
pub mod oracle;
pub mod partition;
pub mod propsat;
pub mod report;
pub mod s5;

pub use engine::{
    ael_entails, entails, flat_not_entails, mbnf_not_entails, mknf_entails, tau, tau_theory, Config,
    EngineError, EngineKind, Mode, Stats, TheoryQuery, Verdict, Witness,
};
pub use error::ContractError;
pub use formula::{parse, parse_theory, Formula, FormulaClass, ParseError};
pub use oracle::{ModelFamily, OracleError, Universe, WorldSet};
pub use partition::{ModalAtomTable, Partition};
pub use propsat::{Assignment, Sat};
pub use s5::{s5_valid, S5Counter, S5Outcome, S5Query};
