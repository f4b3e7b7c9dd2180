use core::fmt;

use alloc::string::String;

/// An input outside the fragment an operation accepts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContractError {
    /// `not` occurs where only positive formulas are accepted.
    NotPositive(String),
    /// A propositional symbol occurs outside every modality.
    NotSubjective(String),
    /// Modalities are nested, or some symbol is outside every modality.
    NotFlat(String),
}

impl fmt::Display for ContractError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContractError::NotPositive(s) => write!(f, "formula is not positive (contains `not`): {s}"),
            ContractError::NotSubjective(s) => write!(f, "formula is not subjective: {s}"),
            ContractError::NotFlat(s) => write!(f, "formula is not flat: {s}"),
        }
    }
}

impl core::error::Error for ContractError {}
