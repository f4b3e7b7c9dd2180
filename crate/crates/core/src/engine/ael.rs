//! Autoepistemic logic through negation as failure: `B` in an AEL theory
//! reads as `¬not`, and each translated member is believed.

use alloc::string::ToString;

use crate::error::ContractError;
use crate::formula::Formula;

use super::{entails, Config, EngineError, TheoryQuery, Verdict};

/// Replaces every `B` by `¬not`.
pub fn tau(f: &Formula) -> Result<Formula, ContractError> {
    if !f.is_positive() {
        return Err(ContractError::NotPositive(f.to_string()));
    }
    Ok(translate(f))
}

fn translate(f: &Formula) -> Formula {
    match f {
        Formula::Believe(x) => Formula::not(Formula::naf(translate(x))),
        other => other.map_children(translate),
    }
}

/// `⋀ B τ(ψ)` over the theory.
pub fn tau_theory(theory: &[Formula]) -> Result<Formula, ContractError> {
    let members =
        theory.iter().map(|f| tau(f).map(Formula::believe)).collect::<Result<alloc::vec::Vec<_>, _>>()?;
    Ok(Formula::conjunction(members))
}

/// Membership of `phi` in every (consistent) stable expansion of `theory`,
/// decided as `τ(theory) ⊨MBNF B phi`.
pub fn ael_entails(theory: &[Formula], phi: &Formula, config: &Config) -> Result<Verdict, EngineError> {
    if !phi.is_positive() {
        return Err(ContractError::NotPositive(phi.to_string()).into());
    }
    let sigma = tau_theory(theory)?;
    entails(&TheoryQuery::from_sigma(sigma, Formula::believe(phi.clone())), config)
}
