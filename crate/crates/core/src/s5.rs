//! S5 validity for flat, subjective, positive formulas.
//!
//! Such a formula is a Boolean combination of atoms `B α` with objective
//! `α`, and in a universal structure only the truth values of those atoms
//! matter. A formula is invalid iff some truth assignment to its strict `B`
//! atoms falsifies it and is realized by a nonempty world set: with `C` the
//! conjunction of the arguments assigned true, `C` must be satisfiable and
//! `C ∧ ¬α` must be satisfiable for every `α` assigned false. `mods(C)` is
//! then a counter world set.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::ContractError;
use crate::formula::{alphabet_of, Formula};
use crate::partition::substitute;
use crate::propsat::{Assignment, Sat};

/// A formula accepted by [`s5_valid`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S5Query(Formula);

impl S5Query {
    pub fn new(formula: Formula) -> Result<S5Query, ContractError> {
        if !formula.is_positive() {
            return Err(ContractError::NotPositive(formula.to_string()));
        }
        if !formula.is_flat() {
            return Err(ContractError::NotFlat(formula.to_string()));
        }
        Ok(S5Query(formula))
    }

    pub fn formula(&self) -> &Formula {
        &self.0
    }
}

/// A nonempty world set falsifying the query, described by `mods(description)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct S5Counter {
    pub description: Formula,
    /// One world satisfying the description, then one per argument assigned
    /// false that falsifies it. All are over the query's atoms.
    pub worlds: Vec<Assignment>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum S5Outcome {
    Valid,
    Invalid(S5Counter),
}

impl S5Outcome {
    pub fn is_valid(&self) -> bool {
        matches!(self, S5Outcome::Valid)
    }
}

pub fn s5_valid(sat: &Sat, query: &S5Query) -> S5Outcome {
    let negated = Formula::not(query.0.clone());
    let mut atoms: Vec<&Formula> = Vec::new();
    collect_strict_atoms(&negated, &mut atoms);
    let bodies: Vec<&Formula> = atoms.iter().map(|a| a.modal_body().expect("modal atom")).collect();
    let alphabet: Vec<String> = alphabet_of([&query.0]);

    assert!(atoms.len() < 64, "too many modal atoms");
    'assignments: for v in 0..1u64 << atoms.len() {
        let truth = |i: usize| v >> i & 1 == 1;
        let skeleton = substitute(&negated, &|a| atoms.iter().position(|x| *x == a).map(truth));
        if skeleton.fold_constants() != Formula::True {
            continue;
        }
        let core = Formula::conjunction(
            bodies.iter().enumerate().filter(|(i, _)| truth(*i)).map(|(_, b)| (*b).clone()),
        );
        let Some(first) = sat.solve(&core) else {
            continue;
        };
        let mut worlds = Vec::from([first.extend_to(&alphabet)]);
        for (_, body) in bodies.iter().enumerate().filter(|(i, _)| !truth(*i)) {
            match sat.solve(&Formula::and(core.clone(), Formula::not((*body).clone()))) {
                Some(w) => worlds.push(w.extend_to(&alphabet)),
                None => continue 'assignments,
            }
        }
        return S5Outcome::Invalid(S5Counter { description: core, worlds });
    }
    S5Outcome::Valid
}

fn collect_strict_atoms<'a>(f: &'a Formula, out: &mut Vec<&'a Formula>) {
    match f {
        Formula::Believe(_) | Formula::Naf(_) => {
            if !out.contains(&f) {
                out.push(f);
            }
        }
        Formula::True | Formula::False | Formula::Atom(_) => {}
        Formula::Not(x) => collect_strict_atoms(x, out),
        Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
            collect_strict_atoms(l, out);
            collect_strict_atoms(r, out);
        }
    }
}
