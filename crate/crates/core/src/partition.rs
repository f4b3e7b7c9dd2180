//! Guesses over modal atoms.
//!
//! A [`ModalAtomTable`] lists the modal atoms of a formula; a [`Partition`]
//! assigns each of them to `P` (assumed to hold) or `N` (assumed to fail).
//! From a partition we get the objective reduct of the formula and the
//! objective knowledge `ob(P, N)`; conversely, two objective formulas
//! describing world sets induce a partition, which [`ModalAtomTable::prt`]
//! builds with one propositional implication check per atom.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::ContractError;
use crate::formula::Formula;
use crate::propsat::Sat;

/// The modal atoms of a formula, innermost first.
///
/// Atoms are ordered by nondecreasing modal depth; ties keep the order of
/// first occurrence in a left-to-right pre-order walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModalAtomTable {
    source: Formula,
    atoms: Vec<Formula>,
    depths: Vec<usize>,
}

impl ModalAtomTable {
    pub fn new(source: &Formula) -> ModalAtomTable {
        let mut seen: Vec<&Formula> = Vec::new();
        source.walk(&mut |node| {
            if node.is_modal_atom() && !seen.contains(&node) {
                seen.push(node);
            }
        });
        let mut entries: Vec<(usize, Formula)> = seen.into_iter().map(|f| (f.depth(), f.clone())).collect();
        entries.sort_by_key(|(d, _)| *d);
        let (depths, atoms) = entries.into_iter().unzip();
        ModalAtomTable { source: source.clone(), atoms, depths }
    }

    pub fn source(&self) -> &Formula {
        &self.source
    }

    pub fn atoms(&self) -> &[Formula] {
        &self.atoms
    }

    pub fn depth(&self, index: usize) -> usize {
        self.depths[index]
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn position(&self, atom: &Formula) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    /// Every partition, as a binary counter with atom 0 least significant.
    ///
    /// # Panics
    ///
    /// Panics if the table has 64 or more atoms.
    pub fn partitions(&self) -> impl Iterator<Item = Partition> + '_ {
        assert!(self.len() < 64, "too many modal atoms to enumerate");
        (0..1u64 << self.len()).map(move |i| Partition::from_index(self.len(), i))
    }

    /// `f` with every strict occurrence of an atom of the table replaced by
    /// the constant for its side of `partition`.
    pub fn substitute(&self, f: &Formula, partition: &Partition) -> Formula {
        substitute(f, &|atom| self.position(atom).map(|i| partition.in_p(i)))
    }

    /// The reduct of the source formula under `partition`.
    pub fn reduct(&self, partition: &Partition) -> Formula {
        self.substitute(&self.source, partition)
    }

    /// Conjunction, in table order, of the reduced arguments of the `B`
    /// atoms in `P`. `true` when there are none.
    pub fn ob(&self, partition: &Partition) -> Formula {
        Formula::conjunction(self.atoms.iter().enumerate().filter_map(|(i, atom)| match atom {
            Formula::Believe(body) if partition.in_p(i) => Some(self.substitute(body, partition)),
            _ => None,
        }))
    }

    /// The partition induced by the world-set pair `(mods(believed),
    /// mods(failed))`: `B ξ` holds iff `believed -> ξ'` is valid and
    /// `not ξ` holds iff `failed -> ξ'` is not, where `ξ'` is `ξ` reduced
    /// by the atoms already decided.
    pub fn prt(&self, sat: &Sat, believed: &Formula, failed: &Formula) -> Partition {
        let mut decided: Vec<bool> = Vec::with_capacity(self.len());
        for atom in &self.atoms {
            let body = atom.modal_body().expect("table holds modal atoms");
            let reduced = substitute(body, &|a| self.position(a).and_then(|i| decided.get(i).copied()));
            debug_assert!(reduced.is_objective());
            let holds = match atom {
                Formula::Believe(_) => sat.implies(believed, &reduced),
                _ => !sat.implies(failed, &reduced),
            };
            decided.push(holds);
        }
        Partition { in_p: decided }
    }
}

/// A split of a table's atoms into `P` and `N`, one bit per atom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    in_p: Vec<bool>,
}

impl Partition {
    pub fn new(in_p: Vec<bool>) -> Partition {
        Partition { in_p }
    }

    /// Bit `i` of `index` decides atom `i`.
    pub fn from_index(len: usize, index: u64) -> Partition {
        Partition { in_p: (0..len).map(|i| index >> i & 1 == 1).collect() }
    }

    /// Everything in `N`.
    pub fn all_failed(len: usize) -> Partition {
        Partition { in_p: vec![false; len] }
    }

    pub fn index(&self) -> u64 {
        self.in_p.iter().rev().fold(0, |acc, &b| acc << 1 | b as u64)
    }

    pub fn in_p(&self, i: usize) -> bool {
        self.in_p[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.in_p
    }

    pub fn len(&self) -> usize {
        self.in_p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.in_p.is_empty()
    }
}

/// Replaces strict (not under any modality) occurrences of modal atoms for
/// which `guess` answers, leaving everything under a modality untouched.
pub fn substitute(f: &Formula, guess: &dyn Fn(&Formula) -> Option<bool>) -> Formula {
    if f.is_modal_atom() {
        return match guess(f) {
            Some(true) => Formula::True,
            Some(false) => Formula::False,
            None => f.clone(),
        };
    }
    f.map_children(|child| substitute(child, guess))
}

/// `φ(ψ)`: the positive formula `φ` with each strict `B ξ` replaced by its
/// truth value in `mods(ψ)`.
pub fn query_eval(sat: &Sat, query: &Formula, knowledge: &Formula) -> Result<Formula, ContractError> {
    if !query.is_positive() {
        return Err(ContractError::NotPositive(query.to_string()));
    }
    let table = ModalAtomTable::new(query);
    let partition = table.prt(sat, knowledge, knowledge);
    Ok(table.reduct(&partition))
}

/// Membership of a positive subjective formula in the stable set whose
/// objective part is the consequences of `knowledge`.
pub fn stable_set_member(sat: &Sat, formula: &Formula, knowledge: &Formula) -> Result<bool, ContractError> {
    if !formula.is_subjective() {
        return Err(ContractError::NotSubjective(formula.to_string()));
    }
    let reduced = query_eval(sat, formula, knowledge)?;
    Ok(sat.valid(&reduced))
}
