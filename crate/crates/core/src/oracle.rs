//! Brute-force semantics over tiny alphabets.
//!
//! Interpretations over an alphabet of `n` atoms are numbered `0..2^n`
//! (bit `i` set iff atom `i` is true) and a set of interpretations is a
//! bitmask over those numbers. Formulas are evaluated by computing, for a
//! fixed pair `(Mb, Mn)`, the set of initial worlds at which they hold:
//! `B φ` holds everywhere iff `φ` holds at every world of `Mb`, and
//! `not φ` holds everywhere iff `φ` fails at some world of `Mn`.
//!
//! Models are found by scanning every nonempty world set, and minimality by
//! scanning every strict superset. Nothing is pruned.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::error::ContractError;
use crate::formula::{alphabet_of, Formula};
use crate::partition::{ModalAtomTable, Partition};
use crate::propsat::Assignment;

/// Alphabet size used when none is requested.
pub const DEFAULT_CAP: usize = 3;
/// Largest alphabet the oracle will enumerate.
pub const MAX_CAP: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    CapExceeded { atoms: usize, cap: usize },
    CapTooLarge { cap: usize },
    UnknownAtom(String),
    AlphabetMismatch,
    Contract(ContractError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CapExceeded { atoms, cap } => {
                write!(f, "alphabet has {atoms} atoms, oracle cap is {cap}")
            }
            OracleError::CapTooLarge { cap } => {
                write!(f, "oracle cap {cap} exceeds the maximum of {MAX_CAP}")
            }
            OracleError::UnknownAtom(a) => write!(f, "atom `{a}` is not in the alphabet"),
            OracleError::AlphabetMismatch => f.write_str("arguments use different alphabets"),
            OracleError::Contract(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<ContractError> for OracleError {
    fn from(e: ContractError) -> Self {
        OracleError::Contract(e)
    }
}

/// A set of interpretations over a fixed alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WorldSet {
    alphabet: Arc<[String]>,
    members: u64,
}

impl WorldSet {
    pub fn members(&self) -> u64 {
        self.members
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.members.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.members == 0
    }

    pub fn contains(&self, world: u32) -> bool {
        self.members >> world & 1 == 1
    }

    pub fn is_subset(&self, other: &WorldSet) -> bool {
        self.members & !other.members == 0
    }

    /// Member interpretations in increasing numeric order.
    pub fn worlds(&self) -> impl Iterator<Item = Assignment> + '_ {
        (0..64u32).filter(|w| self.contains(*w)).map(|w| world_assignment(&self.alphabet, w))
    }
}

/// Printed as a list of interpretations, each the set of its true atoms.
impl fmt::Display for WorldSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, w) in self.worlds().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

fn world_assignment(alphabet: &[String], world: u32) -> Assignment {
    let bits = (0..alphabet.len()).map(|i| world >> i & 1 == 1).collect();
    Assignment::new(alphabet.to_vec(), bits)
}

/// One family of MBNF models: a world set together with every initial world
/// that makes `(I, worlds)` a model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelFamily {
    pub worlds: WorldSet,
    pub initial_worlds: WorldSet,
}

/// All interpretations of an alphabet.
#[derive(Clone, Debug)]
pub struct Universe {
    alphabet: Arc<[String]>,
    atom_masks: Vec<u64>,
    full: u64,
}

impl Universe {
    pub fn new(alphabet: Vec<String>, cap: usize) -> Result<Universe, OracleError> {
        if cap > MAX_CAP {
            return Err(OracleError::CapTooLarge { cap });
        }
        if alphabet.len() > cap {
            return Err(OracleError::CapExceeded { atoms: alphabet.len(), cap });
        }
        let n = alphabet.len();
        let worlds = 1u32 << n;
        let atom_masks =
            (0..n).map(|i| (0..worlds).filter(|w| w >> i & 1 == 1).fold(0u64, |m, w| m | 1 << w)).collect();
        let full = if worlds == 64 { u64::MAX } else { (1u64 << worlds) - 1 };
        Ok(Universe { alphabet: alphabet.into(), atom_masks, full })
    }

    /// The universe over the atoms of `formulas`.
    pub fn for_formulas<'a>(
        formulas: impl IntoIterator<Item = &'a Formula>,
        cap: usize,
    ) -> Result<Universe, OracleError> {
        Universe::new(alphabet_of(formulas), cap)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn world_count(&self) -> u32 {
        1 << self.alphabet.len()
    }

    pub fn world_set(&self, members: u64) -> WorldSet {
        WorldSet { alphabet: self.alphabet.clone(), members: members & self.full }
    }

    pub fn all(&self) -> WorldSet {
        self.world_set(self.full)
    }

    pub fn world(&self, world: u32) -> Assignment {
        world_assignment(&self.alphabet, world)
    }

    /// Number of an interpretation over this alphabet.
    pub fn world_index(&self, interpretation: &Assignment) -> Result<u32, OracleError> {
        if interpretation.alphabet() != &*self.alphabet {
            return Err(OracleError::AlphabetMismatch);
        }
        Ok(interpretation.bits().iter().enumerate().fold(0, |acc, (i, &b)| acc | (b as u32) << i))
    }

    fn check_atoms(&self, f: &Formula) -> Result<(), OracleError> {
        match f.atoms().into_iter().find(|a| !self.alphabet.contains(a)) {
            Some(a) => Err(OracleError::UnknownAtom(a)),
            None => Ok(()),
        }
    }

    fn check_set(&self, set: &WorldSet) -> Result<(), OracleError> {
        if set.alphabet != self.alphabet {
            return Err(OracleError::AlphabetMismatch);
        }
        Ok(())
    }

    /// Initial worlds `I` with `(I, Mb, Mn) ⊨ f`. Atoms of `f` must belong
    /// to the alphabet.
    fn truth(&self, f: &Formula, mb: u64, mn: u64) -> u64 {
        match f {
            Formula::True => self.full,
            Formula::False => 0,
            Formula::Atom(a) => {
                let i = self.alphabet.iter().position(|x| x == a).expect("atom checked");
                self.atom_masks[i]
            }
            Formula::Not(x) => self.full & !self.truth(x, mb, mn),
            Formula::And(l, r) => self.truth(l, mb, mn) & self.truth(r, mb, mn),
            Formula::Or(l, r) => self.truth(l, mb, mn) | self.truth(r, mb, mn),
            Formula::Implies(l, r) => (self.full & !self.truth(l, mb, mn)) | self.truth(r, mb, mn),
            Formula::Believe(x) => {
                if mb & !self.truth(x, mb, mn) == 0 {
                    self.full
                } else {
                    0
                }
            }
            Formula::Naf(x) => {
                if mn & !self.truth(x, mb, mn) != 0 {
                    self.full
                } else {
                    0
                }
            }
        }
    }

    /// The set of initial worlds satisfying `f` in `(·, Mb, Mn)`.
    pub fn truth_set(&self, f: &Formula, mb: &WorldSet, mn: &WorldSet) -> Result<WorldSet, OracleError> {
        self.check_atoms(f)?;
        self.check_set(mb)?;
        self.check_set(mn)?;
        Ok(self.world_set(self.truth(f, mb.members, mn.members)))
    }

    pub fn satisfies(
        &self,
        interpretation: &Assignment,
        mb: &WorldSet,
        mn: &WorldSet,
        f: &Formula,
    ) -> Result<bool, OracleError> {
        let world = self.world_index(interpretation)?;
        Ok(self.truth_set(f, mb, mn)?.contains(world))
    }

    /// `mods(f)` for objective `f`.
    pub fn mods(&self, f: &Formula) -> Result<WorldSet, OracleError> {
        self.check_atoms(f)?;
        debug_assert!(f.is_objective());
        Ok(self.world_set(self.truth(f, self.full, self.full)))
    }

    /// Nonempty world sets by increasing size, then numeric value.
    fn nonempty_sets(&self) -> Vec<u64> {
        let mut sets: Vec<u64> = (1..=self.full).collect();
        sets.sort_by_key(|s| (s.count_ones(), *s));
        sets
    }

    /// Whether some `J` and strict superset `M' ⊃ M` satisfy `f` with
    /// `Mn = M`.
    fn has_larger(&self, f: &Formula, m: u64) -> bool {
        let rest = self.full & !m;
        let mut extra = rest;
        while extra != 0 {
            if self.truth(f, m | extra, m) != 0 {
                return true;
            }
            extra = (extra - 1) & rest;
        }
        false
    }

    /// Whether `(I, M)` is an MBNF model of `sigma`.
    pub fn is_mbnf_model(
        &self,
        sigma: &Formula,
        interpretation: &Assignment,
        worlds: &WorldSet,
    ) -> Result<bool, OracleError> {
        self.check_atoms(sigma)?;
        self.check_set(worlds)?;
        let world = self.world_index(interpretation)?;
        let m = worlds.members;
        Ok(m != 0 && self.truth(sigma, m, m) >> world & 1 == 1 && !self.has_larger(sigma, m))
    }

    /// Every MBNF model of `sigma`, grouped by world set.
    pub fn mbnf_models(&self, sigma: &Formula) -> Result<Vec<ModelFamily>, OracleError> {
        self.check_atoms(sigma)?;
        let mut out = Vec::new();
        for m in self.nonempty_sets() {
            let initial = self.truth(sigma, m, m);
            if initial != 0 && !self.has_larger(sigma, m) {
                out.push(ModelFamily { worlds: self.world_set(m), initial_worlds: self.world_set(initial) });
            }
        }
        Ok(out)
    }

    /// Truth of `phi` in every MBNF model of `sigma`.
    pub fn mbnf_entails(&self, sigma: &Formula, phi: &Formula) -> Result<bool, OracleError> {
        Ok(self.mbnf_counter_model(sigma, phi)?.is_none())
    }

    /// The first model `(I, M)` of `sigma` at which `phi` fails, with `I`
    /// the lowest-numbered such world.
    pub fn mbnf_counter_model(
        &self,
        sigma: &Formula,
        phi: &Formula,
    ) -> Result<Option<(Assignment, WorldSet)>, OracleError> {
        self.check_atoms(phi)?;
        for family in self.mbnf_models(sigma)? {
            let m = family.worlds.members;
            let bad = family.initial_worlds.members & !self.truth(phi, m, m);
            if bad != 0 {
                return Ok(Some((self.world(bad.trailing_zeros()), family.worlds)));
            }
        }
        Ok(None)
    }

    /// World sets `M` such that exactly the worlds of `M` satisfy the
    /// positive theory when `B` ranges over `M`.
    pub fn ael_models(&self, theory: &[Formula]) -> Result<Vec<WorldSet>, OracleError> {
        for f in theory {
            if !f.is_positive() {
                return Err(ContractError::NotPositive(f.to_string()).into());
            }
            self.check_atoms(f)?;
        }
        let sigma = Formula::conjunction(theory.iter().cloned());
        Ok(self
            .nonempty_sets()
            .into_iter()
            .filter(|&m| self.truth(&sigma, m, m) == m)
            .map(|m| self.world_set(m))
            .collect())
    }

    /// Membership of `phi` in every stable expansion of `theory`.
    pub fn ael_entails(&self, theory: &[Formula], phi: &Formula) -> Result<bool, OracleError> {
        self.check_atoms(phi)?;
        if !phi.is_positive() {
            return Err(ContractError::NotPositive(phi.to_string()).into());
        }
        Ok(self.ael_models(theory)?.iter().all(|m| m.members & !self.truth(phi, m.members, m.members) == 0))
    }

    /// The partition of `table` induced by `(Mb, Mn)`.
    pub fn induced_partition(
        &self,
        table: &ModalAtomTable,
        mb: &WorldSet,
        mn: &WorldSet,
    ) -> Result<Partition, OracleError> {
        self.check_atoms(table.source())?;
        self.check_set(mb)?;
        self.check_set(mn)?;
        Ok(Partition::new(table.atoms().iter().map(|a| self.truth(a, mb.members, mn.members) != 0).collect()))
    }
}
