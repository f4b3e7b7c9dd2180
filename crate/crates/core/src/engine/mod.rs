//! Skeptical entailment.
//!
//! Both procedures look for a partition `(P, N)` of the theory's modal
//! atoms that describes an MBNF model `(I, mods(ob(P, N)))` refuting the
//! query. They share the first two checks and differ only in how they
//! confirm that no strictly larger world set also satisfies the theory:
//! [`mbnf_not_entails`] scans every other partition, while
//! [`flat_not_entails`] asks one S5 validity question, which is enough when
//! the theory has no nested modalities.
//!
//! [`entails`] is the front door: it normalizes the query, picks an engine
//! and can also defer to the brute-force oracle.

mod ael;
mod flat;
mod general;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::error::ContractError;
use crate::formula::{alphabet_of, Formula};
use crate::oracle::{OracleError, Universe, DEFAULT_CAP};
use crate::partition::{query_eval, ModalAtomTable, Partition};
use crate::propsat::{Assignment, Sat};

pub use ael::{ael_entails, tau, tau_theory};
pub use flat::flat_not_entails;
pub use general::mbnf_not_entails;

/// Largest modal-atom table either engine will enumerate.
pub const MAX_MODAL_ATOMS: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    Contract(ContractError),
    Oracle(OracleError),
    TooManyModalAtoms { count: usize },
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Contract(e) => e.fmt(f),
            EngineError::Oracle(e) => e.fmt(f),
            EngineError::TooManyModalAtoms { count } => {
                write!(f, "{count} modal atoms; at most {MAX_MODAL_ATOMS} can be enumerated")
            }
        }
    }
}

impl core::error::Error for EngineError {}

impl From<ContractError> for EngineError {
    fn from(e: ContractError) -> Self {
        EngineError::Contract(e)
    }
}

impl From<OracleError> for EngineError {
    fn from(e: OracleError) -> Self {
        EngineError::Oracle(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineKind {
    General,
    Flat,
    Oracle,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::General => "general",
            EngineKind::Flat => "flat",
            EngineKind::Oracle => "oracle",
        }
    }
}

impl fmt::Display for EngineKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Engine selection for [`entails`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Flat engine for flat theories, general engine otherwise.
    #[default]
    Auto,
    General,
    Flat,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub mode: Mode,
    /// Largest alphabet the oracle engine accepts.
    pub oracle_cap: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { mode: Mode::Auto, oracle_cap: DEFAULT_CAP }
    }
}

impl Config {
    pub fn with_mode(mode: Mode) -> Config {
        Config { mode, ..Config::default() }
    }
}

/// Oracle-call counters gathered during one entailment check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Every propositional query made.
    pub sat_calls: u64,
    /// Propositional queries made while checking minimality.
    pub minimality_sat_calls: u64,
    /// Partitions examined.
    pub partitions: u64,
    /// Partitions that passed (a) and (b) and so reached the minimality
    /// check.
    pub candidates: u64,
    /// Competitor partitions examined by the general engine's minimality
    /// scan.
    pub competitors: u64,
    /// S5 validity checks made by the flat engine.
    pub s5_checks: u64,
}

/// A model refuting the query: the partition, its objective knowledge and
/// an initial world. The world set is `mods(ob)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub table: ModalAtomTable,
    pub partition: Partition,
    pub ob: Formula,
    pub initial_world: Assignment,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub entailed: bool,
    /// Present iff `entailed` is false.
    pub witness: Option<Witness>,
    pub engine: EngineKind,
    pub notes: Vec<String>,
    pub stats: Stats,
}

impl Verdict {
    fn entailed(engine: EngineKind, stats: Stats) -> Verdict {
        Verdict { entailed: true, witness: None, engine, notes: Vec::new(), stats }
    }

    fn refuted(engine: EngineKind, witness: Witness, stats: Stats) -> Verdict {
        Verdict { entailed: false, witness: Some(witness), engine, notes: Vec::new(), stats }
    }
}

/// A theory, conjoined into one formula, and a positive query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoryQuery {
    pub sigma: Formula,
    pub query: Formula,
    /// Set when `not` in the original query was rewritten.
    pub query_rewritten: bool,
}

impl TheoryQuery {
    /// Conjoins `theory` (empty means `true`) and rewrites every `not ψ` in
    /// the query as `¬B ψ`; within a model both modalities range over the
    /// same world set.
    pub fn new(theory: &[Formula], query: Formula) -> TheoryQuery {
        TheoryQuery::from_sigma(Formula::conjunction(theory.iter().cloned()), query)
    }

    pub fn from_sigma(sigma: Formula, query: Formula) -> TheoryQuery {
        if query.is_positive() {
            TheoryQuery { sigma, query, query_rewritten: false }
        } else {
            TheoryQuery { sigma, query: query.naf_to_neg_believe(), query_rewritten: true }
        }
    }
}

pub fn entails(tq: &TheoryQuery, config: &Config) -> Result<Verdict, EngineError> {
    let sigma = &tq.sigma;
    let query = &tq.query;
    let mut verdict = match config.mode {
        Mode::Auto if sigma.is_flat() => flat_not_entails(sigma, query)?,
        Mode::Auto | Mode::General => mbnf_not_entails(sigma, query)?,
        Mode::Flat => flat_not_entails(sigma, query)?,
        Mode::Oracle => oracle_entails(sigma, query, config.oracle_cap)?,
    };
    if tq.query_rewritten {
        verdict.notes.push("query: `not` rewritten as `~B`".to_string());
    }
    Ok(verdict)
}

/// `Σ ⊨MKNF φ` as `{B ψ : ψ ∈ Σ} ⊨MBNF B φ`.
pub fn mknf_entails(theory: &[Formula], phi: &Formula, config: &Config) -> Result<Verdict, EngineError> {
    let sigma = Formula::conjunction(theory.iter().cloned().map(Formula::believe));
    entails(&TheoryQuery::from_sigma(sigma, Formula::believe(phi.clone())), config)
}

fn oracle_entails(sigma: &Formula, query: &Formula, cap: usize) -> Result<Verdict, EngineError> {
    let universe = Universe::for_formulas([sigma, query], cap)?;
    let stats = Stats::default();
    match universe.mbnf_counter_model(sigma, query)? {
        None => Ok(Verdict::entailed(EngineKind::Oracle, stats)),
        Some((initial_world, worlds)) => {
            let table = ModalAtomTable::new(sigma);
            let partition = universe.induced_partition(&table, &worlds, &worlds)?;
            let ob = table.ob(&partition);
            let witness = Witness { table, partition, ob, initial_world };
            Ok(Verdict::refuted(EngineKind::Oracle, witness, stats))
        }
    }
}

/// State shared by both engines: the table, the per-partition reducts and
/// objective knowledge, and the counting oracle.
struct Search<'a> {
    sigma: &'a Formula,
    query: &'a Formula,
    table: ModalAtomTable,
    reducts: Vec<Formula>,
    obs: Vec<Formula>,
    alphabet: Vec<String>,
    sat: Sat,
    stats: Stats,
}

impl<'a> Search<'a> {
    fn new(sigma: &'a Formula, query: &'a Formula) -> Result<Search<'a>, EngineError> {
        if !query.is_positive() {
            return Err(ContractError::NotPositive(query.to_string()).into());
        }
        let table = ModalAtomTable::new(sigma);
        if table.len() > MAX_MODAL_ATOMS {
            return Err(EngineError::TooManyModalAtoms { count: table.len() });
        }
        let (reducts, obs) = table.partitions().map(|p| (table.reduct(&p), table.ob(&p))).unzip();
        Ok(Search {
            sigma,
            query,
            table,
            reducts,
            obs,
            alphabet: alphabet_of([sigma, query]),
            sat: Sat::new(),
            stats: Stats::default(),
        })
    }

    fn partition_count(&self) -> u64 {
        1 << self.table.len()
    }

    /// `mods(ob)` is nonempty and induces exactly this partition.
    fn self_supporting(&self, index: u64, partition: &Partition) -> bool {
        let ob = &self.obs[index as usize];
        self.sat.satisfiable(ob) && self.table.prt(&self.sat, ob, ob) == *partition
    }

    /// An initial world satisfying the reduct and falsifying the query in
    /// `mods(ob)`.
    fn refuting_world(&self, index: u64) -> Option<Assignment> {
        let reduced_query =
            query_eval(&self.sat, self.query, &self.obs[index as usize]).expect("query checked positive");
        let target = Formula::and(self.reducts[index as usize].clone(), Formula::not(reduced_query));
        self.sat.solve(&target).map(|w| w.extend_to(&self.alphabet))
    }

    fn finish(mut self, engine: EngineKind, found: Option<(u64, Partition, Assignment)>) -> Verdict {
        self.stats.sat_calls = self.sat.calls();
        match found {
            None => Verdict::entailed(engine, self.stats),
            Some((index, partition, initial_world)) => {
                let ob = self.obs[index as usize].clone();
                let witness = Witness { table: self.table, partition, ob, initial_world };
                Verdict::refuted(engine, witness, self.stats)
            }
        }
    }
}
