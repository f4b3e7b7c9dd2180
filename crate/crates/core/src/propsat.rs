//! Propositional satisfiability over objective formulas.
//!
//! Formulas are constant-folded, turned into clauses by a definitional
//! transformation (one fresh variable per binary connective), and decided
//! by a plain DPLL search. Branching follows variable index order with
//! `false` tried first; original atoms are indexed in lexicographic order
//! and precede all fresh variables, so witnesses are reproducible.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::Cell;
use core::fmt;

use crate::formula::Formula;

/// A truth assignment over an ordered alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Assignment {
    alphabet: Vec<String>,
    bits: Vec<bool>,
}

impl Assignment {
    /// # Panics
    ///
    /// Panics if the lengths differ.
    pub fn new(alphabet: Vec<String>, bits: Vec<bool>) -> Assignment {
        assert_eq!(alphabet.len(), bits.len(), "one bit per atom");
        Assignment { alphabet, bits }
    }

    /// The all-false assignment.
    pub fn empty(alphabet: Vec<String>) -> Assignment {
        let bits = vec![false; alphabet.len()];
        Assignment { alphabet, bits }
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn value(&self, atom: &str) -> Option<bool> {
        self.alphabet.iter().position(|a| a == atom).map(|i| self.bits[i])
    }

    pub fn true_atoms(&self) -> impl Iterator<Item = &str> {
        self.alphabet.iter().zip(&self.bits).filter(|(_, &b)| b).map(|(a, _)| a.as_str())
    }

    /// Re-expresses the assignment over `alphabet`; atoms not previously
    /// present are false.
    pub fn extend_to(&self, alphabet: &[String]) -> Assignment {
        let bits = alphabet.iter().map(|a| self.value(a).unwrap_or(false)).collect();
        Assignment { alphabet: alphabet.to_vec(), bits }
    }

    /// Evaluates an objective formula; atoms outside the alphabet are false.
    pub fn satisfies(&self, f: &Formula) -> bool {
        f.eval_objective(&|a| self.value(a).unwrap_or(false))
    }
}

/// Printed as the set of true atoms, e.g. `{a, c}`.
impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.true_atoms().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(a)?;
        }
        f.write_str("}")
    }
}

/// A propositional oracle that counts the queries it answers.
#[derive(Debug, Default)]
pub struct Sat {
    calls: Cell<u64>,
}

impl Sat {
    pub fn new() -> Sat {
        Sat::default()
    }

    /// Number of satisfiability queries answered so far.
    pub fn calls(&self) -> u64 {
        self.calls.get()
    }

    /// A satisfying assignment over the atoms of `f`, if there is one.
    ///
    /// # Panics
    ///
    /// Panics if `f` contains a modality.
    pub fn solve(&self, f: &Formula) -> Option<Assignment> {
        assert!(f.is_objective(), "propositional oracle called on a modal formula: {f}");
        self.calls.set(self.calls.get() + 1);
        let alphabet: Vec<String> = f.atoms().into_iter().collect();
        let folded = f.fold_constants();
        let bits = match folded {
            Formula::True => vec![false; alphabet.len()],
            Formula::False => return None,
            _ => {
                let mut cnf = Cnf::new(&alphabet);
                let root = cnf.encode(&folded);
                cnf.clauses.push(vec![root]);
                let model = dpll(&cnf.clauses, cnf.num_vars)?;
                model[..alphabet.len()].to_vec()
            }
        };
        Some(Assignment { alphabet, bits })
    }

    pub fn satisfiable(&self, f: &Formula) -> bool {
        self.solve(f).is_some()
    }

    pub fn valid(&self, f: &Formula) -> bool {
        !self.satisfiable(&Formula::not(f.clone()))
    }

    /// Whether `f -> g` is valid.
    pub fn implies(&self, f: &Formula, g: &Formula) -> bool {
        self.valid(&Formula::implies(f.clone(), g.clone()))
    }
}

pub fn satisfiable(f: &Formula) -> Option<Assignment> {
    Sat::new().solve(f)
}

pub fn valid(f: &Formula) -> bool {
    Sat::new().valid(f)
}

pub fn implies(f: &Formula, g: &Formula) -> bool {
    Sat::new().implies(f, g)
}

/// Literal: variable index shifted left once, low bit set for negation.
type Lit = u32;

fn lit(var: usize, negated: bool) -> Lit {
    ((var as u32) << 1) | negated as u32
}

fn negate(l: Lit) -> Lit {
    l ^ 1
}

struct Cnf<'a> {
    alphabet: &'a [String],
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
}

impl<'a> Cnf<'a> {
    fn new(alphabet: &'a [String]) -> Self {
        Cnf { alphabet, num_vars: alphabet.len(), clauses: Vec::new() }
    }

    fn fresh(&mut self) -> usize {
        self.num_vars += 1;
        self.num_vars - 1
    }

    /// Literal equivalent to `f`. `f` must be constant-free.
    fn encode(&mut self, f: &Formula) -> Lit {
        match f {
            Formula::Atom(name) => {
                let var = self.alphabet.binary_search(name).expect("atom in alphabet");
                lit(var, false)
            }
            Formula::Not(x) => negate(self.encode(x)),
            Formula::And(l, r) => {
                let (a, b) = (self.encode(l), self.encode(r));
                let x = lit(self.fresh(), false);
                self.clauses.push(vec![negate(x), a]);
                self.clauses.push(vec![negate(x), b]);
                self.clauses.push(vec![x, negate(a), negate(b)]);
                x
            }
            Formula::Or(l, r) => {
                let (a, b) = (self.encode(l), self.encode(r));
                self.or_gate(a, b)
            }
            Formula::Implies(l, r) => {
                let (a, b) = (self.encode(l), self.encode(r));
                self.or_gate(negate(a), b)
            }
            Formula::True | Formula::False => unreachable!("constants are folded first"),
            Formula::Believe(_) | Formula::Naf(_) => unreachable!("objective input"),
        }
    }

    fn or_gate(&mut self, a: Lit, b: Lit) -> Lit {
        let x = lit(self.fresh(), false);
        self.clauses.push(vec![negate(x), a, b]);
        self.clauses.push(vec![x, negate(a)]);
        self.clauses.push(vec![x, negate(b)]);
        x
    }
}

fn lit_value(assign: &[Option<bool>], l: Lit) -> Option<bool> {
    assign[(l >> 1) as usize].map(|v| v != (l & 1 == 1))
}

/// Unit propagation to fixpoint. Returns false on conflict.
fn propagate(clauses: &[Vec<Lit>], assign: &mut [Option<bool>], trail: &mut Vec<usize>) -> bool {
    loop {
        let mut changed = false;
        for clause in clauses {
            let mut unassigned = None;
            let mut open = 0;
            let mut satisfied = false;
            for &l in clause {
                match lit_value(assign, l) {
                    Some(true) => {
                        satisfied = true;
                        break;
                    }
                    Some(false) => {}
                    None => {
                        open += 1;
                        unassigned = Some(l);
                    }
                }
            }
            if satisfied {
                continue;
            }
            match (open, unassigned) {
                (0, _) => return false,
                (1, Some(l)) => {
                    let var = (l >> 1) as usize;
                    assign[var] = Some(l & 1 == 0);
                    trail.push(var);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            return true;
        }
    }
}

struct Decision {
    trail_len: usize,
    var: usize,
    flipped: bool,
}

fn dpll(clauses: &[Vec<Lit>], num_vars: usize) -> Option<Vec<bool>> {
    let mut assign = vec![None; num_vars];
    let mut trail = Vec::new();
    let mut decisions: Vec<Decision> = Vec::new();
    loop {
        if !propagate(clauses, &mut assign, &mut trail) {
            loop {
                let d = decisions.pop()?;
                for var in trail.drain(d.trail_len..) {
                    assign[var] = None;
                }
                if !d.flipped {
                    assign[d.var] = Some(true);
                    trail.push(d.var);
                    decisions.push(Decision { trail_len: d.trail_len, var: d.var, flipped: true });
                    break;
                }
            }
            continue;
        }
        let Some(var) = assign.iter().position(Option::is_none) else {
            return Some(assign.into_iter().map(|v| v.unwrap_or(false)).collect());
        };
        decisions.push(Decision { trail_len: trail.len(), var, flipped: false });
        assign[var] = Some(false);
        trail.push(var);
    }
}
