//! The bimodal language: propositional atoms and constants, the classical
//! connectives, the minimal-belief modality `B` and the negation-as-failure
//! modality `not`.

mod parser;

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use parser::{parse, parse_theory, ParseError, ParseErrorKind};

/// Words that can never be atom names.
pub const RESERVED: [&str; 4] = ["B", "not", "true", "false"];

/// A formula of the bimodal language.
///
/// Equality is structural: two formulas are equal iff their trees are
/// identical. Modal atoms are identified this way throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    True,
    False,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    /// Minimal belief, `B φ`.
    Believe(Box<Formula>),
    /// Negation as failure, `not φ`.
    Naf(Box<Formula>),
}

/// True iff `name` is a legal atom name.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_') && !RESERVED.contains(&name)
}

impl Formula {
    /// Builds an atom.
    ///
    /// # Panics
    ///
    /// Panics if `name` is not an identifier or is a reserved word.
    pub fn atom(name: &str) -> Formula {
        assert!(is_identifier(name), "invalid atom name {name:?}");
        Formula::Atom(String::from(name))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Formula {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Formula {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn implies(l: Formula, r: Formula) -> Formula {
        Formula::Implies(Box::new(l), Box::new(r))
    }

    pub fn believe(f: Formula) -> Formula {
        Formula::Believe(Box::new(f))
    }

    pub fn naf(f: Formula) -> Formula {
        Formula::Naf(Box::new(f))
    }

    /// Left-nested conjunction; `true` when empty.
    pub fn conjunction(items: impl IntoIterator<Item = Formula>) -> Formula {
        let mut iter = items.into_iter();
        match iter.next() {
            None => Formula::True,
            Some(first) => iter.fold(first, Formula::and),
        }
    }

    /// Left-nested disjunction; `false` when empty.
    pub fn disjunction(items: impl IntoIterator<Item = Formula>) -> Formula {
        let mut iter = items.into_iter();
        match iter.next() {
            None => Formula::False,
            Some(first) => iter.fold(first, Formula::or),
        }
    }

    /// True for formulas rooted at `B` or `not`.
    pub fn is_modal_atom(&self) -> bool {
        matches!(self, Formula::Believe(_) | Formula::Naf(_))
    }

    /// The argument of a modal atom.
    pub fn modal_body(&self) -> Option<&Formula> {
        match self {
            Formula::Believe(f) | Formula::Naf(f) => Some(f),
            _ => None,
        }
    }

    /// Propositional symbols occurring anywhere in the formula, sorted.
    pub fn atoms(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Atom(name) => {
                if !out.contains(name) {
                    out.insert(name.clone());
                }
            }
            Formula::Not(f) | Formula::Believe(f) | Formula::Naf(f) => f.collect_atoms(out),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Maximum number of nested modalities over any subformula.
    pub fn depth(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => 0,
            Formula::Not(f) => f.depth(),
            Formula::Believe(f) | Formula::Naf(f) => f.depth() + 1,
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => l.depth().max(r.depth()),
        }
    }

    pub fn is_objective(&self) -> bool {
        self.depth() == 0
    }

    /// No `not` occurs.
    pub fn is_positive(&self) -> bool {
        !self.any_node(&|f| matches!(f, Formula::Naf(_)))
    }

    /// No `B` occurs.
    pub fn is_negative(&self) -> bool {
        !self.any_node(&|f| matches!(f, Formula::Believe(_)))
    }

    /// Every occurrence of a propositional symbol lies within some modality.
    pub fn is_subjective(&self) -> bool {
        match self {
            Formula::True | Formula::False => true,
            Formula::Atom(_) => false,
            Formula::Believe(_) | Formula::Naf(_) => true,
            Formula::Not(f) => f.is_subjective(),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.is_subjective() && r.is_subjective()
            }
        }
    }

    /// Subjective with no modality inside another: every symbol lies
    /// within exactly one modality and every modal atom has an objective
    /// argument.
    pub fn is_flat(&self) -> bool {
        self.is_subjective() && self.depth() <= 1
    }

    pub fn classify(&self) -> FormulaClass {
        let depth = self.depth();
        FormulaClass {
            depth,
            is_flat: self.is_flat(),
            is_subjective: self.is_subjective(),
            is_positive: self.is_positive(),
            is_negative: self.is_negative(),
            is_objective: depth == 0,
        }
    }

    fn any_node(&self, pred: &dyn Fn(&Formula) -> bool) -> bool {
        if pred(self) {
            return true;
        }
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => false,
            Formula::Not(f) | Formula::Believe(f) | Formula::Naf(f) => f.any_node(pred),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.any_node(pred) || r.any_node(pred)
            }
        }
    }

    /// Applies `f` to every child and rebuilds the node.
    pub fn map_children(&self, mut f: impl FnMut(&Formula) -> Formula) -> Formula {
        match self {
            Formula::True => Formula::True,
            Formula::False => Formula::False,
            Formula::Atom(a) => Formula::Atom(a.clone()),
            Formula::Not(x) => Formula::not(f(x)),
            Formula::Believe(x) => Formula::believe(f(x)),
            Formula::Naf(x) => Formula::naf(f(x)),
            Formula::And(l, r) => Formula::and(f(l), f(r)),
            Formula::Or(l, r) => Formula::or(f(l), f(r)),
            Formula::Implies(l, r) => Formula::implies(f(l), f(r)),
        }
    }

    /// Replaces every `not ψ` by `¬B ψ`, at any depth.
    pub fn naf_to_neg_believe(&self) -> Formula {
        match self {
            Formula::Naf(x) => Formula::not(Formula::believe(x.naf_to_neg_believe())),
            other => other.map_children(Formula::naf_to_neg_believe),
        }
    }

    /// Folds `true`/`false` away. The result is either a constant or
    /// contains no constants.
    pub fn fold_constants(&self) -> Formula {
        use Formula::*;
        match self {
            True | False | Atom(_) => self.clone(),
            Not(x) => match x.fold_constants() {
                True => False,
                False => True,
                y => Formula::not(y),
            },
            And(l, r) => match (l.fold_constants(), r.fold_constants()) {
                (False, _) | (_, False) => False,
                (True, y) | (y, True) => y,
                (a, b) => Formula::and(a, b),
            },
            Or(l, r) => match (l.fold_constants(), r.fold_constants()) {
                (True, _) | (_, True) => True,
                (False, y) | (y, False) => y,
                (a, b) => Formula::or(a, b),
            },
            Implies(l, r) => match (l.fold_constants(), r.fold_constants()) {
                (False, _) | (_, True) => True,
                (True, y) => y,
                (a, False) => Formula::not(a),
                (a, b) => Formula::implies(a, b),
            },
            Believe(x) => Formula::believe(x.fold_constants()),
            Naf(x) => Formula::naf(x.fold_constants()),
        }
    }

    /// Evaluates an objective formula under `value`.
    ///
    /// # Panics
    ///
    /// Panics on a modal node.
    pub fn eval_objective(&self, value: &impl Fn(&str) -> bool) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Atom(a) => value(a),
            Formula::Not(x) => !x.eval_objective(value),
            Formula::And(l, r) => l.eval_objective(value) && r.eval_objective(value),
            Formula::Or(l, r) => l.eval_objective(value) || r.eval_objective(value),
            Formula::Implies(l, r) => !l.eval_objective(value) || r.eval_objective(value),
            Formula::Believe(_) | Formula::Naf(_) => {
                panic!("modal operator in objective evaluation")
            }
        }
    }

    /// Pre-order walk over every node.
    pub fn walk<'a>(&'a self, visit: &mut impl FnMut(&'a Formula)) {
        visit(self);
        match self {
            Formula::True | Formula::False | Formula::Atom(_) => {}
            Formula::Not(f) | Formula::Believe(f) | Formula::Naf(f) => f.walk(visit),
            Formula::And(l, r) | Formula::Or(l, r) | Formula::Implies(l, r) => {
                l.walk(visit);
                r.walk(visit);
            }
        }
    }
}

/// Syntactic class of a formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormulaClass {
    pub depth: usize,
    pub is_flat: bool,
    pub is_subjective: bool,
    pub is_positive: bool,
    pub is_negative: bool,
    pub is_objective: bool,
}

/// Canonical, fully parenthesized ASCII form. Binary connectives are always
/// wrapped in parentheses; modal arguments are wrapped exactly once.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => f.write_str("true"),
            Formula::False => f.write_str("false"),
            Formula::Atom(a) => f.write_str(a),
            Formula::Not(x) => write!(f, "~{x}"),
            Formula::And(l, r) => write!(f, "({l} & {r})"),
            Formula::Or(l, r) => write!(f, "({l} | {r})"),
            Formula::Implies(l, r) => write!(f, "({l} -> {r})"),
            Formula::Believe(x) => write_modal(f, "B", x),
            Formula::Naf(x) => write_modal(f, "not", x),
        }
    }
}

fn write_modal(f: &mut fmt::Formatter<'_>, op: &str, body: &Formula) -> fmt::Result {
    match body {
        Formula::And(..) | Formula::Or(..) | Formula::Implies(..) => write!(f, "{op}{body}"),
        _ => write!(f, "{op}({body})"),
    }
}

/// Atom names of several formulas, merged and sorted.
pub fn alphabet_of<'a>(formulas: impl IntoIterator<Item = &'a Formula>) -> Vec<String> {
    let mut set = BTreeSet::new();
    for f in formulas {
        f.collect_atoms(&mut set);
    }
    set.into_iter().collect()
}
