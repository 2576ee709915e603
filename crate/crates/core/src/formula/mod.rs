//! Formulas over the signature `{&, |, ->, ~, #}`.
//!
//! `~` is the paracomplete negation and `#` the undeterminedness operator.
//! Formulas are plain immutable trees compared by syntactic identity; nothing
//! in this crate normalizes them.

mod parser;

use std::collections::{BTreeMap, HashSet};
use std::fmt;

pub use parser::{parse, ParseError};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    Neg(Box<Formula>),
    Undet(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Imp(Box<Formula>, Box<Formula>),
}

/// Variable-to-formula binding used by [`Formula::substitute`].
pub type Substitution = BTreeMap<String, Formula>;

impl Formula {
    pub fn var(name: impl Into<String>) -> Self {
        Formula::Var(name.into())
    }

    pub fn neg(f: Formula) -> Self {
        Formula::Neg(Box::new(f))
    }

    pub fn undet(f: Formula) -> Self {
        Formula::Undet(Box::new(f))
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn imp(l: Formula, r: Formula) -> Self {
        Formula::Imp(Box::new(l), Box::new(r))
    }

    /// `a | ~a | #a`, bracketed to the left as the grammar reads it.
    pub fn included_middle(a: &Formula) -> Self {
        Formula::or(
            Formula::or(a.clone(), Formula::neg(a.clone())),
            Formula::undet(a.clone()),
        )
    }

    /// Height of the tree; a variable has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) => 0,
            Formula::Neg(a) | Formula::Undet(a) => 1 + a.depth(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                1 + a.depth().max(b.depth())
            }
        }
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) => 1,
            Formula::Neg(a) | Formula::Undet(a) => 1 + a.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => 1 + a.size() + b.size(),
        }
    }

    /// Replaces every variable leaf bound in `binding`; unbound variables stay.
    pub fn substitute(&self, binding: &Substitution) -> Formula {
        match self {
            Formula::Var(name) => binding.get(name).cloned().unwrap_or_else(|| self.clone()),
            Formula::Neg(a) => Formula::neg(a.substitute(binding)),
            Formula::Undet(a) => Formula::undet(a.substitute(binding)),
            Formula::And(a, b) => Formula::and(a.substitute(binding), b.substitute(binding)),
            Formula::Or(a, b) => Formula::or(a.substitute(binding), b.substitute(binding)),
            Formula::Imp(a, b) => Formula::imp(a.substitute(binding), b.substitute(binding)),
        }
    }

    /// All subtrees including `self`, children before parents.
    pub fn subformulas(&self) -> FormulaSet {
        let mut out = FormulaSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    pub(crate) fn collect_subformulas(&self, out: &mut FormulaSet) {
        if out.contains(self) {
            return;
        }
        match self {
            Formula::Var(_) => {}
            Formula::Neg(a) | Formula::Undet(a) => a.collect_subformulas(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
        }
        out.insert(self.clone());
    }

    /// Variable names occurring in the formula, sorted.
    pub fn variables(&self) -> Vec<String> {
        let mut vars = Vec::new();
        self.collect_vars(&mut vars);
        vars.sort();
        vars.dedup();
        vars
    }

    fn collect_vars(&self, out: &mut Vec<String>) {
        match self {
            Formula::Var(name) => out.push(name.clone()),
            Formula::Neg(a) | Formula::Undet(a) => a.collect_vars(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// True when no `~` or `#` occurs (a positive classical formula).
    pub fn is_positive(&self) -> bool {
        match self {
            Formula::Var(_) => true,
            Formula::Neg(_) | Formula::Undet(_) => false,
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                a.is_positive() && b.is_positive()
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Imp(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Var(_) | Formula::Neg(_) | Formula::Undet(_) => 4,
        }
    }
}

fn write_operand(f: &mut fmt::Formatter<'_>, child: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({child})")
    } else {
        write!(f, "{child}")
    }
}

/// Renders with the fewest parentheses that still parse back to the same tree.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(name) => f.write_str(name),
            Formula::Neg(a) | Formula::Undet(a) => {
                f.write_str(if matches!(self, Formula::Neg(_)) { "~" } else { "#" })?;
                write_operand(f, a, a.precedence() < 4)
            }
            Formula::And(a, b) | Formula::Or(a, b) => {
                let prec = self.precedence();
                let op = if prec == 3 { " & " } else { " | " };
                write_operand(f, a, a.precedence() < prec)?;
                f.write_str(op)?;
                write_operand(f, b, b.precedence() <= prec)
            }
            Formula::Imp(a, b) => {
                write_operand(f, a, a.precedence() <= 1)?;
                f.write_str(" -> ")?;
                write_operand(f, b, false)
            }
        }
    }
}

impl std::str::FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}

/// Render a formula in the concrete syntax accepted by [`parse`].
pub fn render(f: &Formula) -> String {
    f.to_string()
}

/// Insertion-ordered set of formulas without duplicates.
#[derive(Clone, Debug, Default)]
pub struct FormulaSet {
    items: Vec<Formula>,
    index: HashSet<Formula>,
}

impl FormulaSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Returns false if the formula was already present.
    pub fn insert(&mut self, f: Formula) -> bool {
        if self.index.contains(&f) {
            return false;
        }
        self.index.insert(f.clone());
        self.items.push(f);
        true
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.index.contains(f)
    }

    pub fn remove(&mut self, f: &Formula) -> bool {
        if self.index.remove(f) {
            self.items.retain(|g| g != f);
            true
        } else {
            false
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Formula> {
        self.items.iter()
    }

    pub fn as_slice(&self) -> &[Formula] {
        &self.items
    }
}

impl PartialEq for FormulaSet {
    fn eq(&self, other: &Self) -> bool {
        self.items == other.items
    }
}

impl Eq for FormulaSet {}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        let mut set = FormulaSet::new();
        for f in iter {
            set.insert(f);
        }
        set
    }
}

impl Extend<Formula> for FormulaSet {
    fn extend<I: IntoIterator<Item = Formula>>(&mut self, iter: I) {
        for f in iter {
            self.insert(f);
        }
    }
}

impl IntoIterator for FormulaSet {
    type Item = Formula;
    type IntoIter = std::vec::IntoIter<Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.into_iter()
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = std::slice::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.items.iter()
    }
}
