//! Decision procedure for mb* validity and entailment.
//!
//! A valuation is two-valued and classical on `&`, `|`, `->`, but only
//! constrained on `~` and `#`:
//!
//! * (iv)  if v(a) = 1 then v(~a) = 0
//! * (v)   if v(a) = 0 = v(~a) then v(#a) = 1
//!
//! Every `~a` and `#a` node of a finite closure is therefore an independent
//! bit filtered by those two constraints. A [`World`] is one admissible
//! assignment of those bits. Any world over a closure extends to a world over
//! a larger closure (see [`World::extend_to`]), which is why enumerating the
//! finite closure decides validity over the whole language.

mod table;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaSet};

pub use table::TruthTable;

/// Default bound on `2^atoms` for any enumeration.
pub const DEFAULT_CAP: u64 = 1 << 20;

/// A source of non-truth-functional freedom in a valuation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DecisionAtom {
    Var(String),
    /// The bit for `~child`.
    Neg(Formula),
    /// The bit for `#child`.
    Undet(Formula),
}

impl DecisionAtom {
    /// The formula whose value this atom fixes.
    pub fn formula(&self) -> Formula {
        match self {
            DecisionAtom::Var(name) => Formula::var(name.clone()),
            DecisionAtom::Neg(child) => Formula::neg(child.clone()),
            DecisionAtom::Undet(child) => Formula::undet(child.clone()),
        }
    }
}

impl fmt::Display for DecisionAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.formula())
    }
}

#[derive(Clone, Copy, Debug)]
enum Node {
    Atom(usize),
    And(usize, usize),
    Or(usize, usize),
    Imp(usize, usize),
}

#[derive(Clone, Copy, Debug)]
enum Constraint {
    /// (iv): not (child = 1 and atom = 1)
    Neg { child: usize, atom: usize },
    /// (v): not (child = 0 and neg = 0 and atom = 0)
    Undet { child: usize, neg: usize, atom: usize },
}

impl Constraint {
    fn atom(&self) -> usize {
        match *self {
            Constraint::Neg { atom, .. } | Constraint::Undet { atom, .. } => atom,
        }
    }

    fn holds(&self, values: &[bool], bits: &[bool]) -> bool {
        match *self {
            Constraint::Neg { child, atom } => !(values[child] && bits[atom]),
            Constraint::Undet { child, neg, atom } => values[child] || values[neg] || bits[atom],
        }
    }
}

#[derive(Debug)]
struct ClosureInner {
    base: FormulaSet,
    nodes: FormulaSet,
    node_index: HashMap<Formula, usize>,
    plan: Vec<Node>,
    atoms: Vec<DecisionAtom>,
    atom_index: HashMap<DecisionAtom, usize>,
    /// For each atom, the constraint it is the last dependency of.
    constraints: Vec<Option<Constraint>>,
}

/// Subformula closure of a formula set, augmented with `~a` for every `#a`.
///
/// Cheap to clone; worlds hold a handle to the closure they live over.
#[derive(Clone, Debug)]
pub struct DecisionClosure(Arc<ClosureInner>);

impl PartialEq for DecisionClosure {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.nodes == other.0.nodes
    }
}

impl Eq for DecisionClosure {}

fn push_node(f: &Formula, nodes: &mut FormulaSet) {
    if nodes.contains(f) {
        return;
    }
    match f {
        Formula::Var(_) => {}
        Formula::Neg(a) => push_node(a, nodes),
        Formula::Undet(a) => {
            push_node(a, nodes);
            push_node(&Formula::neg((**a).clone()), nodes);
        }
        Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
            push_node(a, nodes);
            push_node(b, nodes);
        }
    }
    nodes.insert(f.clone());
}

impl DecisionClosure {
    pub fn new(base: &FormulaSet) -> Self {
        let mut nodes = FormulaSet::new();
        for f in base {
            push_node(f, &mut nodes);
        }

        let mut vars: Vec<String> = nodes
            .iter()
            .filter_map(|f| match f {
                Formula::Var(name) => Some(name.clone()),
                _ => None,
            })
            .collect();
        vars.sort();
        let mut atoms: Vec<DecisionAtom> = vars.into_iter().map(DecisionAtom::Var).collect();
        for f in &nodes {
            match f {
                Formula::Neg(a) => atoms.push(DecisionAtom::Neg((**a).clone())),
                Formula::Undet(a) => atoms.push(DecisionAtom::Undet((**a).clone())),
                _ => {}
            }
        }
        let atom_index: HashMap<DecisionAtom, usize> =
            atoms.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();

        let node_index: HashMap<Formula, usize> =
            nodes.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let mut plan = Vec::with_capacity(nodes.len());
        let mut constraints = vec![None; atoms.len()];
        for f in &nodes {
            let node = match f {
                Formula::Var(name) => Node::Atom(atom_index[&DecisionAtom::Var(name.clone())]),
                Formula::Neg(a) => {
                    let atom = atom_index[&DecisionAtom::Neg((**a).clone())];
                    constraints[atom] = Some(Constraint::Neg {
                        child: node_index[&**a],
                        atom,
                    });
                    Node::Atom(atom)
                }
                Formula::Undet(a) => {
                    let atom = atom_index[&DecisionAtom::Undet((**a).clone())];
                    constraints[atom] = Some(Constraint::Undet {
                        child: node_index[&**a],
                        neg: node_index[&Formula::neg((**a).clone())],
                        atom,
                    });
                    Node::Atom(atom)
                }
                Formula::And(a, b) => Node::And(node_index[&**a], node_index[&**b]),
                Formula::Or(a, b) => Node::Or(node_index[&**a], node_index[&**b]),
                Formula::Imp(a, b) => Node::Imp(node_index[&**a], node_index[&**b]),
            };
            plan.push(node);
        }

        DecisionClosure(Arc::new(ClosureInner {
            base: base.clone(),
            nodes,
            node_index,
            plan,
            atoms,
            atom_index,
            constraints,
        }))
    }

    pub fn base(&self) -> &FormulaSet {
        &self.0.base
    }

    pub fn nodes(&self) -> &FormulaSet {
        &self.0.nodes
    }

    pub fn atoms(&self) -> &[DecisionAtom] {
        &self.0.atoms
    }

    pub fn atom_position(&self, atom: &DecisionAtom) -> Option<usize> {
        self.0.atom_index.get(atom).copied()
    }

    pub fn contains_node(&self, f: &Formula) -> bool {
        self.0.node_index.contains_key(f)
    }

    /// Whether `f` can be evaluated in worlds over this closure: every
    /// variable, `~` and `#` subformula of `f` must be a node.
    pub fn can_evaluate(&self, f: &Formula) -> bool {
        self.missing_atom(f).is_none()
    }

    fn missing_atom(&self, f: &Formula) -> Option<Formula> {
        if self.contains_node(f) {
            return None;
        }
        match f {
            Formula::Var(_) | Formula::Neg(_) | Formula::Undet(_) => Some(f.clone()),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Imp(a, b) => {
                self.missing_atom(a).or_else(|| self.missing_atom(b))
            }
        }
    }

    /// Whether every node of `self` is a node of `other`.
    pub fn is_subclosure_of(&self, other: &DecisionClosure) -> bool {
        self.nodes().iter().all(|f| other.contains_node(f))
    }

    fn node_values(&self, bits: &[bool]) -> Vec<bool> {
        let mut values = Vec::with_capacity(self.0.plan.len());
        for node in &self.0.plan {
            let v = match *node {
                Node::Atom(a) => bits[a],
                Node::And(l, r) => values[l] && values[r],
                Node::Or(l, r) => values[l] || values[r],
                Node::Imp(l, r) => !values[l] || values[r],
            };
            values.push(v);
        }
        values
    }

    fn admits(&self, bits: &[bool], values: &[bool]) -> bool {
        self.0
            .constraints
            .iter()
            .flatten()
            .all(|c| c.holds(values, bits))
    }

    fn world_from_bits(&self, bits: Vec<bool>) -> Result<World> {
        let values = self.node_values(&bits);
        if let Some(c) = self
            .0
            .constraints
            .iter()
            .flatten()
            .find(|c| !c.holds(&values, &bits))
        {
            let atom = &self.0.atoms[c.atom()];
            let which = match c {
                Constraint::Neg { .. } => "if v(a) = 1 then v(~a) = 0",
                Constraint::Undet { .. } => "if v(a) = 0 = v(~a) then v(#a) = 1",
            };
            return Err(Error::InvalidWorld(format!(
                "assignment to `{atom}` violates `{which}`"
            )));
        }
        Ok(World {
            closure: self.clone(),
            bits,
            values,
        })
    }

    /// Builds a world from an explicit assignment of every atom.
    pub fn world(&self, assignment: &BTreeMap<DecisionAtom, bool>) -> Result<World> {
        for atom in assignment.keys() {
            if self.atom_position(atom).is_none() {
                return Err(Error::InvalidWorld(format!("`{atom}` is not an atom of the closure")));
            }
        }
        let bits = self
            .atoms()
            .iter()
            .map(|a| {
                assignment
                    .get(a)
                    .copied()
                    .ok_or_else(|| Error::InvalidWorld(format!("no value for atom `{a}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        self.world_from_bits(bits)
    }

    /// All admissible worlds, in lexicographic order of atom values with 1
    /// before 0 (the row order of the usual truth-table layout).
    pub fn enumerate_worlds(&self, cap: u64) -> Result<Vec<World>> {
        let n = self.atoms().len();
        if n >= 64 || (1u64 << n) > cap {
            return Err(Error::CapExceeded { atoms: n, cap });
        }
        let mut out = Vec::new();
        let mut bits = vec![false; n];
        self.search(0, &mut bits, &mut out);
        Ok(out)
    }

    fn search(&self, k: usize, bits: &mut Vec<bool>, out: &mut Vec<World>) {
        if k == bits.len() {
            let values = self.node_values(bits);
            out.push(World {
                closure: self.clone(),
                bits: bits.clone(),
                values,
            });
            return;
        }
        for bit in [true, false] {
            bits[k] = bit;
            if let Some(c) = self.0.constraints[k] {
                // All dependencies of the constraint on atom k precede k.
                let ok = match c {
                    Constraint::Neg { child, atom } => !(bit && self.partial_value(child, bits, atom)),
                    Constraint::Undet { child, neg, atom } => {
                        bit || self.partial_value(child, bits, atom)
                            || self.partial_value(neg, bits, atom)
                    }
                };
                if !ok {
                    continue;
                }
            }
            self.search(k + 1, bits, out);
        }
    }

    /// Value of a node whose atoms all come before `limit`.
    fn partial_value(&self, node: usize, bits: &[bool], limit: usize) -> bool {
        match self.0.plan[node] {
            Node::Atom(a) => {
                debug_assert!(a < limit);
                bits[a]
            }
            Node::And(l, r) => self.partial_value(l, bits, limit) && self.partial_value(r, bits, limit),
            Node::Or(l, r) => self.partial_value(l, bits, limit) || self.partial_value(r, bits, limit),
            Node::Imp(l, r) => !self.partial_value(l, bits, limit) || self.partial_value(r, bits, limit),
        }
    }
}

/// Closure of a formula set; see [`DecisionClosure::new`].
pub fn decision_closure(fs: &FormulaSet) -> DecisionClosure {
    DecisionClosure::new(fs)
}

/// One admissible assignment of the decision atoms of a closure.
#[derive(Clone, Debug)]
pub struct World {
    closure: DecisionClosure,
    bits: Vec<bool>,
    values: Vec<bool>,
}

impl PartialEq for World {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.closure == other.closure
    }
}

impl Eq for World {}

impl Hash for World {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl World {
    pub fn closure(&self) -> &DecisionClosure {
        &self.closure
    }

    /// Atom values in the closure's atom order.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn assignment(&self) -> BTreeMap<DecisionAtom, bool> {
        self.closure
            .atoms()
            .iter()
            .cloned()
            .zip(self.bits.iter().copied())
            .collect()
    }

    pub fn get(&self, atom: &DecisionAtom) -> Option<bool> {
        self.closure.atom_position(atom).map(|i| self.bits[i])
    }

    /// Classical on `&`, `|`, `->`; variables, `~` and `#` read their atom.
    pub fn eval(&self, f: &Formula) -> Result<bool> {
        if let Some(&i) = self.closure.0.node_index.get(f) {
            return Ok(self.values[i]);
        }
        match f {
            Formula::Var(_) | Formula::Neg(_) | Formula::Undet(_) => {
                Err(Error::UnknownAtom(f.to_string()))
            }
            // Both sides are evaluated so evaluability never depends on the world.
            Formula::And(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                Ok(x && y)
            }
            Formula::Or(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                Ok(x || y)
            }
            Formula::Imp(a, b) => {
                let (x, y) = (self.eval(a)?, self.eval(b)?);
                Ok(!x || y)
            }
        }
    }

    /// Extends this world to a larger closure: shared atoms keep their
    /// values, new variables and `~` atoms get 0, new `#` atoms get 1.
    ///
    /// Returns `None` if `target` does not contain this world's closure or
    /// the extension is not admissible (which would refute the finite-model
    /// argument this procedure rests on).
    pub fn extend_to(&self, target: &DecisionClosure) -> Option<World> {
        if !self.closure.is_subclosure_of(target) {
            return None;
        }
        let bits: Vec<bool> = target
            .atoms()
            .iter()
            .map(|a| match self.get(a) {
                Some(b) => b,
                None => matches!(a, DecisionAtom::Undet(_)),
            })
            .collect();
        let values = target.node_values(&bits);
        target.admits(&bits, &values).then(|| World {
            closure: target.clone(),
            bits,
            values,
        })
    }

    /// The same valuation restricted to a smaller closure.
    pub fn restrict_to(&self, target: &DecisionClosure) -> Option<World> {
        let bits = target
            .atoms()
            .iter()
            .map(|a| self.get(a))
            .collect::<Option<Vec<_>>>()?;
        target.world_from_bits(bits).ok()
    }
}

impl fmt::Display for World {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (atom, bit)) in self.closure.atoms().iter().zip(&self.bits).enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{atom}={}", u8::from(*bit))?;
        }
        Ok(())
    }
}

/// Outcome of a validity or entailment check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Countermodel(World),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn countermodel(&self) -> Option<&World> {
        match self {
            Verdict::Holds => None,
            Verdict::Countermodel(w) => Some(w),
        }
    }
}

/// Decision procedure with a configurable enumeration cap.
#[derive(Clone, Copy, Debug)]
pub struct Decider {
    pub cap: u64,
}

impl Default for Decider {
    fn default() -> Self {
        Decider { cap: DEFAULT_CAP }
    }
}

impl Decider {
    pub fn new(cap: u64) -> Self {
        Decider { cap }
    }

    pub fn worlds(&self, closure: &DecisionClosure) -> Result<Vec<World>> {
        closure.enumerate_worlds(self.cap)
    }

    pub fn is_tautology(&self, f: &Formula) -> Result<Verdict> {
        self.entails(&FormulaSet::new(), f)
    }

    pub fn entails(&self, premises: &FormulaSet, f: &Formula) -> Result<Verdict> {
        let mut base = premises.clone();
        base.insert(f.clone());
        let closure = DecisionClosure::new(&base);
        for w in self.worlds(&closure)? {
            let premises_hold = premises
                .iter()
                .map(|p| w.eval(p))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .all(|b| b);
            if premises_hold && !w.eval(f)? {
                return Ok(Verdict::Countermodel(w));
            }
        }
        Ok(Verdict::Holds)
    }

    /// A world over `f`'s own closure where `f` holds, if any.
    pub fn satisfiable(&self, f: &Formula) -> Result<Option<World>> {
        let closure = DecisionClosure::new(&[f.clone()].into_iter().collect());
        for w in self.worlds(&closure)? {
            if w.eval(f)? {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    pub fn truth_table(&self, fs: &[Formula]) -> Result<TruthTable> {
        TruthTable::build(fs, self.cap)
    }
}

pub fn is_tautology(f: &Formula) -> Result<Verdict> {
    Decider::default().is_tautology(f)
}

pub fn entails(premises: &FormulaSet, f: &Formula) -> Result<Verdict> {
    Decider::default().entails(premises, f)
}

pub fn truth_table(fs: &[Formula]) -> Result<TruthTable> {
    Decider::default().truth_table(fs)
}
