use std::collections::HashMap;
use std::fmt;

use crate::error::Result;
use crate::formula::{Formula, FormulaSet};
use crate::rational::Rational;
use crate::semantics::Decider;

use super::ProbAssignment;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A tautology not given probability 1.
    Tautologicity { formula: Formula, value: Rational },
    /// An unsatisfiable formula not given probability 0.
    Antitautologicity { formula: Formula, value: Rational },
    /// `premise` entails `conclusion` but has the larger value.
    Comparison {
        premise: Formula,
        conclusion: Formula,
        premise_value: Rational,
        conclusion_value: Rational,
    },
    /// `P(a | b) != P(a) + P(b) - P(a & b)`.
    Additivity {
        left: Formula,
        right: Formula,
        disjunction_value: Rational,
        expected: Rational,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Tautologicity { formula, value } => {
                write!(f, "tautologicity: `{formula}` is a tautology but has {value}")
            }
            Violation::Antitautologicity { formula, value } => {
                write!(f, "antitautologicity: `{formula}` is unsatisfiable but has {value}")
            }
            Violation::Comparison {
                premise,
                conclusion,
                premise_value,
                conclusion_value,
            } => write!(
                f,
                "comparison: `{premise}` entails `{conclusion}` but {premise_value} > {conclusion_value}"
            ),
            Violation::Additivity {
                left,
                right,
                disjunction_value,
                expected,
            } => write!(
                f,
                "additivity: `{}` has {disjunction_value}, expected {expected}",
                Formula::or(left.clone(), right.clone())
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub violations: Vec<Violation>,
}

impl AuditReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_clean() {
            return f.write_str("OK");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Checks finite tables against the probability axioms, caching the logical
/// facts so that many tables over the same formulas are cheap.
#[derive(Debug, Default)]
pub struct Auditor {
    decider: Decider,
    tautology: HashMap<Formula, bool>,
    unsatisfiable: HashMap<Formula, bool>,
    entailment: HashMap<(Formula, Formula), bool>,
}

impl Auditor {
    pub fn new(decider: Decider) -> Self {
        Auditor {
            decider,
            ..Default::default()
        }
    }

    fn is_tautology(&mut self, f: &Formula) -> Result<bool> {
        if let Some(&b) = self.tautology.get(f) {
            return Ok(b);
        }
        let b = self.decider.is_tautology(f)?.holds();
        self.tautology.insert(f.clone(), b);
        Ok(b)
    }

    fn is_unsatisfiable(&mut self, f: &Formula) -> Result<bool> {
        if let Some(&b) = self.unsatisfiable.get(f) {
            return Ok(b);
        }
        let b = self.decider.satisfiable(f)?.is_none();
        self.unsatisfiable.insert(f.clone(), b);
        Ok(b)
    }

    fn entails(&mut self, premise: &Formula, conclusion: &Formula) -> Result<bool> {
        let key = (premise.clone(), conclusion.clone());
        if let Some(&b) = self.entailment.get(&key) {
            return Ok(b);
        }
        let premises: FormulaSet = [premise.clone()].into_iter().collect();
        let b = self.decider.entails(&premises, conclusion)?.holds();
        self.entailment.insert(key, b);
        Ok(b)
    }

    pub fn audit(&mut self, t: &ProbAssignment) -> Result<AuditReport> {
        let zero = Rational::from_integer(0.into());
        let one = Rational::from_integer(1.into());
        let mut violations = Vec::new();
        for (f, v) in t.entries() {
            if *v != one && self.is_tautology(f)? {
                violations.push(Violation::Tautologicity {
                    formula: f.clone(),
                    value: v.clone(),
                });
            }
            if *v != zero && self.is_unsatisfiable(f)? {
                violations.push(Violation::Antitautologicity {
                    formula: f.clone(),
                    value: v.clone(),
                });
            }
        }
        for (psi, pv) in t.entries() {
            for (phi, fv) in t.entries() {
                if psi != phi && pv > fv && self.entails(psi, phi)? {
                    violations.push(Violation::Comparison {
                        premise: psi.clone(),
                        conclusion: phi.clone(),
                        premise_value: pv.clone(),
                        conclusion_value: fv.clone(),
                    });
                }
            }
        }
        for (f, v) in t.entries() {
            let Formula::Or(a, b) = f else { continue };
            let conj = Formula::and((**a).clone(), (**b).clone());
            let (Some(va), Some(vb), Some(vc)) = (t.get(a), t.get(b), t.get(&conj)) else {
                continue;
            };
            let expected = va + vb - vc;
            if *v != expected {
                violations.push(Violation::Additivity {
                    left: (**a).clone(),
                    right: (**b).clone(),
                    disjunction_value: v.clone(),
                    expected,
                });
            }
        }
        Ok(AuditReport { violations })
    }
}

/// Audits a table with a fresh [`Auditor`] at the default cap.
pub fn audit_axioms(t: &ProbAssignment) -> Result<AuditReport> {
    Auditor::default().audit(t)
}
