//! Hilbert-style calculus: eleven axiom schemas and modus ponens.

mod deduction;
mod text;

use std::fmt;
use std::sync::OnceLock;

use crate::formula::{parse, Formula, FormulaSet, Substitution};

pub use deduction::deduction_transform;
pub use text::{parse_derivation, write_derivation};

/// Metavariable names used in schema patterns.
pub const ALPHA: &str = "alpha";
pub const BETA: &str = "beta";
pub const GAMMA: &str = "gamma";

#[derive(Clone, Debug)]
pub struct AxiomSchema {
    pub index: u8,
    pub name: &'static str,
    /// Accepted shapes; only included middle has two (both bracketings).
    pub patterns: Vec<Formula>,
}

impl AxiomSchema {
    /// The schema's canonical shape.
    pub fn pattern(&self) -> &Formula {
        &self.patterns[0]
    }

    pub fn instantiate(&self, binding: &Substitution) -> Formula {
        self.pattern().substitute(binding)
    }

    /// A metavariable binding if `f` is an instance of this schema.
    pub fn matches(&self, f: &Formula) -> Option<Substitution> {
        self.patterns.iter().find_map(|p| {
            let mut binding = Substitution::new();
            match_pattern(p, f, &mut binding).then_some(binding)
        })
    }
}

const SCHEMAS: [(&str, &[&str]); 11] = [
    ("K", &["alpha -> beta -> alpha"]),
    ("S", &["(alpha -> beta) -> (alpha -> beta -> gamma) -> alpha -> gamma"]),
    ("and-intro", &["alpha -> beta -> alpha & beta"]),
    ("and-elim-left", &["alpha & beta -> alpha"]),
    ("and-elim-right", &["alpha & beta -> beta"]),
    ("or-intro-left", &["alpha -> alpha | beta"]),
    ("or-intro-right", &["beta -> alpha | beta"]),
    ("or-elim", &["(alpha -> gamma) -> (beta -> gamma) -> alpha | beta -> gamma"]),
    ("implication-middle", &["alpha | (alpha -> beta)"]),
    ("explosion", &["alpha -> ~alpha -> beta"]),
    ("included-middle", &["alpha | ~alpha | #alpha", "alpha | (~alpha | #alpha)"]),
];

/// The eleven schemas, indexed 1..=11 at positions 0..=10.
pub fn axioms() -> &'static [AxiomSchema] {
    static AXIOMS: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    AXIOMS.get_or_init(|| {
        SCHEMAS
            .iter()
            .enumerate()
            .map(|(i, (name, pats))| AxiomSchema {
                index: i as u8 + 1,
                name,
                patterns: pats.iter().map(|p| parse(p).expect("schema pattern")).collect(),
            })
            .collect()
    })
}

pub fn axiom(index: u8) -> Option<&'static AxiomSchema> {
    axioms().get(usize::from(index).checked_sub(1)?)
}

/// First-order matching: repeated metavariables must bind identical formulas.
pub(crate) fn match_pattern(pattern: &Formula, f: &Formula, binding: &mut Substitution) -> bool {
    match (pattern, f) {
        (Formula::Var(meta), _) => match binding.get(meta) {
            Some(bound) => bound == f,
            None => {
                binding.insert(meta.clone(), f.clone());
                true
            }
        },
        (Formula::Neg(p), Formula::Neg(g)) | (Formula::Undet(p), Formula::Undet(g)) => {
            match_pattern(p, g, binding)
        }
        (Formula::And(p1, p2), Formula::And(g1, g2))
        | (Formula::Or(p1, p2), Formula::Or(g1, g2))
        | (Formula::Imp(p1, p2), Formula::Imp(g1, g2)) => {
            match_pattern(p1, g1, binding) && match_pattern(p2, g2, binding)
        }
        _ => false,
    }
}

/// The lowest-index schema `f` instantiates, with its binding.
pub fn match_axiom(f: &Formula) -> Option<(u8, Substitution)> {
    axioms()
        .iter()
        .find_map(|ax| ax.matches(f).map(|b| (ax.index, b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom(u8),
    Premise,
    /// `ModusPonens(i, j)`: line `j` must be `line i -> this line`.
    ModusPonens(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Line {
    pub index: usize,
    pub formula: Formula,
    pub justification: Justification,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Derivation {
    pub premises: FormulaSet,
    pub lines: Vec<Line>,
}

impl Derivation {
    pub fn new(premises: FormulaSet) -> Self {
        Derivation {
            premises,
            lines: Vec::new(),
        }
    }

    /// Appends a line numbered after the last one and returns its index.
    pub fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        let index = self.lines.last().map_or(1, |l| l.index + 1);
        self.lines.push(Line {
            index,
            formula,
            justification,
        });
        index
    }

    pub fn conclusion(&self) -> Option<&Formula> {
        self.lines.last().map(|l| &l.formula)
    }

    pub fn check(&self) -> Check {
        check_derivation(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    Empty,
    /// Line numbers must start at 1 and strictly increase.
    BadIndex,
    NoSuchAxiom(u8),
    NotAnAxiom(u8),
    NotAPremise,
    /// A modus ponens reference to a missing or non-earlier line.
    BadReference(usize),
    MpShapeMismatch { minor: usize, major: usize },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvalidReason::Empty => f.write_str("empty derivation"),
            InvalidReason::BadIndex => f.write_str("bad line number"),
            InvalidReason::NoSuchAxiom(k) => write!(f, "no axiom {k}"),
            InvalidReason::NotAnAxiom(k) => write!(f, "not-an-axiom: not an instance of axiom {k}"),
            InvalidReason::NotAPremise => f.write_str("not-a-premise"),
            InvalidReason::BadReference(i) => write!(f, "bad reference: no earlier line {i}"),
            InvalidReason::MpShapeMismatch { minor, major } => {
                write!(f, "mp shape mismatch: line {major} is not `line {minor} -> this line`")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Check {
    Valid,
    Invalid { line: usize, reason: InvalidReason },
}

impl Check {
    pub fn is_valid(&self) -> bool {
        matches!(self, Check::Valid)
    }
}

/// Checks every line in order and reports the first failure.
pub fn check_derivation(d: &Derivation) -> Check {
    if d.lines.is_empty() {
        return Check::Invalid {
            line: 0,
            reason: InvalidReason::Empty,
        };
    }
    let mut prev = 0;
    for (pos, line) in d.lines.iter().enumerate() {
        let invalid = |reason| Check::Invalid {
            line: line.index,
            reason,
        };
        if line.index <= prev || (pos == 0 && line.index != 1) {
            return invalid(InvalidReason::BadIndex);
        }
        prev = line.index;
        let earlier = |i: usize| d.lines[..pos].iter().find(|l| l.index == i);
        match line.justification {
            Justification::Axiom(k) => {
                let Some(schema) = axiom(k) else {
                    return invalid(InvalidReason::NoSuchAxiom(k));
                };
                if schema.matches(&line.formula).is_none() {
                    return invalid(InvalidReason::NotAnAxiom(k));
                }
            }
            Justification::Premise => {
                if !d.premises.contains(&line.formula) {
                    return invalid(InvalidReason::NotAPremise);
                }
            }
            Justification::ModusPonens(i, j) => {
                let Some(minor) = earlier(i) else {
                    return invalid(InvalidReason::BadReference(i));
                };
                let Some(major) = earlier(j) else {
                    return invalid(InvalidReason::BadReference(j));
                };
                let shape_ok = matches!(
                    &major.formula,
                    Formula::Imp(a, b) if **a == minor.formula && **b == line.formula
                );
                if !shape_ok {
                    return invalid(InvalidReason::MpShapeMismatch { minor: i, major: j });
                }
            }
        }
    }
    Check::Valid
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        parse(s).unwrap()
    }

    fn binding(pairs: &[(&str, &str)]) -> Substitution {
        pairs.iter().map(|(k, v)| (k.to_string(), f(v))).collect()
    }

    #[test]
    fn schema_table_is_complete() {
        assert_eq!(axioms().len(), 11);
        assert_eq!(axiom(10).unwrap().pattern(), &f("alpha -> (~alpha -> beta)"));
        assert_eq!(axiom(9).unwrap().pattern(), &f("alpha | (alpha -> beta)"));
        assert_eq!(
            axiom(2).unwrap().pattern(),
            &f("(alpha -> beta) -> ((alpha -> (beta -> gamma)) -> (alpha -> gamma))")
        );
        assert_eq!(
            axiom(8).unwrap().pattern(),
            &f("(alpha -> gamma) -> ((beta -> gamma) -> ((alpha | beta) -> gamma))")
        );
        assert!(axiom(0).is_none());
        assert!(axiom(12).is_none());
    }

    #[test]
    fn match_axiom_examples() {
        assert_eq!(
            match_axiom(&f("p -> (q -> p)")),
            Some((1, binding(&[(ALPHA, "p"), (BETA, "q")])))
        );
        assert_eq!(
            match_axiom(&f("p | (p -> q)")),
            Some((9, binding(&[(ALPHA, "p"), (BETA, "q")])))
        );
        assert_eq!(match_axiom(&f("p -> (q -> q)")), None);
    }

    #[test]
    fn included_middle_accepts_both_bracketings() {
        assert_eq!(match_axiom(&f("p | ~p | #p")).unwrap().0, 11);
        assert_eq!(match_axiom(&f("p | (~p | #p)")).unwrap().0, 11);
        assert_eq!(match_axiom(&f("p | ~q | #p")), None);
    }

    #[test]
    fn lowest_index_wins() {
        // K and or-intro-left overlap on nothing, but K and explosion do
        // when beta is a negation of alpha.
        let g = f("p -> ~p -> p");
        assert_eq!(match_axiom(&g).unwrap().0, 1);
        assert!(axiom(10).unwrap().matches(&g).is_some());
    }

    fn derivation(premises: &[&str], lines: &[(&str, Justification)]) -> Derivation {
        let mut d = Derivation::new(premises.iter().map(|p| f(p)).collect());
        for (text, j) in lines {
            d.push(f(text), *j);
        }
        d
    }

    #[test]
    fn three_line_included_middle_derivation() {
        let d = derivation(
            &[],
            &[
                ("p|~p|#p", Justification::Axiom(11)),
                ("(p|~p|#p) -> (q -> ((p|~p|#p)&q))", Justification::Axiom(3)),
                ("q -> ((p|~p|#p)&q)", Justification::ModusPonens(1, 2)),
            ],
        );
        assert_eq!(check_derivation(&d), Check::Valid);
    }

    #[test]
    fn premise_line() {
        let d = derivation(&["q"], &[("q", Justification::Premise)]);
        assert!(d.check().is_valid());
        let d = derivation(&[], &[("q", Justification::Premise)]);
        assert_eq!(
            d.check(),
            Check::Invalid {
                line: 1,
                reason: InvalidReason::NotAPremise
            }
        );
    }

    #[test]
    fn invalid_lines_are_reported() {
        let d = derivation(&[], &[("p", Justification::Axiom(1))]);
        assert_eq!(
            d.check(),
            Check::Invalid {
                line: 1,
                reason: InvalidReason::NotAnAxiom(1)
            }
        );

        let d = derivation(
            &["p", "p -> q"],
            &[
                ("p", Justification::Premise),
                ("p -> q", Justification::Premise),
                ("q", Justification::ModusPonens(2, 1)),
            ],
        );
        assert_eq!(
            d.check(),
            Check::Invalid {
                line: 3,
                reason: InvalidReason::MpShapeMismatch { minor: 2, major: 1 }
            }
        );

        let d = derivation(&["p"], &[("p", Justification::Premise), ("p", Justification::ModusPonens(1, 2))]);
        assert_eq!(
            d.check(),
            Check::Invalid {
                line: 2,
                reason: InvalidReason::BadReference(2)
            }
        );

        let d = derivation(&[], &[("p -> q -> p", Justification::Axiom(12))]);
        assert!(!d.check().is_valid());
        assert!(!Derivation::default().check().is_valid());
    }

    #[test]
    fn line_numbers_must_increase() {
        let mut d = derivation(&["p"], &[("p", Justification::Premise), ("p", Justification::Premise)]);
        d.lines[1].index = 1;
        assert_eq!(
            d.check(),
            Check::Invalid {
                line: 1,
                reason: InvalidReason::BadIndex
            }
        );
    }
}
