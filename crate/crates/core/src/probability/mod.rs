//! Paracomplete probability over distributions of worlds.
//!
//! A probability function is realized as a finite distribution over the
//! admissible worlds of a closure: `P(f)` is the total weight of the worlds
//! where `f` evaluates to 1. Point masses are exactly the valuations. All
//! arithmetic is exact.

mod audit;
mod coherence;
mod simplex;
mod text;

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::formula::{Formula, FormulaSet};
use crate::rational::{in_unit_interval, Rational};
use crate::semantics::{Decider, DecisionClosure, World};

pub use audit::{audit_axioms, AuditReport, Auditor, Violation};
pub use coherence::{coherence, Coherence};
pub use simplex::feasible_point;
pub use text::{parse_assignment, parse_distribution, write_distribution, AssignmentFile};

/// Exact nonnegative weights on worlds of one closure, summing to 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WorldDistribution {
    closure: DecisionClosure,
    weights: Vec<(World, Rational)>,
}

impl WorldDistribution {
    pub fn new(closure: DecisionClosure, weights: Vec<(World, Rational)>) -> Result<Self> {
        let mut seen = HashSet::new();
        let mut total = Rational::zero();
        for (w, p) in &weights {
            if *w.closure() != closure {
                return Err(Error::InvalidDistribution(format!(
                    "world `{w}` belongs to a different closure"
                )));
            }
            if p.is_negative() {
                return Err(Error::InvalidDistribution(format!("negative weight {p} on `{w}`")));
            }
            if !seen.insert(w.bits().to_vec()) {
                return Err(Error::InvalidDistribution(format!("world `{w}` listed twice")));
            }
            total += p;
        }
        if !total.is_one() {
            return Err(Error::InvalidDistribution(format!("weights sum to {total}, not 1")));
        }
        Ok(WorldDistribution { closure, weights })
    }

    /// Equal weight on every admissible world of the closure.
    pub fn uniform(closure: DecisionClosure, decider: &Decider) -> Result<Self> {
        let worlds = decider.worlds(&closure)?;
        Self::uniform_over(closure, worlds)
    }

    pub(crate) fn uniform_over(closure: DecisionClosure, worlds: Vec<World>) -> Result<Self> {
        if worlds.is_empty() {
            return Err(Error::InvalidDistribution("no worlds to spread weight over".into()));
        }
        let share = Rational::new(1.into(), worlds.len().into());
        let weights = worlds.into_iter().map(|w| (w, share.clone())).collect();
        Self::new(closure, weights)
    }

    pub fn point_mass(world: World) -> Self {
        WorldDistribution {
            closure: world.closure().clone(),
            weights: vec![(world, Rational::one())],
        }
    }

    pub fn closure(&self) -> &DecisionClosure {
        &self.closure
    }

    /// Worlds with their weights, zero weights included if given.
    pub fn weights(&self) -> &[(World, Rational)] {
        &self.weights
    }

    pub fn support(&self) -> impl Iterator<Item = &World> {
        self.weights.iter().filter(|(_, p)| !p.is_zero()).map(|(w, _)| w)
    }

    fn check_evaluable(&self, f: &Formula) -> Result<()> {
        if self.closure.can_evaluate(f) {
            return Ok(());
        }
        // Weights are never empty, and eval names the missing atom.
        self.weights[0].0.eval(f)?;
        Err(Error::UnknownAtom(f.to_string()))
    }

    pub fn prob(&self, f: &Formula) -> Result<Rational> {
        self.check_evaluable(f)?;
        let mut total = Rational::zero();
        for (w, p) in &self.weights {
            if w.eval(f)? {
                total += p;
            }
        }
        Ok(total)
    }

    /// `P(target | given) = P(target & given) / P(given)`.
    pub fn conditional(&self, target: &Formula, given: &Formula) -> Result<Rational> {
        let denominator = self.prob(given)?;
        let numerator = self.prob(&Formula::and(target.clone(), given.clone()))?;
        if denominator.is_zero() {
            return Err(Error::ZeroCondition(given.to_string()));
        }
        Ok(numerator / denominator)
    }

    pub fn total_probability(&self, alpha: &Formula, beta: &Formula) -> Result<TotalProbability> {
        let and = |g: Formula| Formula::and(beta.clone(), g);
        let not_alpha = Formula::neg(alpha.clone());
        let undet_alpha = Formula::undet(alpha.clone());
        let excluded_middle = Formula::or(alpha.clone(), not_alpha.clone());
        let beta_p = self.prob(beta)?;
        let with_alpha = self.prob(&and(alpha.clone()))?;
        let with_not_alpha = self.prob(&and(not_alpha))?;
        let with_undet = self.prob(&and(undet_alpha.clone()))?;
        let overlap = self.prob(&Formula::and(and(excluded_middle), undet_alpha))?;
        let identity_holds = beta_p == &with_alpha + &with_not_alpha + &with_undet - &overlap;
        Ok(TotalProbability {
            beta: beta_p,
            beta_and_alpha: with_alpha,
            beta_and_not_alpha: with_not_alpha,
            beta_and_undet_alpha: with_undet,
            beta_and_overlap: overlap,
            identity_holds,
        })
    }

    /// Posterior `P(alpha | beta)` through the paracomplete Bayes rule.
    ///
    /// Requires `P(alpha)`, `P(~alpha)`, `P((alpha | ~alpha) & #alpha)` and
    /// `P(beta)` to be nonzero.
    pub fn bayes(&self, alpha: &Formula, beta: &Formula) -> Result<BayesReport> {
        let not_alpha = Formula::neg(alpha.clone());
        let undet_alpha = Formula::undet(alpha.clone());
        let overlap = Formula::and(
            Formula::or(alpha.clone(), not_alpha.clone()),
            undet_alpha.clone(),
        );
        for g in [alpha, &not_alpha, &overlap, beta] {
            if self.prob(g)?.is_zero() {
                return Err(Error::HypothesisViolated(g.to_string()));
            }
        }
        // P(beta | g) * P(g); nonzero P(overlap) forces nonzero P(#alpha).
        let term = |g: &Formula| -> Result<Rational> {
            Ok(self.conditional(beta, g)? * self.prob(g)?)
        };
        let terms = [term(alpha)?, term(&not_alpha)?, term(&undet_alpha)?];
        let k = term(&overlap)?;
        let numerator = terms[0].clone();
        let denominator = terms.iter().sum::<Rational>() - &k;
        let posterior = &numerator / &denominator;
        let direct = self.conditional(alpha, beta)?;
        Ok(BayesReport {
            posterior,
            numerator,
            denominator,
            k,
            terms,
            direct,
        })
    }
}

/// The terms of the total paracomplete probability identity
/// `P(b) = P(b & a) + P(b & ~a) + P(b & #a) - P(b & (a | ~a) & #a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalProbability {
    pub beta: Rational,
    pub beta_and_alpha: Rational,
    pub beta_and_not_alpha: Rational,
    pub beta_and_undet_alpha: Rational,
    pub beta_and_overlap: Rational,
    pub identity_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BayesReport {
    pub posterior: Rational,
    pub numerator: Rational,
    /// `terms[0] + terms[1] + terms[2] - k`.
    pub denominator: Rational,
    /// `P(b | (a | ~a) & #a) * P((a | ~a) & #a)`.
    pub k: Rational,
    /// `P(b | a) P(a)`, `P(b | ~a) P(~a)`, `P(b | #a) P(#a)`.
    pub terms: [Rational; 3],
    /// `P(a & b) / P(b)` computed directly, for comparison.
    pub direct: Rational,
}

impl fmt::Display for BayesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "posterior={}", self.posterior)?;
        writeln!(f, "numerator={}", self.numerator)?;
        writeln!(f, "denominator={}", self.denominator)?;
        writeln!(f, "K={}", self.k)?;
        writeln!(f, "term_alpha={}", self.terms[0])?;
        writeln!(f, "term_not_alpha={}", self.terms[1])?;
        writeln!(f, "term_undet_alpha={}", self.terms[2])?;
        write!(f, "direct={}", self.direct)
    }
}

/// Finitely many formulas with probabilities in `[0, 1]`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProbAssignment {
    entries: Vec<(Formula, Rational)>,
}

impl ProbAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds or replaces an entry.
    pub fn set(&mut self, f: Formula, value: Rational) -> Result<()> {
        if !in_unit_interval(&value) {
            return Err(Error::OutOfRange {
                formula: f.to_string(),
                value: value.to_string(),
            });
        }
        match self.entries.iter_mut().find(|(g, _)| *g == f) {
            Some(entry) => entry.1 = value,
            None => self.entries.push((f, value)),
        }
        Ok(())
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Formula, Rational)>) -> Result<Self> {
        let mut t = Self::new();
        for (f, v) in entries {
            t.set(f, v)?;
        }
        Ok(t)
    }

    pub fn get(&self, f: &Formula) -> Option<&Rational> {
        self.entries.iter().find(|(g, _)| g == f).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(Formula, Rational)] {
        &self.entries
    }

    pub fn formulas(&self) -> FormulaSet {
        self.entries.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The values a distribution gives to the given formulas.
    pub fn from_distribution(d: &WorldDistribution, formulas: &[Formula]) -> Result<Self> {
        let mut t = Self::new();
        for f in formulas {
            t.set(f.clone(), d.prob(f)?)?;
        }
        Ok(t)
    }
}

/// `premises ⊩ f`: every distribution giving each premise probability 1
/// gives `f` probability 1.
///
/// A distribution gives all premises probability 1 exactly when its support
/// lies inside the premise-satisfying worlds, so it suffices to look at the
/// uniform distribution over all of them.
pub fn p_entails(premises: &FormulaSet, f: &Formula, decider: &Decider) -> Result<bool> {
    let mut base = premises.clone();
    base.insert(f.clone());
    let closure = DecisionClosure::new(&base);
    let mut admissible = Vec::new();
    for w in decider.worlds(&closure)? {
        let mut all = true;
        for p in premises {
            all &= w.eval(p)?;
        }
        if all {
            admissible.push(w);
        }
    }
    if admissible.is_empty() {
        return Ok(true);
    }
    let d = WorldDistribution::uniform_over(closure, admissible)?;
    Ok(d.prob(f)?.is_one())
}
