use num_traits::{One, Zero};

use crate::error::Result;
use crate::formula::FormulaSet;
use crate::rational::Rational;
use crate::semantics::{Decider, DecisionClosure};

use super::{ProbAssignment, WorldDistribution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coherence {
    /// A distribution realizing every constraint; zero-weight worlds are
    /// left out.
    Feasible(WorldDistribution),
    Infeasible,
}

impl Coherence {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Coherence::Feasible(_))
    }

    pub fn witness(&self) -> Option<&WorldDistribution> {
        match self {
            Coherence::Feasible(d) => Some(d),
            Coherence::Infeasible => None,
        }
    }
}

/// Decides whether some distribution over the joint closure of `universe`
/// and the constrained formulas gives every formula its prescribed value.
pub fn coherence(
    constraints: &ProbAssignment,
    universe: &FormulaSet,
    decider: &Decider,
) -> Result<Coherence> {
    let mut base = universe.clone();
    base.extend(constraints.entries().iter().map(|(f, _)| f.clone()));
    let closure = DecisionClosure::new(&base);
    let worlds = decider.worlds(&closure)?;

    let indicator = |b: bool| if b { Rational::one() } else { Rational::zero() };
    let mut a = vec![vec![Rational::one(); worlds.len()]];
    let mut b = vec![Rational::one()];
    for (f, v) in constraints.entries() {
        let row = worlds
            .iter()
            .map(|w| w.eval(f).map(indicator))
            .collect::<Result<Vec<_>>>()?;
        a.push(row);
        b.push(v.clone());
    }

    let Some(x) = super::feasible_point(&a, &b) else {
        return Ok(Coherence::Infeasible);
    };
    let weights = worlds
        .into_iter()
        .zip(x)
        .filter(|(_, p)| !p.is_zero())
        .collect();
    Ok(Coherence::Feasible(WorldDistribution::new(closure, weights)?))
}
