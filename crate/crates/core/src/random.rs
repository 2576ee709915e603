//! Random formulas, derivations and distributions for testing.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::formula::{Formula, FormulaSet, Substitution};
use crate::proof::{axioms, match_pattern, Derivation, Justification, ALPHA, BETA, GAMMA};
use crate::probability::WorldDistribution;
use crate::rational::Rational;
use crate::semantics::{DecisionClosure, World};

/// A formula of depth at most `depth` over `vars`.
pub fn formula<R: Rng + ?Sized>(rng: &mut R, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return Formula::var(*vars.choose(rng).expect("at least one variable"));
    }
    let d = depth - 1;
    match rng.gen_range(0..5) {
        0 => Formula::neg(formula(rng, vars, d)),
        1 => Formula::undet(formula(rng, vars, d)),
        2 => Formula::and(formula(rng, vars, d), formula(rng, vars, d)),
        3 => Formula::or(formula(rng, vars, d), formula(rng, vars, d)),
        _ => Formula::imp(formula(rng, vars, d), formula(rng, vars, d)),
    }
}

/// A formula without `~` and `#`.
pub fn positive_formula<R: Rng + ?Sized>(rng: &mut R, vars: &[&str], depth: usize) -> Formula {
    if depth == 0 || rng.gen_bool(0.25) {
        return Formula::var(*vars.choose(rng).expect("at least one variable"));
    }
    let d = depth - 1;
    let (a, b) = (positive_formula(rng, vars, d), positive_formula(rng, vars, d));
    match rng.gen_range(0..3) {
        0 => Formula::and(a, b),
        1 => Formula::or(a, b),
        _ => Formula::imp(a, b),
    }
}

/// Parameters for [`derivation`].
#[derive(Clone, Debug)]
pub struct DerivationShape<'a> {
    pub vars: &'a [&'a str],
    /// Depth of formulas bound to free metavariables.
    pub depth: usize,
    pub steps: usize,
}

fn axiom_line<R: Rng + ?Sized>(
    rng: &mut R,
    d: &Derivation,
    shape: &DerivationShape<'_>,
) -> (Formula, u8) {
    let schemas = axioms();
    // Prefer an instance whose antecedent is an existing line, so that
    // modus ponens has something to fire on.
    if !d.lines.is_empty() && rng.gen_bool(0.6) {
        let line = &d.lines.choose(rng).expect("nonempty").formula;
        let mut order: Vec<usize> = (0..schemas.len()).collect();
        order.shuffle(rng);
        for k in order {
            let schema = &schemas[k];
            if let Formula::Imp(antecedent, _) = schema.pattern() {
                let mut binding = Substitution::new();
                if match_pattern(antecedent, line, &mut binding) {
                    fill(rng, &mut binding, shape);
                    return (schema.instantiate(&binding), schema.index);
                }
            }
        }
    }
    let schema = schemas.choose(rng).expect("schemas");
    let mut binding = Substitution::new();
    fill(rng, &mut binding, shape);
    (schema.instantiate(&binding), schema.index)
}

fn fill<R: Rng + ?Sized>(rng: &mut R, binding: &mut Substitution, shape: &DerivationShape<'_>) {
    for meta in [ALPHA, BETA, GAMMA] {
        if !binding.contains_key(meta) {
            binding.insert(meta.to_string(), formula(rng, shape.vars, shape.depth));
        }
    }
}

fn mp_candidates(d: &Derivation) -> Vec<(usize, usize, Formula)> {
    let mut out = Vec::new();
    for major in &d.lines {
        let Formula::Imp(a, b) = &major.formula else { continue };
        if d.lines.iter().any(|l| l.formula == **b) {
            continue;
        }
        if let Some(minor) = d.lines.iter().find(|l| l.formula == **a) {
            out.push((minor.index, major.index, (**b).clone()));
        }
    }
    out
}

/// A valid derivation from `premises` built by random forward steps:
/// premises, axiom instances and modus ponens.
pub fn derivation<R: Rng + ?Sized>(
    rng: &mut R,
    premises: &FormulaSet,
    shape: &DerivationShape<'_>,
) -> Derivation {
    let mut d = Derivation::new(premises.clone());
    let premise_list = premises.as_slice();
    for _ in 0..shape.steps {
        let candidates = mp_candidates(&d);
        if !candidates.is_empty() && rng.gen_bool(0.5) {
            let (i, j, f) = candidates.choose(rng).expect("nonempty").clone();
            d.push(f, Justification::ModusPonens(i, j));
        } else if !premise_list.is_empty() && rng.gen_bool(0.3) {
            let p = premise_list.choose(rng).expect("nonempty").clone();
            d.push(p, Justification::Premise);
        } else {
            let (f, k) = axiom_line(rng, &d, shape);
            d.push(f, Justification::Axiom(k));
        }
    }
    d
}

/// Random nonnegative integer weights up to `max_weight`, normalized.
/// Each world is dropped with probability `sparsity`.
pub fn distribution<R: Rng + ?Sized>(
    rng: &mut R,
    closure: &DecisionClosure,
    worlds: &[World],
    max_weight: u32,
    sparsity: f64,
) -> WorldDistribution {
    assert!(!worlds.is_empty(), "no worlds");
    let mut raw: Vec<u32> = worlds
        .iter()
        .map(|_| if rng.gen_bool(sparsity) { 0 } else { rng.gen_range(0..=max_weight) })
        .collect();
    if raw.iter().all(|&w| w == 0) {
        let i = rng.gen_range(0..raw.len());
        raw[i] = 1;
    }
    let total: u32 = raw.iter().sum();
    let weights = worlds
        .iter()
        .zip(raw)
        .filter(|(_, w)| *w > 0)
        .map(|(world, w)| (world.clone(), Rational::new(w.into(), total.into())))
        .collect();
    WorldDistribution::new(closure.clone(), weights).expect("normalized weights")
}
