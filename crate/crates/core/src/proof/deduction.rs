use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::formula::{Formula, Substitution};

use super::{axiom, check_derivation, Check, Derivation, Justification, ALPHA, BETA, GAMMA};

fn k_instance(a: &Formula, b: &Formula) -> Formula {
    let binding: Substitution = [(ALPHA.into(), a.clone()), (BETA.into(), b.clone())].into();
    axiom(1).expect("axiom 1").instantiate(&binding)
}

fn s_instance(a: &Formula, b: &Formula, c: &Formula) -> Formula {
    let binding: Substitution = [
        (ALPHA.into(), a.clone()),
        (BETA.into(), b.clone()),
        (GAMMA.into(), c.clone()),
    ]
    .into();
    axiom(2).expect("axiom 2").instantiate(&binding)
}

/// Turns a derivation of `b` from `premises ∪ {hyp}` into a derivation of
/// `hyp -> b` from `premises \ {hyp}`.
///
/// Line by line, each `phi` becomes `hyp -> phi`:
///
/// * axiom or other premise: `phi`, `phi -> (hyp -> phi)` (K), then MP;
/// * the hypothesis itself: the five-line derivation of `hyp -> hyp` from K
///   and S;
/// * `phi` by MP from `psi` and `psi -> phi`: the S instance
///   `(hyp -> psi) -> ((hyp -> (psi -> phi)) -> (hyp -> phi))` and two MPs.
///
/// Only axioms 1 and 2 and modus ponens are introduced, so the output is at
/// most five times as long as the input.
pub fn deduction_transform(d: &Derivation, hyp: &Formula) -> Result<Derivation> {
    if let Check::Invalid { line, reason } = check_derivation(d) {
        return Err(Error::InvalidDerivation {
            line,
            reason: reason.to_string(),
        });
    }
    if !d.premises.contains(hyp) {
        return Err(Error::HypothesisNotPremise(hyp.to_string()));
    }

    let mut premises = d.premises.clone();
    premises.remove(hyp);
    let mut out = Derivation::new(premises);
    // Input line number -> output line number proving `hyp -> phi`.
    let mut lifted: HashMap<usize, usize> = HashMap::new();

    for line in &d.lines {
        let phi = &line.formula;
        let target = Formula::imp(hyp.clone(), phi.clone());
        let at = match line.justification {
            Justification::Premise if phi == hyp => {
                let self_imp = Formula::imp(hyp.clone(), hyp.clone());
                let l1 = out.push(k_instance(hyp, &self_imp), Justification::Axiom(1));
                let l2 = out.push(s_instance(hyp, &self_imp, hyp), Justification::Axiom(2));
                let l3 = out.push(k_instance(hyp, hyp), Justification::Axiom(1));
                let l4 = out.push(
                    Formula::imp(k_instance(hyp, &self_imp), target.clone()),
                    Justification::ModusPonens(l3, l2),
                );
                out.push(target, Justification::ModusPonens(l1, l4))
            }
            Justification::Premise | Justification::Axiom(_) => {
                let l1 = out.push(phi.clone(), line.justification);
                let l2 = out.push(k_instance(phi, hyp), Justification::Axiom(1));
                out.push(target, Justification::ModusPonens(l1, l2))
            }
            Justification::ModusPonens(i, j) => {
                let minor = &d
                    .lines
                    .iter()
                    .find(|l| l.index == i)
                    .expect("checked reference")
                    .formula;
                let l_minor = lifted[&i];
                let l_major = lifted[&j];
                let s = s_instance(hyp, minor, phi);
                let l1 = out.push(s, Justification::Axiom(2));
                let step = Formula::imp(
                    Formula::imp(hyp.clone(), Formula::imp(minor.clone(), phi.clone())),
                    target.clone(),
                );
                let l2 = out.push(step, Justification::ModusPonens(l_minor, l1));
                out.push(target, Justification::ModusPonens(l_major, l2))
            }
        };
        lifted.insert(line.index, at);
    }
    Ok(out)
}
