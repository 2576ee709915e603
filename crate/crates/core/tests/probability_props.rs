mod common;

use mbstar_core::error::Error;
use mbstar_core::formula::{Formula, FormulaSet};
use mbstar_core::probability::{audit_axioms, p_entails, ProbAssignment, WorldDistribution};
use mbstar_core::random;
use mbstar_core::rational::Rational;
use mbstar_core::semantics::{Decider, DecisionClosure};
use num_traits::{One, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::formula_over;

const VARS: &[&str] = &["p", "q"];

fn setup(seed: u64, a: &Formula, b: &Formula) -> WorldDistribution {
    let base: FormulaSet = window(a, b).into_iter().collect();
    let closure = DecisionClosure::new(&base);
    let worlds = Decider::default().worlds(&closure).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random::distribution(&mut rng, &closure, &worlds, 5, 0.3)
}

fn window(a: &Formula, b: &Formula) -> Vec<Formula> {
    let na = Formula::neg(a.clone());
    vec![
        a.clone(),
        b.clone(),
        na.clone(),
        Formula::undet(a.clone()),
        Formula::and(a.clone(), b.clone()),
        Formula::or(a.clone(), b.clone()),
        Formula::and(a.clone(), na.clone()),
        Formula::or(a.clone(), na),
        Formula::included_middle(a),
        Formula::imp(a.clone(), b.clone()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn induced_tables_pass_the_audit(seed in any::<u64>(), a in formula_over(VARS, 2), b in formula_over(VARS, 2)) {
        let d = setup(seed, &a, &b);
        let w = window(&a, &b);
        let t = ProbAssignment::from_distribution(&d, &w).unwrap();
        let report = audit_axioms(&t).unwrap();
        prop_assert!(report.is_clean(), "{}", report);
    }

    #[test]
    fn basic_laws(seed in any::<u64>(), a in formula_over(VARS, 2), b in formula_over(VARS, 2)) {
        let d = setup(seed, &a, &b);
        let na = Formula::neg(a.clone());
        let p = |f: &Formula| d.prob(f).unwrap();
        prop_assert!(p(&Formula::and(a.clone(), na.clone())).is_zero());
        prop_assert_eq!(p(&Formula::or(a.clone(), na.clone())), p(&a) + p(&na));
        prop_assert!(p(&Formula::included_middle(&a)).is_one());
        prop_assert_eq!(p(&Formula::and(a.clone(), b.clone())), p(&Formula::and(b.clone(), a.clone())));
    }

    #[test]
    fn total_probability_identity(seed in any::<u64>(), a in formula_over(VARS, 2), b in formula_over(VARS, 2)) {
        let d = setup(seed, &a, &b);
        let t = d.total_probability(&a, &b).unwrap();
        prop_assert!(t.identity_holds);
        if d.prob(&Formula::undet(a.clone())).unwrap().is_zero() {
            prop_assert_eq!(t.beta.clone(), &t.beta_and_alpha + &t.beta_and_not_alpha);
        }
    }

    #[test]
    fn bayes_matches_direct_conditioning(seed in any::<u64>(), a in formula_over(VARS, 2), b in formula_over(VARS, 2)) {
        let d = setup(seed, &a, &b);
        match d.bayes(&a, &b) {
            Ok(r) => {
                prop_assert_eq!(&r.posterior, &r.direct);
                let sum: Rational = r.terms.iter().sum();
                prop_assert_eq!(r.denominator.clone(), sum - &r.k);
            }
            Err(Error::HypothesisViolated(_)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn probabilistic_and_classical_consequence_agree(
        g1 in formula_over(VARS, 2), g2 in formula_over(VARS, 2), f in formula_over(VARS, 2)
    ) {
        let dec = Decider::default();
        let premises: FormulaSet = [g1, g2].into_iter().collect();
        let semantic = dec.entails(&premises, &f).unwrap().holds();
        prop_assert_eq!(p_entails(&premises, &f, &dec).unwrap(), semantic);
    }
}
