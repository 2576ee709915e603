#![allow(dead_code)]

use mbstar_core::formula::{Formula, Substitution};
use proptest::prelude::*;

pub fn formula_over(vars: &'static [&'static str], depth: u32) -> BoxedStrategy<Formula> {
    let leaf = proptest::sample::select(vars).prop_map(Formula::var);
    leaf.prop_recursive(depth, 48, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::neg),
            inner.clone().prop_map(Formula::undet),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
    .boxed()
}

pub fn formula(depth: u32) -> BoxedStrategy<Formula> {
    formula_over(&["p", "q", "r"], depth)
}

pub fn positive_formula(depth: u32) -> BoxedStrategy<Formula> {
    let leaf = proptest::sample::select(&["p", "q", "r"][..]).prop_map(Formula::var);
    leaf.prop_recursive(depth, 48, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::imp(a, b)),
        ]
    })
    .boxed()
}

/// Substitutions for `p`, `q`, `r` by small formulas.
pub fn substitution(depth: u32) -> BoxedStrategy<Substitution> {
    (formula(depth), formula(depth), formula(depth))
        .prop_map(|(a, b, c)| {
            [("p".to_string(), a), ("q".to_string(), b), ("r".to_string(), c)].into()
        })
        .boxed()
}

/// Classical truth value under an assignment to the variables.
pub fn classical(f: &Formula, value: &dyn Fn(&str) -> bool) -> bool {
    match f {
        Formula::Var(v) => value(v),
        Formula::And(a, b) => classical(a, value) && classical(b, value),
        Formula::Or(a, b) => classical(a, value) || classical(b, value),
        Formula::Imp(a, b) => !classical(a, value) || classical(b, value),
        Formula::Neg(_) | Formula::Undet(_) => panic!("not a positive formula"),
    }
}
