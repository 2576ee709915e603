use std::collections::BTreeMap;

use mbstar_core::rational::Rational;
use mbstar_core::spaces::{
    circ_within_complement, classical_space, is_sigma_algebra, power_set, validate_sigma_p,
    validate_space, ClauseViolation, OutcomeSet, SigmaPAlgebra,
};
use proptest::prelude::*;

/// The σ-algebra generated by a partition given as block labels.
fn partition_algebra(blocks: &[usize]) -> Vec<OutcomeSet> {
    let k = blocks.iter().copied().max().map_or(0, |m| m + 1);
    let cells: Vec<OutcomeSet> = (0..k)
        .map(|b| OutcomeSet::from_indices(blocks.iter().enumerate().filter(|(_, &x)| x == b).map(|(i, _)| i)))
        .filter(|c| !c.is_empty())
        .collect();
    (0..1u32 << cells.len())
        .map(|mask| {
            cells
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .fold(OutcomeSet::EMPTY, |acc, (_, c)| acc.union(*c))
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn circ_disjointness_is_the_subset_form(n in 1usize..=4, images in proptest::collection::vec(any::<u32>(), 16)) {
        let sigma = power_set(n);
        let full = OutcomeSet::full(n).bits();
        let circ: BTreeMap<_, _> = sigma
            .iter()
            .zip(&images)
            .map(|(&s, &m)| (s, OutcomeSet::from_indices((0..n).filter(|i| m & full & (1 << i) != 0))))
            .collect();
        let diamond = sigma.iter().map(|&s| (s, s)).collect();
        let a = SigmaPAlgebra::new(SigmaPAlgebra::numbered(n), sigma, circ, diamond).unwrap();
        let clause_holds = !validate_sigma_p(&a)
            .violations
            .iter()
            .any(|v| matches!(v, ClauseViolation::CircMeetsSet(_)));
        prop_assert_eq!(clause_holds, circ_within_complement(&a));
    }

    #[test]
    fn classical_spaces_validate(
        blocks in proptest::collection::vec(0usize..4, 1..=4),
        raw in proptest::collection::vec(0u32..5, 4)
    ) {
        let n = blocks.len();
        let sigma = partition_algebra(&blocks);
        let labels = SigmaPAlgebra::numbered(n);
        let check = SigmaPAlgebra::new(labels.clone(), sigma.clone(), BTreeMap::new(), BTreeMap::new()).unwrap();
        prop_assert!(is_sigma_algebra(&check));

        // Point weights on outcomes; the measure of a set is their sum.
        let mut w: Vec<u32> = raw.into_iter().take(n).collect();
        if w.iter().all(|&x| x == 0) {
            w[0] = 1;
        }
        let total: u32 = w.iter().sum();
        let mu = |s: OutcomeSet| {
            Rational::new(s.indices().map(|i| w[i]).sum::<u32>().into(), total.into())
        };
        let measure: BTreeMap<_, _> = sigma.iter().map(|&s| (s, mu(s))).collect();
        let space = classical_space(labels, sigma, measure).unwrap();
        prop_assert!(validate_space(&space).is_valid());
        prop_assert!(validate_sigma_p(&space.algebra).is_valid());
    }
}
