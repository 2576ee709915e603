//! Finite σp-algebras and paracomplete probability spaces.
//!
//! Outcomes are indexed `0..n` with `n <= 16`; an [`OutcomeSet`] is a bit
//! mask over them. Every clause is checked exhaustively.

mod text;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{in_unit_interval, Rational};

pub use text::{parse_space, SpaceFile};

pub const MAX_OUTCOMES: usize = 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OutcomeSet(u32);

impl OutcomeSet {
    pub const EMPTY: OutcomeSet = OutcomeSet(0);

    pub fn from_indices(indices: impl IntoIterator<Item = usize>) -> Self {
        OutcomeSet(indices.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn full(n: usize) -> Self {
        OutcomeSet(((1u64 << n) - 1) as u32)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 & (1 << i) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, other: Self) -> Self {
        OutcomeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        OutcomeSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        OutcomeSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement within an `n`-outcome space.
    pub fn complement(self, n: usize) -> Self {
        OutcomeSet::full(n).difference(self)
    }

    pub fn indices(self) -> impl Iterator<Item = usize> {
        (0..32).filter(move |&i| self.contains(i))
    }
}

/// Every subset of an `n`-outcome space, smallest mask first.
pub fn power_set(n: usize) -> Vec<OutcomeSet> {
    (0..1u32 << n).map(OutcomeSet).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaPAlgebra {
    omega: Vec<String>,
    sigma: BTreeSet<OutcomeSet>,
    circ: BTreeMap<OutcomeSet, OutcomeSet>,
    diamond: BTreeMap<OutcomeSet, OutcomeSet>,
}

impl SigmaPAlgebra {
    pub fn new(
        omega: Vec<String>,
        sigma: impl IntoIterator<Item = OutcomeSet>,
        circ: BTreeMap<OutcomeSet, OutcomeSet>,
        diamond: BTreeMap<OutcomeSet, OutcomeSet>,
    ) -> Result<Self> {
        if omega.len() > MAX_OUTCOMES {
            return Err(Error::OmegaTooLarge {
                size: omega.len(),
                max: MAX_OUTCOMES,
            });
        }
        let full = OutcomeSet::full(omega.len());
        let sigma: BTreeSet<OutcomeSet> = sigma.into_iter().collect();
        for s in sigma.iter().chain(circ.keys()).chain(circ.values()) {
            if !s.is_subset(full) {
                return Err(Error::InvalidSpace(format!("set {s:?} is outside the sample space")));
            }
        }
        for s in diamond.keys().chain(diamond.values()) {
            if !s.is_subset(full) {
                return Err(Error::InvalidSpace(format!("set {s:?} is outside the sample space")));
            }
        }
        Ok(SigmaPAlgebra {
            omega,
            sigma,
            circ,
            diamond,
        })
    }

    /// Outcomes labelled `1..=n`.
    pub fn numbered(n: usize) -> Vec<String> {
        (1..=n).map(|i| i.to_string()).collect()
    }

    pub fn omega(&self) -> &[String] {
        &self.omega
    }

    pub fn size(&self) -> usize {
        self.omega.len()
    }

    pub fn full(&self) -> OutcomeSet {
        OutcomeSet::full(self.size())
    }

    pub fn sigma(&self) -> &BTreeSet<OutcomeSet> {
        &self.sigma
    }

    pub fn circ(&self, a: OutcomeSet) -> Option<OutcomeSet> {
        self.circ.get(&a).copied()
    }

    pub fn diamond(&self, a: OutcomeSet) -> Option<OutcomeSet> {
        self.diamond.get(&a).copied()
    }

    /// Set of labels by name, e.g. `{1, 2}`.
    pub fn show(&self, s: OutcomeSet) -> String {
        show(&self.omega, s)
    }
}

fn show(labels: &[String], s: OutcomeSet) -> String {
    let items: Vec<&str> = s.indices().filter_map(|i| labels.get(i)).map(String::as_str).collect();
    format!("{{{}}}", items.join(", "))
}

/// A failed σp-algebra clause with the sets that witness it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClauseViolation {
    MissingEmpty,
    MissingOmega,
    NotClosedUnderIntersection(OutcomeSet, OutcomeSet),
    NotClosedUnderUnion(OutcomeSet, OutcomeSet),
    CircUndefined(OutcomeSet),
    CircOutsideSigma { set: OutcomeSet, image: OutcomeSet },
    DiamondUndefined(OutcomeSet),
    DiamondOutsideSigma { set: OutcomeSet, image: OutcomeSet },
    /// `A⊙ ∩ A` is not empty.
    CircMeetsSet(OutcomeSet),
    /// `◆A ∩ Aᶜ` differs from `Aᶜ \ A⊙`.
    DiamondComplement(OutcomeSet),
}

impl ClauseViolation {
    /// Short name of the clause, as used in reports.
    pub fn clause(&self) -> &'static str {
        use ClauseViolation::*;
        match self {
            MissingEmpty | MissingOmega => "(i)",
            NotClosedUnderIntersection(..) => "(ii)",
            NotClosedUnderUnion(..) => "(iii)",
            CircUndefined(_) | CircOutsideSigma { .. } => "circ-total",
            DiamondUndefined(_) | DiamondOutsideSigma { .. } => "diamond-total",
            CircMeetsSet(_) => "(iv)(a)",
            DiamondComplement(_) => "(iv)(b)",
        }
    }

    fn describe(&self, labels: &[String]) -> String {
        use ClauseViolation::*;
        let s = |x: &OutcomeSet| show(labels, *x);
        match self {
            MissingEmpty => "the empty set is not in sigma".into(),
            MissingOmega => "omega is not in sigma".into(),
            NotClosedUnderIntersection(a, b) => {
                format!("{} ∩ {} is not in sigma", s(a), s(b))
            }
            NotClosedUnderUnion(a, b) => format!("{} ∪ {} is not in sigma", s(a), s(b)),
            CircUndefined(a) => format!("circ is undefined on {}", s(a)),
            CircOutsideSigma { set, image } => {
                format!("circ {} = {} is not in sigma", s(set), s(image))
            }
            DiamondUndefined(a) => format!("diamond is undefined on {}", s(a)),
            DiamondOutsideSigma { set, image } => {
                format!("diamond {} = {} is not in sigma", s(set), s(image))
            }
            CircMeetsSet(a) => format!("A={}: circ A meets A", s(a)),
            DiamondComplement(a) => {
                format!("A={}: diamond A ∩ A^c differs from A^c \\ circ A", s(a))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraReport {
    labels: Vec<String>,
    pub violations: Vec<ClauseViolation>,
}

impl AlgebraReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AlgebraReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("VALID");
        }
        f.write_str("INVALID")?;
        for v in &self.violations {
            write!(f, "\n{}: {}", v.clause(), v.describe(&self.labels))?;
        }
        Ok(())
    }
}

fn closed_under_union(sigma: &BTreeSet<OutcomeSet>) -> Option<(OutcomeSet, OutcomeSet)> {
    for &a in sigma {
        for &b in sigma.range(a..) {
            if !sigma.contains(&a.union(b)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// Checks every σp-algebra clause. Closure under arbitrary unions of a
/// finite family reduces to pairwise unions.
pub fn validate_sigma_p(a: &SigmaPAlgebra) -> AlgebraReport {
    use ClauseViolation::*;
    let full = a.full();
    let mut violations = Vec::new();
    if !a.sigma.contains(&OutcomeSet::EMPTY) {
        violations.push(MissingEmpty);
    }
    if !a.sigma.contains(&full) {
        violations.push(MissingOmega);
    }
    for &x in &a.sigma {
        for &y in a.sigma.range(x..) {
            if !a.sigma.contains(&x.intersection(y)) {
                violations.push(NotClosedUnderIntersection(x, y));
            }
        }
    }
    for &x in &a.sigma {
        for &y in a.sigma.range(x..) {
            if !a.sigma.contains(&x.union(y)) {
                violations.push(NotClosedUnderUnion(x, y));
            }
        }
    }
    for &x in &a.sigma {
        let comp = x.complement(a.size());
        let circ = a.circ(x);
        match circ {
            None => violations.push(CircUndefined(x)),
            Some(image) if !a.sigma.contains(&image) => {
                violations.push(CircOutsideSigma { set: x, image })
            }
            Some(_) => {}
        }
        match a.diamond(x) {
            None => violations.push(DiamondUndefined(x)),
            Some(image) if !a.sigma.contains(&image) => {
                violations.push(DiamondOutsideSigma { set: x, image })
            }
            Some(_) => {}
        }
        if let Some(c) = circ {
            if !c.is_disjoint(x) {
                violations.push(CircMeetsSet(x));
            }
            if let Some(d) = a.diamond(x) {
                if d.intersection(comp) != comp.difference(c) {
                    violations.push(DiamondComplement(x));
                }
            }
        }
    }
    AlgebraReport {
        labels: a.omega.clone(),
        violations,
    }
}

/// The subset form of the disjointness clause: `A⊙ ⊆ Aᶜ` for every `A`
/// where `⊙` is defined.
pub fn circ_within_complement(a: &SigmaPAlgebra) -> bool {
    a.sigma.iter().all(|&x| {
        a.circ(x)
            .is_none_or(|c| c.is_subset(x.complement(a.size())))
    })
}

/// Whether `sigma` is an ordinary σ-algebra: contains the empty set and is
/// closed under complement and union.
pub fn is_sigma_algebra(a: &SigmaPAlgebra) -> bool {
    sets_form_sigma_algebra(a.size(), &a.sigma)
}

fn sets_form_sigma_algebra(n: usize, sigma: &BTreeSet<OutcomeSet>) -> bool {
    sigma.contains(&OutcomeSet::EMPTY)
        && sigma.iter().all(|x| sigma.contains(&x.complement(n)))
        && closed_under_union(sigma).is_none()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParacompleteProbSpace {
    pub algebra: SigmaPAlgebra,
    /// The determined outcomes.
    pub pi: OutcomeSet,
    pub measure: BTreeMap<OutcomeSet, Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceViolation {
    Algebra(ClauseViolation),
    PiOutsideSigma(OutcomeSet),
    MeasureUndefined(OutcomeSet),
    MeasureOutsideSigma(OutcomeSet),
    MeasureOutOfRange { set: OutcomeSet, value: Rational },
    /// `μ(Ω) != 1`.
    Normalization(Rational),
    /// `μ(∅) != 0`.
    EmptyNonzero(Rational),
    /// A disjoint family in sigma whose union has the wrong measure.
    Additivity {
        family: Vec<OutcomeSet>,
        union_value: Rational,
        sum: Rational,
    },
}

impl SpaceViolation {
    fn describe(&self, labels: &[String]) -> String {
        use SpaceViolation::*;
        let s = |x: &OutcomeSet| show(labels, *x);
        match self {
            Algebra(v) => format!("{}: {}", v.clause(), v.describe(labels)),
            PiOutsideSigma(p) => format!("pi: {} is not in sigma", s(p)),
            MeasureUndefined(a) => format!("measure: undefined on {}", s(a)),
            MeasureOutsideSigma(a) => format!("measure: {} is not in sigma", s(a)),
            MeasureOutOfRange { set, value } => {
                format!("measure: {} has {value}, outside [0, 1]", s(set))
            }
            Normalization(v) => format!("normalization: measure of omega is {v}, not 1"),
            EmptyNonzero(v) => format!("normalization: measure of the empty set is {v}, not 0"),
            Additivity {
                family,
                union_value,
                sum,
            } => {
                let parts: Vec<String> = family.iter().map(s).collect();
                format!(
                    "additivity: family {} has union measure {union_value} but parts sum to {sum}",
                    parts.join(" ")
                )
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceReport {
    labels: Vec<String>,
    pub violations: Vec<SpaceViolation>,
}

impl SpaceReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SpaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return f.write_str("VALID");
        }
        f.write_str("INVALID")?;
        for v in &self.violations {
            write!(f, "\n{}", v.describe(&self.labels))?;
        }
        Ok(())
    }
}

/// Validates the algebra, membership of `pi`, normalization and finite
/// additivity over every disjoint subfamily of sigma with union in sigma.
pub fn validate_space(s: &ParacompleteProbSpace) -> SpaceReport {
    use SpaceViolation::*;
    let a = &s.algebra;
    let mut violations: Vec<SpaceViolation> = validate_sigma_p(a)
        .violations
        .into_iter()
        .map(Algebra)
        .collect();
    if !a.sigma.contains(&s.pi) {
        violations.push(PiOutsideSigma(s.pi));
    }
    for (&set, value) in &s.measure {
        if !a.sigma.contains(&set) {
            violations.push(MeasureOutsideSigma(set));
        }
        if !in_unit_interval(value) {
            violations.push(MeasureOutOfRange {
                set,
                value: value.clone(),
            });
        }
    }
    let mut complete = true;
    for &set in &a.sigma {
        if !s.measure.contains_key(&set) {
            violations.push(MeasureUndefined(set));
            complete = false;
        }
    }
    if let Some(v) = s.measure.get(&a.full()) {
        if !v.is_one() {
            violations.push(Normalization(v.clone()));
        }
    }
    if let Some(v) = s.measure.get(&OutcomeSet::EMPTY) {
        if !v.is_zero() {
            violations.push(EmptyNonzero(v.clone()));
        }
    }
    if complete {
        violations.extend(additivity_violations(&a.sigma, &s.measure));
    }
    SpaceReport {
        labels: a.omega.clone(),
        violations,
    }
}

fn additivity_violations(
    sigma: &BTreeSet<OutcomeSet>,
    mu: &BTreeMap<OutcomeSet, Rational>,
) -> Vec<SpaceViolation> {
    let mut out = Vec::new();
    if closed_under_union(sigma).is_none() {
        // With unions in sigma, additivity for disjoint pairs extends to
        // every disjoint family by induction.
        for &a in sigma.iter().filter(|s| !s.is_empty()) {
            for &b in sigma.range(a..).filter(|s| !s.is_empty()) {
                if a != b && a.is_disjoint(b) {
                    let sum = &mu[&a] + &mu[&b];
                    let union_value = &mu[&a.union(b)];
                    if sum != *union_value {
                        out.push(SpaceViolation::Additivity {
                            family: vec![a, b],
                            union_value: union_value.clone(),
                            sum,
                        });
                    }
                }
            }
        }
        return out;
    }
    // Otherwise enumerate disjoint families explicitly, reporting the first
    // failure.
    let members: Vec<OutcomeSet> = sigma.iter().copied().filter(|s| !s.is_empty()).collect();
    let mut family = Vec::new();
    search_families(&members, 0, OutcomeSet::EMPTY, &mut family, sigma, mu, &mut out);
    out
}

fn search_families(
    members: &[OutcomeSet],
    start: usize,
    union: OutcomeSet,
    family: &mut Vec<OutcomeSet>,
    sigma: &BTreeSet<OutcomeSet>,
    mu: &BTreeMap<OutcomeSet, Rational>,
    out: &mut Vec<SpaceViolation>,
) {
    if !out.is_empty() {
        return;
    }
    if family.len() >= 2 && sigma.contains(&union) {
        let sum: Rational = family.iter().map(|s| &mu[s]).sum();
        if sum != mu[&union] {
            out.push(SpaceViolation::Additivity {
                family: family.clone(),
                union_value: mu[&union].clone(),
                sum,
            });
            return;
        }
    }
    for i in start..members.len() {
        let m = members[i];
        if m.is_disjoint(union) {
            family.push(m);
            search_families(members, i + 1, union.union(m), family, sigma, mu, out);
            family.pop();
        }
    }
}

/// The classical special case: `Π = Ω`, `◆A = A`, `A⊙ = Aᶜ`.
pub fn classical_space(
    omega: Vec<String>,
    sigma: impl IntoIterator<Item = OutcomeSet>,
    measure: BTreeMap<OutcomeSet, Rational>,
) -> Result<ParacompleteProbSpace> {
    let n = omega.len();
    if n > MAX_OUTCOMES {
        return Err(Error::OmegaTooLarge {
            size: n,
            max: MAX_OUTCOMES,
        });
    }
    let sigma: BTreeSet<OutcomeSet> = sigma.into_iter().collect();
    if !sets_form_sigma_algebra(n, &sigma) || !sigma.contains(&OutcomeSet::full(n)) {
        let missing = sigma
            .iter()
            .find(|x| !sigma.contains(&x.complement(n)))
            .map(|x| format!("complement of {} is missing", show(&omega, *x)))
            .unwrap_or_else(|| "not closed under complement and union".into());
        return Err(Error::NotSigmaAlgebra(missing));
    }
    let circ = sigma.iter().map(|&x| (x, x.complement(n))).collect();
    let diamond = sigma.iter().map(|&x| (x, x)).collect();
    let algebra = SigmaPAlgebra::new(omega, sigma, circ, diamond)?;
    let space = ParacompleteProbSpace {
        pi: algebra.full(),
        algebra,
        measure,
    };
    let report = validate_space(&space);
    if !report.is_valid() {
        let first = &report.violations[0];
        return Err(Error::InvalidMeasure(first.describe(space.algebra.omega())));
    }
    Ok(space)
}
