//! Distribution and constraint files.
//!
//! ```text
//! closure: #p
//! world { p=1, ~p=0, #p=0 } weight 1/2
//! world { p=0, ~p=0, #p=1 } weight 1/2
//! ```
//!
//! ```text
//! universe: #q
//! p = 1/2
//! p | ~p = 0.5
//! ```

use std::collections::BTreeMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::formula::{parse, Formula, FormulaSet};
use crate::rational::parse_rational;
use crate::semantics::{DecisionAtom, DecisionClosure};

use super::{ProbAssignment, WorldDistribution};

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn clean(line: &str) -> &str {
    match line.find("//") {
        Some(i) => line[..i].trim(),
        None => line.trim(),
    }
}

fn formula_at(text: &str, lineno: usize) -> Result<Formula> {
    parse(text).map_err(|e| format_err(lineno, e.to_string()))
}

fn formula_list(text: &str, lineno: usize) -> Result<FormulaSet> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| formula_at(s, lineno))
        .collect()
}

fn find_atom(closure: &DecisionClosure, f: &Formula) -> Option<DecisionAtom> {
    closure.atoms().iter().find(|a| a.formula() == *f).cloned()
}

pub fn parse_distribution(text: &str) -> Result<WorldDistribution> {
    let mut closure: Option<DecisionClosure> = None;
    let mut weights = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let line = clean(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("closure:") {
            if closure.is_some() {
                return Err(format_err(lineno, "closure declared twice"));
            }
            closure = Some(DecisionClosure::new(&formula_list(rest, lineno)?));
            continue;
        }
        let Some(rest) = line.strip_prefix("world") else {
            return Err(format_err(lineno, "expected `closure:` or `world { ... } weight p/q`"));
        };
        let c = closure
            .as_ref()
            .ok_or_else(|| format_err(lineno, "`closure:` must come before worlds"))?;
        let rest = rest.trim_start();
        let body = rest
            .strip_prefix('{')
            .and_then(|r| r.split_once('}'))
            .ok_or_else(|| format_err(lineno, "expected `{ atom=bit, ... }`"))?;
        let (atoms, tail) = body;
        let weight = tail
            .trim()
            .strip_prefix("weight")
            .ok_or_else(|| format_err(lineno, "expected `weight p/q` after the world"))?;
        let weight = parse_rational(weight)
            .ok_or_else(|| format_err(lineno, format!("bad weight `{}`", weight.trim())))?;

        let mut assignment = BTreeMap::new();
        for item in atoms.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (atom, bit) = item
                .rsplit_once('=')
                .ok_or_else(|| format_err(lineno, format!("expected `atom=bit`, found `{item}`")))?;
            let bit = match bit.trim() {
                "0" => false,
                "1" => true,
                other => return Err(format_err(lineno, format!("bit must be 0 or 1, found `{other}`"))),
            };
            let f = formula_at(atom, lineno)?;
            let atom = find_atom(c, &f)
                .ok_or_else(|| format_err(lineno, format!("`{f}` is not an atom of the closure")))?;
            if assignment.insert(atom, bit).is_some() {
                return Err(format_err(lineno, format!("`{f}` assigned twice")));
            }
        }
        let world = c.world(&assignment).map_err(|e| format_err(lineno, e.to_string()))?;
        weights.push((world, weight));
    }
    let closure = closure.ok_or_else(|| format_err(1, "missing `closure:` line"))?;
    WorldDistribution::new(closure, weights)
}

pub fn write_distribution(d: &WorldDistribution) -> String {
    let mut out = String::from("closure: ");
    let base: Vec<String> = d.closure().base().iter().map(|f| f.to_string()).collect();
    out.push_str(&base.join(", "));
    out.push('\n');
    for (w, p) in d.weights() {
        let atoms: Vec<String> = d
            .closure()
            .atoms()
            .iter()
            .zip(w.bits())
            .map(|(a, b)| format!("{a}={}", u8::from(*b)))
            .collect();
        let _ = writeln!(out, "world {{ {} }} weight {p}", atoms.join(", "));
    }
    out
}

/// A constraint table with the extra formulas whose closure it ranges over.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AssignmentFile {
    pub universe: FormulaSet,
    pub assignment: ProbAssignment,
}

pub fn parse_assignment(text: &str) -> Result<AssignmentFile> {
    let mut file = AssignmentFile::default();
    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let line = clean(raw);
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("universe:") {
            file.universe.extend(formula_list(rest, lineno)?);
            continue;
        }
        let (f, v) = line
            .rsplit_once('=')
            .ok_or_else(|| format_err(lineno, "expected `<formula> = <probability>`"))?;
        let f = formula_at(f, lineno)?;
        let v = parse_rational(v)
            .ok_or_else(|| format_err(lineno, format!("bad probability `{}`", v.trim())))?;
        if file.assignment.get(&f).is_some() {
            return Err(format_err(lineno, format!("`{f}` constrained twice")));
        }
        file.assignment.set(f, v)?;
    }
    Ok(file)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    const DIST: &str = "\
// half on p, half undetermined
closure: #p
world { p=1, ~p=0, #p=0 } weight 1/2
world { p=0, ~p=0, #p=1 } weight 0.5
";

    #[test]
    fn reads_distribution() {
        let d = parse_distribution(DIST).unwrap();
        assert_eq!(d.prob(&parse("p").unwrap()).unwrap(), ratio(1, 2));
        assert_eq!(d.prob(&parse("#p").unwrap()).unwrap(), ratio(1, 2));
        let again = parse_distribution(&write_distribution(&d)).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn distribution_errors() {
        let bad_world = "closure: #p\nworld { p=1, ~p=1, #p=0 } weight 1\n";
        assert!(matches!(parse_distribution(bad_world), Err(Error::Format { line: 2, .. })));
        let unknown = "closure: p\nworld { q=1 } weight 1\n";
        assert!(matches!(parse_distribution(unknown), Err(Error::Format { line: 2, .. })));
        let sum = "closure: p\nworld { p=1 } weight 1/2\n";
        assert!(matches!(parse_distribution(sum), Err(Error::InvalidDistribution(_))));
        let order = "world { p=1 } weight 1\n";
        assert!(matches!(parse_distribution(order), Err(Error::Format { line: 1, .. })));
    }

    #[test]
    fn reads_constraints() {
        let file = parse_assignment("universe: #q\np = 1/2\np | ~p = 0.5\n").unwrap();
        assert_eq!(file.universe.len(), 1);
        assert_eq!(file.assignment.len(), 2);
        assert!(matches!(parse_assignment("p = 3/2\n"), Err(Error::OutOfRange { .. })));
        assert!(matches!(parse_assignment("p\n"), Err(Error::Format { line: 1, .. })));
    }
}
