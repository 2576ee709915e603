//! Line-oriented proof files.
//!
//! ```text
//! // comments run to end of line
//! premise p
//! premise p -> q
//! 1: p ; prem
//! 2: p -> q ; prem
//! 3: q ; mp 1 2
//! 4: q -> (r -> q) ; ax1
//! ```

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::formula::{parse, FormulaSet};

use super::{Derivation, Justification, Line};

fn strip_comment(line: &str) -> &str {
    match line.find("//") {
        Some(i) => &line[..i],
        None => line,
    }
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

fn parse_justification(text: &str, lineno: usize) -> Result<Justification> {
    let words: Vec<&str> = text.split_whitespace().collect();
    match words.as_slice() {
        ["prem"] => Ok(Justification::Premise),
        ["mp", i, j] => {
            let i = i
                .parse()
                .map_err(|_| format_err(lineno, format!("bad line reference `{i}`")))?;
            let j = j
                .parse()
                .map_err(|_| format_err(lineno, format!("bad line reference `{j}`")))?;
            Ok(Justification::ModusPonens(i, j))
        }
        [ax] if ax.starts_with("ax") => ax[2..]
            .parse()
            .map(Justification::Axiom)
            .map_err(|_| format_err(lineno, format!("bad axiom number in `{ax}`"))),
        _ => Err(format_err(
            lineno,
            format!("expected `axN`, `prem` or `mp I J`, found `{}`", text.trim()),
        )),
    }
}

pub fn parse_derivation(text: &str) -> Result<Derivation> {
    let mut premises = FormulaSet::new();
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("premise ").or(line.strip_prefix("premise\t")) {
            if !lines.is_empty() {
                return Err(format_err(lineno, "premise declarations must precede proof lines"));
            }
            let f = parse(rest).map_err(|e| format_err(lineno, e.to_string()))?;
            premises.insert(f);
            continue;
        }
        let (label, body) = line
            .split_once(':')
            .ok_or_else(|| format_err(lineno, "expected `n: <formula> ; <justification>`"))?;
        let index: usize = label
            .trim()
            .parse()
            .map_err(|_| format_err(lineno, format!("bad line number `{}`", label.trim())))?;
        let (formula, just) = body
            .rsplit_once(';')
            .ok_or_else(|| format_err(lineno, "missing `;` before justification"))?;
        let formula = parse(formula).map_err(|e| format_err(lineno, e.to_string()))?;
        let justification = parse_justification(just, lineno)?;
        lines.push(Line {
            index,
            formula,
            justification,
        });
    }
    Ok(Derivation { premises, lines })
}

pub fn write_derivation(d: &Derivation) -> String {
    let mut out = String::new();
    for p in &d.premises {
        let _ = writeln!(out, "premise {p}");
    }
    for line in &d.lines {
        let just = match line.justification {
            Justification::Axiom(k) => format!("ax{k}"),
            Justification::Premise => "prem".to_string(),
            Justification::ModusPonens(i, j) => format!("mp {i} {j}"),
        };
        let _ = writeln!(out, "{}: {} ; {}", line.index, line.formula, just);
    }
    out
}
