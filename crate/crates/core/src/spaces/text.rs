//! Space files.
//!
//! ```text
//! omega: 1 2
//! set E = {}
//! set A = {1}
//! set O = {1 2}
//! circ A = {}
//! diamond A = O
//! pi = {1 2}
//! mu A = 1/2
//! ```
//!
//! The declared sets make up sigma. Right-hand sides are set literals or
//! names of declared sets. Without `pi` and `mu` lines the file describes an
//! algebra only.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

use super::{OutcomeSet, ParacompleteProbSpace, SigmaPAlgebra};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceFile {
    pub algebra: SigmaPAlgebra,
    pub names: BTreeMap<String, OutcomeSet>,
    pub pi: Option<OutcomeSet>,
    pub measure: BTreeMap<OutcomeSet, Rational>,
}

impl SpaceFile {
    /// The full space, when the file declares `pi` or any `mu` line.
    pub fn space(&self) -> Option<ParacompleteProbSpace> {
        if self.pi.is_none() && self.measure.is_empty() {
            return None;
        }
        Some(ParacompleteProbSpace {
            algebra: self.algebra.clone(),
            pi: self.pi.unwrap_or(OutcomeSet::EMPTY),
            measure: self.measure.clone(),
        })
    }
}

fn format_err(line: usize, message: impl Into<String>) -> Error {
    Error::Format {
        line,
        message: message.into(),
    }
}

struct Reader {
    omega: Vec<String>,
    names: BTreeMap<String, OutcomeSet>,
}

impl Reader {
    fn set(&self, text: &str, lineno: usize) -> Result<OutcomeSet> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            let mut indices = Vec::new();
            for label in inner.split(|c: char| c == ',' || c.is_whitespace()) {
                if label.is_empty() {
                    continue;
                }
                let i = self
                    .omega
                    .iter()
                    .position(|o| o == label)
                    .ok_or_else(|| format_err(lineno, format!("`{label}` is not an outcome")))?;
                indices.push(i);
            }
            return Ok(OutcomeSet::from_indices(indices));
        }
        self.names
            .get(text)
            .copied()
            .ok_or_else(|| format_err(lineno, format!("unknown set `{text}`")))
    }

    fn name(&self, text: &str, lineno: usize) -> Result<OutcomeSet> {
        self.names
            .get(text.trim())
            .copied()
            .ok_or_else(|| format_err(lineno, format!("unknown set `{}`", text.trim())))
    }
}

fn assignment(rest: &str, lineno: usize) -> Result<(&str, &str)> {
    rest.split_once('=')
        .map(|(l, r)| (l.trim(), r.trim()))
        .ok_or_else(|| format_err(lineno, "expected `=`"))
}

pub fn parse_space(text: &str) -> Result<SpaceFile> {
    let mut reader = Reader {
        omega: Vec::new(),
        names: BTreeMap::new(),
    };
    let mut seen_omega = false;
    let mut circ = BTreeMap::new();
    let mut diamond = BTreeMap::new();
    let mut pi = None;
    let mut measure = BTreeMap::new();

    for (n, raw) in text.lines().enumerate() {
        let lineno = n + 1;
        let line = match raw.find("//") {
            Some(i) => raw[..i].trim(),
            None => raw.trim(),
        };
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line
            .split_once(|c: char| c.is_whitespace() || c == ':' || c == '=')
            .map(|(k, _)| (k, &line[k.len()..]))
            .unwrap_or((line, ""));
        match keyword {
            "omega" => {
                if seen_omega {
                    return Err(format_err(lineno, "omega declared twice"));
                }
                let rest = rest.trim_start().strip_prefix(':').ok_or_else(|| {
                    format_err(lineno, "expected `omega: <outcome> ...`")
                })?;
                reader.omega = rest.split_whitespace().map(str::to_string).collect();
                let mut sorted = reader.omega.clone();
                sorted.sort();
                sorted.dedup();
                if sorted.len() != reader.omega.len() {
                    return Err(format_err(lineno, "duplicate outcome label"));
                }
                if reader.omega.len() > super::MAX_OUTCOMES {
                    return Err(Error::OmegaTooLarge {
                        size: reader.omega.len(),
                        max: super::MAX_OUTCOMES,
                    });
                }
                seen_omega = true;
            }
            _ if !seen_omega => {
                return Err(format_err(lineno, "`omega:` must come first"));
            }
            "set" => {
                let (name, value) = assignment(rest, lineno)?;
                if name.is_empty() || name.contains(char::is_whitespace) {
                    return Err(format_err(lineno, format!("bad set name `{name}`")));
                }
                let value = reader.set(value, lineno)?;
                if reader.names.insert(name.to_string(), value).is_some() {
                    return Err(format_err(lineno, format!("set `{name}` declared twice")));
                }
            }
            "circ" | "diamond" => {
                let (name, value) = assignment(rest, lineno)?;
                let key = reader.name(name, lineno)?;
                let value = reader.set(value, lineno)?;
                let map = if keyword == "circ" { &mut circ } else { &mut diamond };
                if map.insert(key, value).is_some() {
                    return Err(format_err(lineno, format!("{keyword} of `{name}` given twice")));
                }
            }
            "pi" => {
                let (_, value) = assignment(rest, lineno)?;
                if pi.replace(reader.set(value, lineno)?).is_some() {
                    return Err(format_err(lineno, "pi given twice"));
                }
            }
            "mu" => {
                let (name, value) = assignment(rest, lineno)?;
                let key = reader.name(name, lineno)?;
                let value = parse_rational(value)
                    .ok_or_else(|| format_err(lineno, format!("bad measure `{value}`")))?;
                if measure.insert(key, value).is_some() {
                    return Err(format_err(lineno, format!("mu of `{name}` given twice")));
                }
            }
            other => {
                return Err(format_err(lineno, format!("unknown directive `{other}`")));
            }
        }
    }
    if !seen_omega {
        return Err(format_err(1, "missing `omega:` line"));
    }
    let sigma: Vec<OutcomeSet> = reader.names.values().copied().collect();
    let algebra = SigmaPAlgebra::new(reader.omega, sigma, circ, diamond)?;
    Ok(SpaceFile {
        algebra,
        names: reader.names,
        pi,
        measure,
    })
}
