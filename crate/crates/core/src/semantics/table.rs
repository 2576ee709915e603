use std::fmt;

use crate::error::Result;
use crate::formula::{Formula, FormulaSet};

use super::DecisionClosure;

/// Non-deterministic truth table: one row per admissible world of the joint
/// closure, columns are the decision atoms followed by the requested formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    pub headers: Vec<String>,
    /// Number of leading atom columns.
    pub atom_columns: usize,
    pub rows: Vec<Vec<bool>>,
}

impl TruthTable {
    pub(super) fn build(fs: &[Formula], cap: u64) -> Result<Self> {
        let base: FormulaSet = fs.iter().cloned().collect();
        let closure = DecisionClosure::new(&base);
        let worlds = closure.enumerate_worlds(cap)?;
        let mut headers: Vec<String> = closure.atoms().iter().map(|a| a.to_string()).collect();
        let atom_columns = headers.len();
        headers.extend(fs.iter().map(|f| f.to_string()));
        let rows = worlds
            .iter()
            .map(|w| {
                let mut row = w.bits().to_vec();
                for f in fs {
                    row.push(w.eval(f)?);
                }
                Ok(row)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(TruthTable {
            headers,
            atom_columns,
            rows,
        })
    }

    /// Values of one formula column, top to bottom.
    pub fn column(&self, index: usize) -> Vec<bool> {
        self.rows.iter().map(|r| r[index]).collect()
    }
}

impl fmt::Display for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count().max(1)).collect();
        let line = |f: &mut fmt::Formatter<'_>, cells: Vec<String>| -> fmt::Result {
            let mut out = String::new();
            for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    out.push_str(if i == self.atom_columns { " || " } else { " | " });
                }
                out.push_str(&format!("{cell:^w$}", w = *w));
            }
            writeln!(f, "{}", out.trim_end())
        };
        line(f, self.headers.clone())?;
        let rule: String = widths
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let sep = if i == 0 {
                    ""
                } else if i == self.atom_columns {
                    "-++-"
                } else {
                    "-+-"
                };
                format!("{sep}{}", "-".repeat(*w))
            })
            .collect();
        writeln!(f, "{rule}")?;
        for row in &self.rows {
            line(f, row.iter().map(|&b| u8::from(b).to_string()).collect())?;
        }
        Ok(())
    }
}
