//! Command-line front end for `mbstar-core`.
//!
//! [`run`] takes an argument vector and returns the exit code and both
//! output streams, so the binary and the tests share one code path.
//!
//! Exit codes: 0 for success or a positive verdict, 1 for a negative verdict,
//! 2 for usage, parse and other input errors, 3 when the world enumeration
//! cap is exceeded.

use std::fmt::Write;
use std::fs;

use clap::{Parser, Subcommand, ValueEnum};
use mbstar_core::probability::{
    coherence, p_entails, parse_assignment, parse_distribution, write_distribution,
    Auditor, Coherence, WorldDistribution,
};
use mbstar_core::proof::{deduction_transform, parse_derivation, write_derivation, Check};
use mbstar_core::semantics::{Decider, Verdict, DEFAULT_CAP};
use mbstar_core::spaces::{is_sigma_algebra, parse_space, validate_sigma_p, validate_space};
use mbstar_core::{parse, Error, Formula, FormulaSet};

#[derive(Debug, Parser)]
#[command(name = "mbstar", version, about = "Decide, prove and measure in the paracomplete logic mb*")]
struct Cli {
    /// Maximum number of decision-atom assignments to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    /// Line-oriented `key=value`.
    Machine,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a formula and print it with minimal parentheses.
    Parse { formula: String },
    /// Decide validity, or entailment from `--premise` formulas.
    Decide {
        formula: String,
        #[arg(long = "premise", short = 'p')]
        premises: Vec<String>,
    },
    /// Print the truth table over the joint closure of the formulas.
    Table {
        #[arg(required = true)]
        formulas: Vec<String>,
    },
    /// Check a proof file.
    ProveCheck { file: String },
    /// Discharge a premise from a valid proof file.
    Deduce { file: String, hypothesis: String },
    /// Probability of a formula under a distribution file.
    Prob { dist: String, formula: String },
    /// Conditional probability `P(target | given)`.
    Cond { dist: String, target: String, given: String },
    /// Terms of the total probability identity for `alpha`, `beta`.
    Total { dist: String, alpha: String, beta: String },
    /// Posterior `P(alpha | beta)` by the paracomplete Bayes rule.
    Bayes { dist: String, alpha: String, beta: String },
    /// Check a constraint file against the probability axioms.
    Audit { file: String },
    /// Find a distribution realizing a constraint file.
    Coherence { file: String },
    /// Probabilistic consequence from `--premise` formulas.
    PEntails {
        formula: String,
        #[arg(long = "premise", short = 'p')]
        premises: Vec<String>,
    },
    /// Validate a space file.
    SpaceCheck { file: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Out {
    format: Format,
    text: String,
}

impl Out {
    /// Writes `line` in text mode, `key=value` in machine mode.
    fn kv(&mut self, key: &str, value: impl std::fmt::Display, line: impl std::fmt::Display) {
        match self.format {
            Format::Text => writeln!(self.text, "{line}"),
            Format::Machine => writeln!(self.text, "{key}={value}"),
        }
        .expect("writing to a string");
    }

    fn text(&mut self, s: impl std::fmt::Display) {
        if self.format == Format::Text {
            writeln!(self.text, "{s}").expect("writing to a string");
        }
    }

    fn machine(&mut self, key: &str, value: impl std::fmt::Display) {
        if self.format == Format::Machine {
            writeln!(self.text, "{key}={value}").expect("writing to a string");
        }
    }
}

enum Failure {
    Core(Error),
    Io(String, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn read(path: &str) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_string(), e))
}

fn formula(text: &str) -> Result<Formula, Failure> {
    Ok(parse(text).map_err(Error::from)?)
}

fn formulas(texts: &[String]) -> Result<FormulaSet, Failure> {
    texts.iter().map(|t| formula(t)).collect()
}

fn distribution(path: &str) -> Result<WorldDistribution, Failure> {
    Ok(parse_distribution(&read(path)?)?)
}

fn flag(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Runs one invocation. `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = Out {
        format: cli.format,
        text: String::new(),
    };
    match dispatch(&cli, &mut out) {
        Ok(code) => Outcome {
            code,
            stdout: out.text,
            stderr: String::new(),
        },
        Err(Failure::Core(e)) => Outcome {
            code: if matches!(e, Error::CapExceeded { .. }) { 3 } else { 2 },
            stdout: out.text,
            stderr: format!("error: {}: {e}\n", e.code()),
        },
        Err(Failure::Io(path, e)) => Outcome {
            code: 2,
            stdout: out.text,
            stderr: format!("error: io: {path}: {e}\n"),
        },
    }
}

fn verdict(out: &mut Out, v: &Verdict, positive: &str) -> i32 {
    match v {
        Verdict::Holds => {
            out.kv("verdict", positive.to_lowercase(), positive);
            0
        }
        Verdict::Countermodel(w) => {
            out.kv("verdict", "countermodel", format!("COUNTERMODEL {w}"));
            out.machine("countermodel", w);
            1
        }
    }
}

fn dispatch(cli: &Cli, out: &mut Out) -> Result<i32, Failure> {
    let decider = Decider::new(cli.cap);
    match &cli.command {
        Command::Parse { formula: text } => {
            let f = formula(text)?;
            out.kv("formula", &f, &f);
            out.machine("depth", f.depth());
            out.machine("size", f.size());
            Ok(0)
        }
        Command::Decide { formula: text, premises } => {
            let f = formula(text)?;
            if premises.is_empty() {
                let v = decider.is_tautology(&f)?;
                Ok(verdict(out, &v, "TAUTOLOGY"))
            } else {
                let v = decider.entails(&formulas(premises)?, &f)?;
                Ok(verdict(out, &v, "ENTAILED"))
            }
        }
        Command::Table { formulas: texts } => {
            let fs: Vec<Formula> = texts.iter().map(|t| formula(t)).collect::<Result<_, _>>()?;
            let table = decider.truth_table(&fs)?;
            match out.format {
                Format::Text => out.text.push_str(&table.to_string()),
                Format::Machine => {
                    out.machine("columns", table.headers.join(","));
                    out.machine("atoms", table.atom_columns);
                    for row in &table.rows {
                        let cells: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
                        out.machine("row", cells.join(","));
                    }
                }
            }
            out.machine("rows", table.rows.len());
            Ok(0)
        }
        Command::ProveCheck { file } => {
            let d = parse_derivation(&read(file)?)?;
            match d.check() {
                Check::Valid => {
                    out.kv("valid", "true", "VALID");
                    if let Some(c) = d.conclusion() {
                        out.machine("conclusion", c);
                    }
                    Ok(0)
                }
                Check::Invalid { line, reason } => {
                    out.kv("valid", "false", format!("INVALID line {line}: {reason}"));
                    out.machine("line", line);
                    out.machine("reason", reason);
                    Ok(1)
                }
            }
        }
        Command::Deduce { file, hypothesis } => {
            let d = parse_derivation(&read(file)?)?;
            let h = formula(hypothesis)?;
            let result = deduction_transform(&d, &h)?;
            match out.format {
                Format::Text => out.text.push_str(&write_derivation(&result)),
                Format::Machine => {
                    out.machine("lines", result.lines.len());
                    if let Some(c) = result.conclusion() {
                        out.machine("conclusion", c);
                    }
                }
            }
            Ok(0)
        }
        Command::Prob { dist, formula: text } => {
            let d = distribution(dist)?;
            let p = d.prob(&formula(text)?)?;
            out.kv("prob", &p, &p);
            Ok(0)
        }
        Command::Cond { dist, target, given } => {
            let d = distribution(dist)?;
            let p = d.conditional(&formula(target)?, &formula(given)?)?;
            out.kv("cond", &p, &p);
            Ok(0)
        }
        Command::Total { dist, alpha, beta } => {
            let d = distribution(dist)?;
            let t = d.total_probability(&formula(alpha)?, &formula(beta)?)?;
            let rows = [
                ("beta", "P(b)", &t.beta),
                ("beta_and_alpha", "P(b & a)", &t.beta_and_alpha),
                ("beta_and_not_alpha", "P(b & ~a)", &t.beta_and_not_alpha),
                ("beta_and_undet_alpha", "P(b & #a)", &t.beta_and_undet_alpha),
                ("beta_and_overlap", "P(b & (a | ~a) & #a)", &t.beta_and_overlap),
            ];
            for (key, label, v) in rows {
                out.kv(key, v, format!("{label} = {v}"));
            }
            let holds = flag(t.identity_holds);
            out.kv("identity_holds", holds, format!("identity holds: {holds}"));
            Ok(if t.identity_holds { 0 } else { 1 })
        }
        Command::Bayes { dist, alpha, beta } => {
            let d = distribution(dist)?;
            let r = d.bayes(&formula(alpha)?, &formula(beta)?)?;
            writeln!(out.text, "{r}").expect("writing to a string");
            Ok(0)
        }
        Command::Audit { file } => {
            let parsed = parse_assignment(&read(file)?)?;
            let report = Auditor::new(decider).audit(&parsed.assignment)?;
            out.kv("clean", flag(report.is_clean()), &report);
            if out.format == Format::Machine {
                for v in &report.violations {
                    out.machine("violation", v);
                }
            }
            Ok(if report.is_clean() { 0 } else { 1 })
        }
        Command::Coherence { file } => {
            let parsed = parse_assignment(&read(file)?)?;
            match coherence(&parsed.assignment, &parsed.universe, &decider)? {
                Coherence::Feasible(d) => {
                    out.kv("feasible", "true", "FEASIBLE");
                    match out.format {
                        Format::Text => out.text.push_str(&write_distribution(&d)),
                        Format::Machine => {
                            for (w, p) in d.weights() {
                                out.machine("world", format!("{w} weight {p}"));
                            }
                        }
                    }
                    Ok(0)
                }
                Coherence::Infeasible => {
                    out.kv("feasible", "false", "INFEASIBLE");
                    Ok(1)
                }
            }
        }
        Command::PEntails { formula: text, premises } => {
            let holds = p_entails(&formulas(premises)?, &formula(text)?, &decider)?;
            out.kv(
                "p_entails",
                flag(holds),
                if holds { "P-ENTAILED" } else { "NOT P-ENTAILED" },
            );
            Ok(if holds { 0 } else { 1 })
        }
        Command::SpaceCheck { file } => {
            let parsed = parse_space(&read(file)?)?;
            let sigma = is_sigma_algebra(&parsed.algebra);
            let valid = match parsed.space() {
                Some(space) => {
                    let report = validate_space(&space);
                    out.text(&report);
                    report_machine(out, report.is_valid(), &report.to_string());
                    report.is_valid()
                }
                None => {
                    let report = validate_sigma_p(&parsed.algebra);
                    out.text(&report);
                    report_machine(out, report.is_valid(), &report.to_string());
                    report.is_valid()
                }
            };
            out.kv(
                "sigma_algebra",
                flag(sigma),
                format!("sigma-algebra: {}", if sigma { "yes" } else { "no" }),
            );
            Ok(if valid { 0 } else { 1 })
        }
    }
}

fn report_machine(out: &mut Out, valid: bool, rendered: &str) {
    out.machine("valid", flag(valid));
    for line in rendered.lines().skip(1) {
        out.machine("violation", line);
    }
}

