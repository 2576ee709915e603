//! Recursive descent parser for the formula grammar:
//!
//! ```text
//! formula := imp
//! imp     := or ("->" imp)?
//! or      := and ("|" and)*
//! and     := unary ("&" unary)*
//! unary   := ("~" | "#") unary | ident | "(" formula ")"
//! ```
//!
//! Whitespace is insignificant and `//` starts a comment running to the end
//! of the line.

use std::fmt;

use super::Formula;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset of the offending token (or of end of input).
    pub offset: usize,
    pub found: String,
    pub expected: Vec<&'static str>,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at byte {}: found {}, expected one of {}",
            self.offset,
            self.found,
            self.expected.join(", ")
        )
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Neg,
    Undet,
    And,
    Or,
    Imp,
    LParen,
    RParen,
    Eof,
    Bad(char),
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(name) => format!("identifier `{name}`"),
            Tok::Neg => "`~`".into(),
            Tok::Undet => "`#`".into(),
            Tok::And => "`&`".into(),
            Tok::Or => "`|`".into(),
            Tok::Imp => "`->`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Eof => "end of input".into(),
            Tok::Bad(c) => format!("unexpected character `{c}`"),
        }
    }
}

fn tokenize(text: &str) -> Vec<(usize, Tok)> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'/' if bytes.get(i + 1) == Some(&b'/') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b'~' => {
                toks.push((i, Tok::Neg));
                i += 1;
            }
            b'#' => {
                toks.push((i, Tok::Undet));
                i += 1;
            }
            b'&' => {
                toks.push((i, Tok::And));
                i += 1;
            }
            b'|' => {
                toks.push((i, Tok::Or));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'>') => {
                toks.push((i, Tok::Imp));
                i += 2;
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                toks.push((start, Tok::Ident(text[start..i].to_string())));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                toks.push((i, Tok::Bad(ch)));
                // Stop at the first bad character; the parser reports it.
                toks.push((text.len(), Tok::Eof));
                return toks;
            }
        }
    }
    toks.push((text.len(), Tok::Eof));
    toks
}

const OPERAND: [&str; 4] = ["identifier", "`~`", "`#`", "`(`"];

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn bump(&mut self) {
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
    }

    fn error(&self, expected: &[&'static str]) -> ParseError {
        let (offset, tok) = &self.toks[self.pos];
        ParseError {
            offset: *offset,
            found: tok.describe(),
            expected: expected.to_vec(),
        }
    }

    fn imp(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.or()?;
        if *self.peek() == Tok::Imp {
            self.bump();
            let rhs = self.imp()?;
            return Ok(Formula::imp(lhs, rhs));
        }
        Ok(lhs)
    }

    fn or(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.and()?;
        while *self.peek() == Tok::Or {
            self.bump();
            let rhs = self.and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn and(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while *self.peek() == Tok::And {
            self.bump();
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        match self.peek().clone() {
            Tok::Neg => {
                self.bump();
                Ok(Formula::neg(self.unary()?))
            }
            Tok::Undet => {
                self.bump();
                Ok(Formula::undet(self.unary()?))
            }
            Tok::Ident(name) => {
                self.bump();
                Ok(Formula::Var(name))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.imp()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error(&["`&`", "`|`", "`->`", "`)`"]));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error(&OPERAND)),
        }
    }
}

/// Parses a single formula; trailing input is an error.
pub fn parse(text: &str) -> Result<Formula, ParseError> {
    let mut parser = Parser {
        toks: tokenize(text),
        pos: 0,
    };
    let f = parser.imp()?;
    if *parser.peek() != Tok::Eof {
        return Err(parser.error(&["`&`", "`|`", "`->`", "end of input"]));
    }
    Ok(f)
}
