//! Rational-function expressions over named parameters.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' integer)?
//! atom  := integer | name | '(' expr ')'
//! ```
//!
//! This reads back everything `FieldElement::to_string_with` prints.

use superwhit_core::{FieldElement, ParamSet};

use crate::FormatError;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Name(String),
    Op(char),
}

fn lex(src: &str) -> Result<Vec<Tok>, FormatError> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        if ch.is_whitespace() {
            chars.next();
        } else if ch.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !c.is_ascii_digit() {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            let n = src[pos..end]
                .parse()
                .map_err(|_| FormatError::Expr(src.into(), "integer literal too large".into()))?;
            out.push(Tok::Int(n));
        } else if ch.is_alphabetic() || ch == '_' {
            let mut end = pos;
            while let Some(&(i, c)) = chars.peek() {
                if !(c.is_alphanumeric() || c == '_') {
                    break;
                }
                end = i + c.len_utf8();
                chars.next();
            }
            out.push(Tok::Name(src[pos..end].into()));
        } else if "+-*/^()".contains(ch) {
            out.push(Tok::Op(ch));
            chars.next();
        } else {
            return Err(FormatError::Expr(src.into(), format!("unexpected character `{ch}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<Tok>,
    pos: usize,
    params: &'a ParamSet,
}

impl Parser<'_> {
    fn err(&self, msg: impl Into<String>) -> FormatError {
        FormatError::Expr(self.src.into(), msg.into())
    }

    fn peek_op(&self) -> Option<char> {
        match self.toks.get(self.pos) {
            Some(Tok::Op(c)) => Some(*c),
            _ => None,
        }
    }

    fn expr(&mut self) -> Result<FieldElement, FormatError> {
        let mut acc = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { &acc + &rhs } else { &acc - &rhs };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<FieldElement, FormatError> {
        let mut acc = self.unary()?;
        while let Some(op @ ('*' | '/')) = self.peek_op() {
            self.pos += 1;
            let rhs = self.unary()?;
            acc = if op == '*' {
                &acc * &rhs
            } else {
                let inv = rhs.inv().ok_or_else(|| self.err("division by zero"))?;
                &acc * &inv
            };
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<FieldElement, FormatError> {
        if self.peek_op() == Some('-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        let base = self.atom()?;
        if self.peek_op() == Some('^') {
            self.pos += 1;
            match self.toks.get(self.pos) {
                Some(Tok::Int(e)) => {
                    self.pos += 1;
                    let e = u32::try_from(*e).map_err(|_| self.err("exponent too large"))?;
                    return Ok(base.pow(e));
                }
                _ => return Err(self.err("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldElement, FormatError> {
        let tok = self.toks.get(self.pos).cloned();
        self.pos += 1;
        match tok {
            Some(Tok::Int(n)) => Ok(FieldElement::from_int(n)),
            Some(Tok::Name(n)) => self
                .params
                .var(&n)
                .ok_or_else(|| self.err(format!("unknown parameter `{n}`"))),
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                if self.peek_op() != Some(')') {
                    return Err(self.err("missing `)`"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of expression")),
        }
    }
}

/// Parse an expression whose variables must be declared in `params`.
pub fn parse_field(src: &str, params: &ParamSet) -> Result<FieldElement, FormatError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0, params };
    if p.toks.is_empty() {
        return Err(p.err("empty expression"));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Parse `name=expr,name=expr,...` into ordered pairs.
pub fn parse_assignments(src: &str, params: &ParamSet) -> Result<Vec<(String, FieldElement)>, FormatError> {
    let mut out: Vec<(String, FieldElement)> = Vec::new();
    for part in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| FormatError::Expr(part.into(), "expected `name=value`".into()))?;
        let name = name.trim().to_string();
        if out.iter().any(|(n, _)| *n == name) {
            return Err(FormatError::Expr(src.into(), format!("`{name}` assigned twice")));
        }
        out.push((name, parse_field(value, params)?));
    }
    Ok(out)
}
