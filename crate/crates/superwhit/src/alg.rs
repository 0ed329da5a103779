//! `.alg` algebra definition files; the grammar is in `docs/alg-format.md`.

use std::fmt::Write as _;

use superwhit_core::{FieldElement, LieSuperalgebra, ParamSet, Parity};

use crate::expr::parse_field;
use crate::FormatError;

type Entry = (String, String, Vec<(FieldElement, String)>);

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Split at top-level `+`/`-` signs, keeping each sign with its term.
fn split_terms(src: &str) -> Vec<(bool, &str)> {
    let mut out = Vec::new();
    let (mut depth, mut start, mut neg) = (0i32, 0usize, false);
    let mut prev_op = true;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && !prev_op => {
                out.push((neg, src[start..i].trim()));
                neg = ch == '-';
                start = i + 1;
                prev_op = true;
                continue;
            }
            '-' if depth == 0 && prev_op && src[start..i].trim().is_empty() => {
                neg = !neg;
                start = i + 1;
                continue;
            }
            _ => {}
        }
        if !ch.is_whitespace() {
            prev_op = matches!(ch, '*' | '/' | '^' | '(');
        }
    }
    out.push((neg, src[start..].trim()));
    out
}

/// Parse `coeff*label + ...` (or `0`) into coefficient/label pairs.
fn parse_rhs(
    src: &str,
    labels: &[String],
    params: &ParamSet,
    line: usize,
) -> Result<Vec<(FieldElement, String)>, FormatError> {
    if src.trim() == "0" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (neg, term) in split_terms(src) {
        if term.is_empty() {
            return Err(line_err(line, "empty term"));
        }
        let (coeff, label) = match term.rsplit_once('*') {
            Some((c, l)) => (parse_field(c, params)?, l.trim()),
            None => (FieldElement::one(), term),
        };
        if !labels.iter().any(|l| l == label) {
            return Err(line_err(line, format!("`{label}` is not a basis label")));
        }
        out.push((if neg { -coeff } else { coeff }, label.to_string()));
    }
    Ok(out)
}

fn words(rest: &str) -> Vec<String> {
    rest.split_whitespace().map(String::from).collect()
}

/// Parse and validate an algebra definition.
///
/// A bracket given in one order only is completed by super-antisymmetry;
/// when both orders are given they are checked against each other.
pub fn parse_alg(src: &str) -> Result<LieSuperalgebra, FormatError> {
    let mut params: Option<ParamSet> = None;
    let mut basis: Option<Vec<String>> = None;
    let mut odd: Vec<String> = Vec::new();
    let mut brackets: Vec<(usize, String, String, String)> = Vec::new();
    for (n, raw) in src.lines().enumerate() {
        let line = n + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some((lhs, rhs)) = text.split_once("->") {
            let pair = words(lhs);
            if pair.len() != 2 {
                return Err(line_err(line, "expected `lhs rhs -> value`"));
            }
            brackets.push((line, pair[0].clone(), pair[1].clone(), rhs.trim().to_string()));
        } else if let Some((key, rest)) = text.split_once(':') {
            match key.trim() {
                "params" if params.is_none() => params = Some(ParamSet::new(words(rest))),
                "basis" if basis.is_none() => basis = Some(words(rest)),
                "odd" => odd.extend(words(rest)),
                k @ ("params" | "basis") => return Err(line_err(line, format!("`{k}` given twice"))),
                k => return Err(line_err(line, format!("unknown header `{k}`"))),
            }
        } else {
            return Err(line_err(line, "expected a header or a bracket line"));
        }
    }
    let basis = basis.ok_or_else(|| line_err(0, "missing `basis:` line"))?;
    let params = params.unwrap_or_else(ParamSet::empty);
    for o in &odd {
        if !basis.contains(o) {
            return Err(FormatError::Core(superwhit_core::Error::UnknownLabel(o.clone())));
        }
    }
    let parity = |l: &str| if odd.iter().any(|o| o == l) { Parity::Odd } else { Parity::Even };

    let mut table: Vec<Entry> = Vec::new();
    for (line, lhs, rhs, value) in &brackets {
        for l in [lhs, rhs] {
            if !basis.contains(l) {
                return Err(line_err(*line, format!("`{l}` is not a basis label")));
            }
        }
        if table.iter().any(|(a, b, _)| a == lhs && b == rhs) {
            return Err(line_err(*line, format!("bracket [{lhs}, {rhs}] given twice")));
        }
        table.push((lhs.clone(), rhs.clone(), parse_rhs(value, &basis, &params, *line)?));
    }
    let given: Vec<(String, String)> = table.iter().map(|(a, b, _)| (a.clone(), b.clone())).collect();
    for (lhs, rhs, value) in table.clone() {
        if lhs == rhs || given.contains(&(rhs.clone(), lhs.clone())) {
            continue;
        }
        let sign = FieldElement::from_int(-parity(&lhs).sign(parity(&rhs)));
        let mirrored = value.iter().map(|(c, l)| (c * &sign, l.clone())).collect();
        table.push((rhs, lhs, mirrored));
    }
    let degrees = basis.iter().map(|l| parity(l)).collect();
    Ok(LieSuperalgebra::from_structure_constants(basis, degrees, params, &table)?)
}

/// Serialize an algebra; `parse_alg` reads the result back to an equal algebra.
pub fn to_alg_text(g: &LieSuperalgebra) -> String {
    let mut out = String::new();
    if !g.params().is_empty() {
        writeln!(out, "params: {}", g.params().names().join(" ")).unwrap();
    }
    writeln!(out, "basis: {}", g.labels().join(" ")).unwrap();
    let odd: Vec<&str> = g.odd_indices().into_iter().map(|i| g.label(i)).collect();
    if !odd.is_empty() {
        writeln!(out, "odd: {}", odd.join(" ")).unwrap();
    }
    for i in 0..g.dim() {
        for j in i..g.dim() {
            let e = g.bracket_basis(i, j);
            if e.is_zero() {
                continue;
            }
            let mut rhs = String::new();
            for (n, (k, c)) in e.terms().enumerate() {
                let neg = c.is_constant() && c.to_string_with(g.params()).starts_with('-');
                let abs = if neg { -c.clone() } else { c.clone() };
                rhs.push_str(match (n, neg) {
                    (0, false) => "",
                    (0, true) => "-",
                    (_, false) => " + ",
                    (_, true) => " - ",
                });
                let s = abs.to_string_with(g.params());
                match (abs.is_one(), abs.is_constant()) {
                    (true, _) => {}
                    (false, true) => write!(rhs, "{s}*").unwrap(),
                    (false, false) => write!(rhs, "({s})*").unwrap(),
                }
                rhs.push_str(g.label(k));
            }
            writeln!(out, "{} {} -> {rhs}", g.label(i), g.label(j)).unwrap();
        }
    }
    out
}

/// A built-in algebra by name.
pub fn builtin(name: &str) -> Result<LieSuperalgebra, FormatError> {
    match name {
        "sl12" | "sl(1,2)" => Ok(superwhit_core::sl_super(1, 2)?),
        _ => Err(FormatError::UnknownBuiltin(name.into())),
    }
}
