//! Finite-dimensional module tables, as printed by `FiniteModule::to_text`:
//!
//! ```text
//! dim: 2
//! grading: even odd
//! u: [0, t; 0, 0]
//! ```
//!
//! Generators without a line act by zero.

use superwhit_core::linalg::Matrix;
use superwhit_core::{FiniteModule, LieSuperalgebra, Parity};

use crate::expr::parse_field;
use crate::FormatError;

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

pub fn parse_module(src: &str, g: &LieSuperalgebra) -> Result<FiniteModule, FormatError> {
    let mut dim: Option<usize> = None;
    let mut grading: Option<Vec<Parity>> = None;
    let mut action: Vec<Option<Matrix>> = vec![None; g.dim()];
    for (n, raw) in src.lines().enumerate() {
        let line = n + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let (key, rest) = text.split_once(':').ok_or_else(|| line_err(line, "expected `key: value`"))?;
        let (key, rest) = (key.trim(), rest.trim());
        match key {
            "dim" => dim = Some(rest.parse().map_err(|_| line_err(line, "dimension must be an integer"))?),
            "grading" => {
                let g = rest
                    .split_whitespace()
                    .map(|w| match w {
                        "even" => Ok(Parity::Even),
                        "odd" => Ok(Parity::Odd),
                        _ => Err(line_err(line, format!("`{w}` is not a parity"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                grading = Some(g);
            }
            label => {
                let x = g.index(label).map_err(|e| line_err(line, e.to_string()))?;
                if action[x].is_some() {
                    return Err(line_err(line, format!("`{label}` given twice")));
                }
                let d = dim.ok_or_else(|| line_err(line, "`dim:` must come first"))?;
                let body = rest
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| line_err(line, "matrix must be written `[a, b; c, d]`"))?;
                let rows = body
                    .split(';')
                    .map(|r| r.split(',').map(|c| parse_field(c, g.params())).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                    return Err(line_err(line, format!("`{label}` is not {d}x{d}")));
                }
                action[x] = Some(Matrix::from_rows(rows));
            }
        }
    }
    let d = dim.ok_or_else(|| line_err(0, "missing `dim:` line"))?;
    let grading = grading.ok_or_else(|| line_err(0, "missing `grading:` line"))?;
    let action = action.into_iter().map(|m| m.unwrap_or_else(|| Matrix::zeros(d, d))).collect();
    Ok(FiniteModule::new(g, action, grading)?)
}
