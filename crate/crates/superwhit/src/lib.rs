//! File formats, reports and the command-line driver on top of
//! `superwhit-core`.

pub mod alg;
pub mod cli;
pub mod expr;
pub mod modfile;
pub mod report;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("in `{0}`: {1}")]
    Expr(String, String),

    #[error("unknown built-in algebra `{0}` (available: sl12)")]
    UnknownBuiltin(String),

    #[error(transparent)]
    Core(#[from] superwhit_core::Error),

    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}
