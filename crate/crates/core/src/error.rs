use alloc::string::String;
use alloc::vec::Vec;

/// Which superalgebra axiom a structure-constant table violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    Antisymmetry,
    Jacobi,
    Grading,
}

impl core::fmt::Display for Identity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Identity::Antisymmetry => "super-antisymmetry",
            Identity::Jacobi => "super-Jacobi",
            Identity::Grading => "grading",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{identity} violated at ({})", witness.join(", "))]
    AxiomViolation { identity: Identity, witness: Vec<String> },

    #[error("unknown basis label `{0}`")]
    UnknownLabel(String),

    #[error("duplicate basis label `{0}`")]
    DuplicateLabel(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("elements belong to different algebras")]
    AlgebraMismatch,

    #[error("expected a linear combination of basis elements")]
    NotDegreeOne,

    #[error("`{0}` is not an ad-eigenvector of the Cartan generators")]
    NotAdEigenbasis(String),

    #[error("Cartan generators do not commute")]
    CartanNotAbelian,

    #[error("invalid root datum: {0}")]
    InvalidRootDatum(String),

    #[error("character violates the admissibility conditions: {0}")]
    NotInL(String),

    #[error("parameter `{0}` must be invertible")]
    ParameterNotInvertible(String),

    #[error("window {window} too small: solution dimension grew from {previous} to {current}")]
    WindowTooSmall { window: usize, previous: usize, current: usize },

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("inconsistent reduction rules: {0}")]
    InconsistentRules(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
