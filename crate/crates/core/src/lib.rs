//! Exact computations with Lie superalgebras, their enveloping algebras and
//! Whittaker modules over a field of rational functions in named parameters.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod field;
pub mod linalg;
pub mod nilpotent;
pub mod pbw;
pub mod poly;
pub mod roots;
pub mod whittaker;

pub use algebra::{sl_super, LieElement, LieSuperalgebra, Parity};
pub use error::{Error, Identity, Result};
pub use field::{FieldElement, ParamSet};
pub use linalg::Matrix;
pub use pbw::{EnvelopingElement, PbwMonomial};
pub use poly::Poly;
pub use roots::{parabolic_pieces, ParabolicPieces, RootDatum, WhittakerDatum};
pub use nilpotent::{Character, FiniteModule};
pub use whittaker::{BasisIndex, Certificate, ModuleVector, Solution, WhittakerModule};
