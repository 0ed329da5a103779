//! Z2-graded Lie superalgebras given by structure constants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::hash::{Hash, Hasher};

use crate::error::{Error, Identity, Result};
use crate::field::{FieldElement, ParamSet};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(bit: u32) -> Parity {
        if bit.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn plus(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }

    /// Koszul sign (-1)^{d(x)d(y)}.
    pub fn sign(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// A linear combination of basis elements, indexed by basis position.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<usize, FieldElement>,
}

impl LieElement {
    pub fn zero() -> Self {
        LieElement::default()
    }

    pub fn basis(i: usize) -> Self {
        LieElement::term(i, FieldElement::one())
    }

    pub fn term(i: usize, c: FieldElement) -> Self {
        let mut e = LieElement::zero();
        e.add_term(i, c);
        e
    }

    pub fn add_term(&mut self, i: usize, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&i) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&i);
        } else {
            self.terms.insert(i, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &FieldElement)> {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.terms.get(&i).cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &FieldElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, c) in self.terms() {
            out.add_term(i, c * s);
        }
        out
    }

    pub fn sub(&self, other: &LieElement) -> LieElement {
        self.add(&other.scale(&FieldElement::from_int(-1)))
    }
}

/// One nonzero entry `[lhs, rhs] = sum coeff * label` of a structure-constant table.
pub type TableEntry = (String, String, Vec<(FieldElement, String)>);

#[derive(Clone, Debug)]
pub struct LieSuperalgebra {
    labels: Vec<String>,
    parity: Vec<Parity>,
    table: Vec<Vec<LieElement>>,
    params: ParamSet,
    fingerprint: u64,
}

impl PartialEq for LieSuperalgebra {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.parity == other.parity && self.table == other.table
    }
}

impl LieSuperalgebra {
    /// Build and validate an algebra from labelled structure constants.
    /// Pairs missing from `table` bracket to zero.
    pub fn from_structure_constants(
        basis: Vec<String>,
        degrees: Vec<Parity>,
        params: ParamSet,
        table: &[TableEntry],
    ) -> Result<Self> {
        if basis.len() != degrees.len() {
            return Err(Error::InvalidInput(format!(
                "{} labels but {} degrees",
                basis.len(),
                degrees.len()
            )));
        }
        for (i, l) in basis.iter().enumerate() {
            if basis[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = basis.len();
        let find = |l: &str| {
            basis
                .iter()
                .position(|b| b == l)
                .ok_or_else(|| Error::UnknownLabel(l.into()))
        };
        let mut brackets = vec![vec![LieElement::zero(); n]; n];
        for (lhs, rhs, value) in table {
            let (i, j) = (find(lhs)?, find(rhs)?);
            let mut e = LieElement::zero();
            for (c, l) in value {
                e.add_term(find(l)?, c.clone());
            }
            brackets[i][j] = e;
        }
        Self::from_table(basis, degrees, params, brackets)
    }

    /// Build and validate an algebra from an index-based bracket table.
    pub fn from_table(
        labels: Vec<String>,
        parity: Vec<Parity>,
        params: ParamSet,
        table: Vec<Vec<LieElement>>,
    ) -> Result<Self> {
        let alg = Self::new_unchecked(labels, parity, params, table);
        alg.validate()?;
        Ok(alg)
    }

    fn new_unchecked(
        labels: Vec<String>,
        parity: Vec<Parity>,
        params: ParamSet,
        table: Vec<Vec<LieElement>>,
    ) -> Self {
        let mut h = Fnv::default();
        labels.hash(&mut h);
        parity.hash(&mut h);
        table.hash(&mut h);
        LieSuperalgebra { labels, parity, table, params, fingerprint: h.finish() }
    }

    /// Check grading, super-antisymmetry and the super-Jacobi identity on
    /// every basis pair and triple.
    pub fn validate(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let target = self.parity[i].plus(self.parity[j]);
                if self.table[i][j].terms().any(|(k, _)| self.parity[k] != target) {
                    return Err(self.violation(Identity::Grading, &[i, j]));
                }
                let sign = FieldElement::from_int(self.parity[i].sign(self.parity[j]));
                let sum = self.table[i][j].add(&self.table[j][i].scale(&sign));
                if !sum.is_zero() {
                    return Err(self.violation(Identity::Antisymmetry, &[i, j]));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let sign = FieldElement::from_int(self.parity[i].sign(self.parity[j]));
                for k in 0..n {
                    let lhs = self.bracket_lie(&LieElement::basis(i), &self.table[j][k]);
                    let first = self.bracket_lie(&self.table[i][j], &LieElement::basis(k));
                    let second = self.bracket_lie(&LieElement::basis(j), &self.table[i][k]);
                    if lhs != first.add(&second.scale(&sign)) {
                        return Err(self.violation(Identity::Jacobi, &[i, j, k]));
                    }
                }
            }
        }
        Ok(())
    }

    fn violation(&self, identity: Identity, idx: &[usize]) -> Error {
        Error::AxiomViolation {
            identity,
            witness: idx.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parity
    }

    pub fn even_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| !self.parity[i].is_odd()).collect()
    }

    pub fn odd_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.parity[i].is_odd()).collect()
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    /// Same algebra, coefficients printed with a different parameter set.
    pub fn with_params(mut self, params: ParamSet) -> Self {
        self.params = params;
        self
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &LieElement {
        &self.table[i][j]
    }

    /// Bilinear extension of the bracket table.
    pub fn bracket_lie(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut out = LieElement::zero();
        for (i, a) in x.terms() {
            for (j, b) in y.terms() {
                let ab = a * b;
                for (k, c) in self.table[i][j].terms() {
                    out.add_term(k, &ab * c);
                }
            }
        }
        out
    }

    /// The nonzero entries of the bracket table, in basis order.
    pub fn export_table(&self) -> Vec<TableEntry> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                let e = &self.table[i][j];
                if e.is_zero() {
                    continue;
                }
                let value = e.terms().map(|(k, c)| (c.clone(), self.labels[k].clone())).collect();
                out.push((self.labels[i].clone(), self.labels[j].clone(), value));
            }
        }
        out
    }

    /// The same algebra with its basis permuted: new position `p` holds old
    /// basis element `order[p]`.
    pub fn reordered(&self, order: &[usize]) -> Result<Self> {
        let n = self.dim();
        let mut seen = vec![false; n];
        for &o in order {
            if o >= n || core::mem::replace(&mut seen[o], true) {
                return Err(Error::InvalidInput("order is not a permutation".into()));
            }
        }
        if order.len() != n {
            return Err(Error::InvalidInput("order is not a permutation".into()));
        }
        let mut new_pos = vec![0; n];
        for (p, &o) in order.iter().enumerate() {
            new_pos[o] = p;
        }
        let remap = |e: &LieElement| {
            let mut out = LieElement::zero();
            for (k, c) in e.terms() {
                out.add_term(new_pos[k], c.clone());
            }
            out
        };
        let table = order
            .iter()
            .map(|&i| order.iter().map(|&j| remap(&self.table[i][j])).collect())
            .collect();
        Ok(Self::new_unchecked(
            order.iter().map(|&i| self.labels[i].clone()).collect(),
            order.iter().map(|&i| self.parity[i]).collect(),
            self.params.clone(),
            table,
        ))
    }
}

/// Basis labels of sl(1,2) in PBW order: negative odd, negative even,
/// Cartan, positive even, positive odd.
pub const SL12_LABELS: [&str; 8] = ["y2", "y3", "y1", "h", "z", "x1", "x2", "x3"];

/// The 3x3 supermatrices realising the sl(1,2) basis, with row/column 0
/// even and rows/columns 1, 2 odd. `z` is the central element of the even
/// part, normalised so that `[x2, y2] = (z + h)/2`.
pub fn sl12_matrices() -> Vec<(&'static str, Parity, Matrix)> {
    let e = |i: usize, j: usize| {
        let mut m = Matrix::zeros(3, 3);
        m[(i, j)] = FieldElement::one();
        m
    };
    let diag = |d: [i64; 3]| {
        let mut m = Matrix::zeros(3, 3);
        for (i, v) in d.into_iter().enumerate() {
            m[(i, i)] = FieldElement::from_int(v);
        }
        m
    };
    vec![
        ("y2", Parity::Odd, e(1, 0)),
        ("y3", Parity::Odd, e(2, 0)),
        ("y1", Parity::Even, e(2, 1)),
        ("h", Parity::Even, diag([0, 1, -1])),
        ("z", Parity::Even, diag([2, 1, 1])),
        ("x1", Parity::Even, e(1, 2)),
        ("x2", Parity::Odd, e(0, 1)),
        ("x3", Parity::Odd, e(0, 2)),
    ]
}

/// Super-commutator XY - (-1)^{|X||Y|} YX of homogeneous supermatrices.
pub fn supercommutator(x: &Matrix, px: Parity, y: &Matrix, py: Parity) -> Matrix {
    let sign = FieldElement::from_int(px.sign(py));
    x.mul(y).sub(&y.mul(x).scale(&sign))
}

/// The special linear superalgebra sl(m, n); only (1, 2) is built in.
/// Structure constants are read off the matrix super-commutators.
pub fn sl_super(m: usize, n: usize) -> Result<LieSuperalgebra> {
    if (m, n) != (1, 2) {
        return Err(Error::Unsupported(format!("sl({m},{n}) is not built in")));
    }
    let mats = sl12_matrices();
    let flat = |m: &Matrix| -> Vec<FieldElement> {
        (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).map(|ij| m[ij].clone()).collect()
    };
    let basis_cols: Vec<Vec<FieldElement>> = mats.iter().map(|(_, _, m)| flat(m)).collect();
    let coords = Matrix::from_columns(&basis_cols, 9);
    let k = mats.len();
    let mut table = vec![vec![LieElement::zero(); k]; k];
    for (i, (_, pi, mi)) in mats.iter().enumerate() {
        for (j, (_, pj, mj)) in mats.iter().enumerate() {
            let sc = supercommutator(mi, *pi, mj, *pj);
            let c = coords
                .solve(&flat(&sc))
                .ok_or_else(|| Error::InvalidInput("supercommutator leaves the span".into()))?;
            let mut e = LieElement::zero();
            for (idx, v) in c.into_iter().enumerate() {
                e.add_term(idx, v);
            }
            table[i][j] = e;
        }
    }
    LieSuperalgebra::from_table(
        mats.iter().map(|(l, _, _)| String::from(*l)).collect(),
        mats.iter().map(|(_, p, _)| *p).collect(),
        ParamSet::empty(),
        table,
    )
}

#[derive(Default)]
struct Fnv(u64);

impl Hasher for Fnv {
    fn finish(&self) -> u64 {
        self.0
    }

    fn write(&mut self, bytes: &[u8]) {
        let mut h = if self.0 == 0 { 0xcbf2_9ce4_8422_2325 } else { self.0 };
        for b in bytes {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        self.0 = h;
    }
}
