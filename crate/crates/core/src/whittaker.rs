//! The induced Whittaker module of sl(1,2) with basis `y2^k y3^l h^m w`
//! (`k, l ∈ {0, 1}`), for a character with `x1 ↦ a` and central character
//! `C ↦ b`, `z ↦ c`.
//!
//! At the cyclic vector: `x1 w = a w`, `x2 w = x3 w = 0`, `z w = c w` and
//! `y1 w = (b - h^2 - 2h)/(4a) w`, the last forced by `C = 4 y1 x1 + h^2 + 2h`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_rational::BigRational;

use crate::algebra::{sl_super, LieSuperalgebra};
use crate::error::{Error, Result};
use crate::field::{FieldElement, ParamSet};
use crate::linalg::{echelon_basis, in_span, Matrix};
use crate::pbw::EnvelopingElement;
use crate::roots::{RootDatum, Weight};

/// `y2^k y3^l h^m w`; ordered lexicographically by `(k, l, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisIndex {
    pub k: u8,
    pub l: u8,
    pub m: u32,
}

impl BasisIndex {
    pub fn new(k: u8, l: u8, m: u32) -> Self {
        assert!(k <= 1 && l <= 1, "odd exponents are 0 or 1");
        BasisIndex { k, l, m }
    }

    /// Drop in z-weight below the cyclic vector.
    pub fn mu(&self) -> u32 {
        (self.k + self.l) as u32
    }

    pub fn to_text(&self) -> String {
        let mut parts = Vec::new();
        if self.k == 1 {
            parts.push(String::from("y2"));
        }
        if self.l == 1 {
            parts.push(String::from("y3"));
        }
        match self.m {
            0 => {}
            1 => parts.push(String::from("h")),
            m => parts.push(format!("h^{}", m)),
        }
        parts.push(String::from("w"));
        parts.join(" ")
    }
}

/// Every basis index with h-degree at most `window`, in basis order.
pub fn window_basis(window: u32) -> Vec<BasisIndex> {
    let mut out = Vec::new();
    for k in 0..2 {
        for l in 0..2 {
            for m in 0..=window {
                out.push(BasisIndex::new(k, l, m));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ModuleVector {
    coeffs: BTreeMap<BasisIndex, FieldElement>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(i: BasisIndex) -> Self {
        Self::term(i, FieldElement::one())
    }

    pub fn term(i: BasisIndex, c: FieldElement) -> Self {
        let mut v = Self::zero();
        v.add_term(i, c);
        v
    }

    /// The cyclic vector `w`.
    pub fn cyclic() -> Self {
        Self::basis(BasisIndex::new(0, 0, 0))
    }

    pub fn add_term(&mut self, i: BasisIndex, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&i) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, sum);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: &BasisIndex) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisIndex, &FieldElement)> {
        self.coeffs.iter()
    }

    pub fn max_h_degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|i| i.m).max()
    }

    pub fn add(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        for (i, c) in &other.coeffs {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &ModuleVector) -> ModuleVector {
        self.add(&other.scale(&FieldElement::from_int(-1)))
    }

    pub fn scale(&self, s: &FieldElement) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (i, c) in &self.coeffs {
            out.add_term(*i, c * s);
        }
        out
    }

    /// Substitute parameter values; `None` at a pole.
    pub fn specialize(&self, values: &[Option<BigRational>]) -> Option<ModuleVector> {
        let mut out = ModuleVector::zero();
        for (i, c) in &self.coeffs {
            out.add_term(*i, c.specialize(values)?);
        }
        Some(out)
    }

    /// `coeff * y2 y3 h^m w + ...` in basis order.
    pub fn to_text(&self, params: &ParamSet) -> String {
        if self.coeffs.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (i, c)) in self.coeffs.iter().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            let cs = c.to_string_with(params);
            if cs.contains(' ') {
                write!(out, "({})", cs).unwrap();
            } else {
                out.push_str(&cs);
            }
            write!(out, " * {}", i.to_text()).unwrap();
        }
        out
    }

    fn coords(&self, basis: &[BasisIndex]) -> Vec<FieldElement> {
        basis.iter().map(|i| self.coeff(i)).collect()
    }

    fn from_coords(basis: &[BasisIndex], coords: &[FieldElement]) -> ModuleVector {
        let mut v = ModuleVector::zero();
        for (i, c) in basis.iter().zip(coords) {
            v.add_term(*i, c.clone());
        }
        v
    }
}

/// Polynomials in `h`, ascending coefficients.
type HPoly = Vec<FieldElement>;

fn hpoly_mul(p: &[FieldElement], q: &[FieldElement]) -> HPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElement::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] = &out[i + j] + &(a * b);
        }
    }
    out
}

/// `(h + s)^m`.
fn hpoly_linear_pow(s: i64, m: u32) -> HPoly {
    let mut out = vec![FieldElement::one()];
    for _ in 0..m {
        out = hpoly_mul(&out, &[FieldElement::from_int(s), FieldElement::one()]);
    }
    out
}

/// `p(h + s)`.
fn hpoly_shift(p: &[FieldElement], s: i64) -> HPoly {
    let mut out: HPoly = Vec::new();
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = hpoly_linear_pow(s, i as u32);
        if out.len() < t.len() {
            out.resize(t.len(), FieldElement::zero());
        }
        for (j, tj) in t.iter().enumerate() {
            out[j] = &out[j] + &(c * tj);
        }
    }
    out
}

#[derive(Clone, Copy, Debug)]
struct Gens {
    y2: usize,
    y3: usize,
    y1: usize,
    h: usize,
    z: usize,
    x1: usize,
    x2: usize,
    x3: usize,
}

/// Reference identities on the four even Whittaker generators
/// `w1 = w, w2 = y2 w, w3 = y2 y3 w, w4 = 2a y3 w + y2 h w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionIdentity {
    pub name: String,
    pub computed: ModuleVector,
    pub expected: ModuleVector,
}

impl ActionIdentity {
    pub fn holds(&self) -> bool {
        self.computed == self.expected
    }
}

/// A solution space computed inside a window of h-degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub window: u32,
    pub basis: Vec<ModuleVector>,
}

impl Solution {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Membership via the echelon basis.
    pub fn contains(&self, v: &ModuleVector) -> bool {
        let b = window_basis(self.window.max(v.max_h_degree().unwrap_or(0)));
        let rows: Vec<Vec<FieldElement>> = self.basis.iter().map(|u| u.coords(&b)).collect();
        if v.terms().any(|(i, _)| !b.contains(i)) {
            return false;
        }
        in_span(&rows, &v.coords(&b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The even Whittaker space is complete in the window and the full
    /// Whittaker space is spanned by `witness`.
    Simple { witness: ModuleVector, window: u32 },
    /// A vector of z-weight drop `mu` killed by `x2` and `x3`.
    NotSimple { mu: u32, vector: ModuleVector },
    Inconclusive { window: u32 },
}

impl Certificate {
    pub fn name(&self) -> &'static str {
        match self {
            Certificate::Simple { .. } => "Simple",
            Certificate::NotSimple { .. } => "NotSimple",
            Certificate::Inconclusive { .. } => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug)]
pub struct WhittakerModule {
    g: LieSuperalgebra,
    params: ParamSet,
    a: FieldElement,
    b: FieldElement,
    c: FieldElement,
    gens: Gens,
    /// y1 w = r(h) w.
    r: HPoly,
    /// Normal forms of `x y2^k y3^l`, indexed `[x][2k + l]`.
    heads: Vec<Vec<EnvelopingElement>>,
    /// Generators forced to act by zero (synthetic controls only).
    masked: Vec<usize>,
}

impl WhittakerModule {
    /// Generic parameters: `a`, `b`, `c` are indeterminates.
    pub fn symbolic() -> Result<WhittakerModule> {
        let params = ParamSet::new(["a", "b", "c"]);
        let v = |n: &str| params.var(n).expect("declared");
        let (a, b, c) = (v("a"), v("b"), v("c"));
        Self::new(params, a, b, c)
    }

    /// Exact rational parameters.
    pub fn specialized(a: BigRational, b: BigRational, c: BigRational) -> Result<WhittakerModule> {
        Self::new(
            ParamSet::empty(),
            FieldElement::from_rational(a),
            FieldElement::from_rational(b),
            FieldElement::from_rational(c),
        )
    }

    pub fn new(params: ParamSet, a: FieldElement, b: FieldElement, c: FieldElement) -> Result<WhittakerModule> {
        let inv4a = (&a * &FieldElement::from_int(4))
            .inv()
            .ok_or_else(|| Error::ParameterNotInvertible("a".into()))?;
        let g = sl_super(1, 2)?.with_params(params.clone());
        let ix = |l: &str| g.index(l).expect("sl(1,2) label");
        let gens = Gens {
            y2: ix("y2"),
            y3: ix("y3"),
            y1: ix("y1"),
            h: ix("h"),
            z: ix("z"),
            x1: ix("x1"),
            x2: ix("x2"),
            x3: ix("x3"),
        };
        let r = vec![&b * &inv4a, &FieldElement::from_int(-2) * &inv4a, -&inv4a];
        let heads = (0..g.dim())
            .map(|x| {
                (0..4)
                    .map(|kl| {
                        let mut word = vec![x];
                        if kl & 2 != 0 {
                            word.push(gens.y2);
                        }
                        if kl & 1 != 0 {
                            word.push(gens.y3);
                        }
                        g.normal_form(&word, FieldElement::one())
                    })
                    .collect()
            })
            .collect();
        let module = WhittakerModule { g, params, a, b, c, gens, r, heads, masked: Vec::new() };
        module.check_casimir()?;
        Ok(module)
    }

    /// The y1-rule must make the Casimir act on `w` by `b`.
    fn check_casimir(&self) -> Result<()> {
        let cas = self.g.casimir_sl2()?;
        let cw = self.act_enveloping(&cas, &ModuleVector::cyclic());
        if cw != ModuleVector::cyclic().scale(&self.b) {
            return Err(Error::InconsistentRules("C w != b w".into()));
        }
        Ok(())
    }

    /// A copy in which the listed generators act by zero. The result is not a
    /// module; it exists to exercise the negative branch of the certificate.
    pub fn with_zero_action(mut self, labels: &[&str]) -> Result<WhittakerModule> {
        for l in labels {
            let i = self.g.index(l)?;
            if !self.masked.contains(&i) {
                self.masked.push(i);
            }
        }
        Ok(self)
    }

    pub fn algebra(&self) -> &LieSuperalgebra {
        &self.g
    }

    pub fn params(&self) -> &ParamSet {
        &self.params
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    pub fn c(&self) -> &FieldElement {
        &self.c
    }

    /// Coefficient of `y2^k y3^l h^m w` in `e_{y2}^.. e_{x3}^t h^m w`, where
    /// `e` is a PBW exponent vector.
    fn reduce(&self, e: &[u32], coeff: &FieldElement, m: u32, out: &mut ModuleVector) {
        let gs = self.gens;
        if e[gs.x2] > 0 || e[gs.x3] > 0 {
            // x2 h = (h + 1) x2 and x3 h = (h - 1) x3, and both kill w.
            return;
        }
        let r = e[gs.x1];
        // x1 h = (h - 2) x1
        let mut p = hpoly_linear_pow(-2 * r as i64, m);
        let mut scalar = coeff * &self.a.pow(r);
        scalar = &scalar * &self.c.pow(e[gs.z]);
        let mut hj = vec![FieldElement::zero(); e[gs.h] as usize];
        hj.push(FieldElement::one());
        p = hpoly_mul(&p, &hj);
        for _ in 0..e[gs.y1] {
            // y1 p(h) w = p(h + 2) y1 w
            p = hpoly_mul(&hpoly_shift(&p, 2), &self.r);
        }
        let (k, l) = (e[gs.y2] as u8, e[gs.y3] as u8);
        for (deg, pc) in p.iter().enumerate() {
            out.add_term(BasisIndex::new(k, l, deg as u32), &scalar * pc);
        }
    }

    /// `x · (y2^k y3^l h^m w)`.
    pub fn act_basis(&self, x: usize, i: BasisIndex) -> ModuleVector {
        let mut out = ModuleVector::zero();
        if self.masked.contains(&x) {
            return out;
        }
        let head = &self.heads[x][(2 * i.k + i.l) as usize];
        for (mono, c) in head.terms() {
            self.reduce(mono.exponents(), c, i.m, &mut out);
        }
        out
    }

    /// `x · (y2^k y3^l h^m w)` by straightening the whole word first; an
    /// independent path used to cross-check [`Self::act_basis`].
    pub fn act_basis_by_normal_form(&self, x: usize, i: BasisIndex) -> ModuleVector {
        let mut out = ModuleVector::zero();
        if self.masked.contains(&x) {
            return out;
        }
        let gs = self.gens;
        let mut word = vec![x];
        word.extend(core::iter::repeat_n(gs.y2, i.k as usize));
        word.extend(core::iter::repeat_n(gs.y3, i.l as usize));
        word.extend(core::iter::repeat_n(gs.h, i.m as usize));
        for (mono, c) in self.g.normal_form(&word, FieldElement::one()).terms() {
            self.reduce(mono.exponents(), c, 0, &mut out);
        }
        out
    }

    pub fn act(&self, x: usize, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (i, c) in v.terms() {
            out = out.add(&self.act_basis(x, *i).scale(c));
        }
        out
    }

    pub fn act_label(&self, label: &str, v: &ModuleVector) -> Result<ModuleVector> {
        Ok(self.act(self.g.index(label)?, v))
    }

    /// Apply an element of U(g), rightmost generator first.
    pub fn act_enveloping(&self, u: &EnvelopingElement, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (mono, c) in u.terms() {
            let mut acc = v.clone();
            for &x in mono.word().iter().rev() {
                acc = self.act(x, &acc);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Basis indices grouped by z-weight drop `mu`: the z-eigenvalue on
    /// `(k, l, m)` is `c - k - l`.
    pub fn z_weight_spaces(&self, window: u32) -> BTreeMap<u32, Vec<BasisIndex>> {
        let mut out: BTreeMap<u32, Vec<BasisIndex>> = BTreeMap::new();
        for i in window_basis(window) {
            out.entry(i.mu()).or_default().push(i);
        }
        out
    }

    /// Kernel of the stacked operators on `cols`, as an echelon basis.
    fn kernel(&self, ops: &[(usize, Option<&FieldElement>)], cols: &[BasisIndex]) -> Vec<ModuleVector> {
        let images: Vec<Vec<ModuleVector>> = ops
            .iter()
            .map(|(x, shift)| {
                cols.iter()
                    .map(|&i| {
                        let v = self.act_basis(*x, i);
                        match shift {
                            Some(s) => v.sub(&ModuleVector::term(i, (*s).clone())),
                            None => v,
                        }
                    })
                    .collect()
            })
            .collect();
        self.solve_images(&images, cols.len())
            .iter()
            .map(|k| ModuleVector::from_coords(cols, k))
            .collect()
    }

    /// Null space of the linear map whose column `j` has images `images[op][j]`.
    fn solve_images(&self, images: &[Vec<ModuleVector>], ncols: usize) -> Vec<Vec<FieldElement>> {
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        for per_op in images {
            let mut out_index: BTreeMap<BasisIndex, usize> = BTreeMap::new();
            for v in per_op {
                for (i, _) in v.terms() {
                    let n = out_index.len();
                    out_index.entry(*i).or_insert(n);
                }
            }
            let base = rows.len();
            rows.extend((0..out_index.len()).map(|_| vec![FieldElement::zero(); ncols]));
            for (j, v) in per_op.iter().enumerate() {
                for (i, c) in v.terms() {
                    rows[base + out_index[i]][j] = c.clone();
                }
            }
        }
        let kernel = if rows.is_empty() {
            (0..ncols).map(|j| Matrix::identity(ncols).column(j)).collect()
        } else {
            Matrix::from_rows(rows).kernel()
        };
        echelon_basis(&kernel, ncols)
    }

    fn even_in_window(&self, window: u32, a: &FieldElement) -> Vec<ModuleVector> {
        self.kernel(&[(self.gens.x1, Some(a))], &window_basis(window))
    }

    fn check_window(&self, window: u32, a: &FieldElement) -> Result<Vec<ModuleVector>> {
        if window == 0 {
            return Err(Error::InvalidInput("window must be at least 1".into()));
        }
        let previous = self.even_in_window(window - 1, a).len();
        let current = self.even_in_window(window, a);
        if current.len() > previous {
            return Err(Error::WindowTooSmall { window: window as usize, previous, current: current.len() });
        }
        Ok(current)
    }

    /// Vectors of h-degree at most `window` on which `x1` acts by `a`.
    pub fn whittaker_space_even(&self, window: u32) -> Result<Solution> {
        Ok(Solution { window, basis: self.check_window(window, &self.a)? })
    }

    /// Whittaker vectors for the character `x1 ↦ a`, `x2, x3 ↦ 0`.
    pub fn whittaker_space_full(&self, window: u32) -> Result<Solution> {
        self.whittaker_space_full_with(window, &self.a.clone())
    }

    /// As [`Self::whittaker_space_full`] but for the character `x1 ↦ psi_x1`.
    pub fn whittaker_space_full_with(&self, window: u32, psi_x1: &FieldElement) -> Result<Solution> {
        let even = self.check_window(window, psi_x1)?;
        let images: Vec<Vec<ModuleVector>> = [self.gens.x2, self.gens.x3]
            .iter()
            .map(|&x| even.iter().map(|v| self.act(x, v)).collect())
            .collect();
        let kernel = self.solve_images(&images, even.len());
        let vectors: Vec<ModuleVector> = kernel
            .iter()
            .map(|k| {
                even.iter()
                    .zip(k)
                    .fold(ModuleVector::zero(), |acc, (v, c)| acc.add(&v.scale(c)))
            })
            .collect();
        let cols = window_basis(window);
        let rows: Vec<Vec<FieldElement>> = vectors.iter().map(|v| v.coords(&cols)).collect();
        let basis = echelon_basis(&rows, cols.len())
            .iter()
            .map(|r| ModuleVector::from_coords(&cols, r))
            .collect();
        Ok(Solution { window, basis })
    }

    /// Vectors of z-weight drop `mu` killed by `x2` and `x3`.
    pub fn maximal_vectors(&self, mu: u32, window: u32) -> Result<Solution> {
        if mu == 0 {
            return Err(Error::InvalidInput("maximal vectors need a positive weight drop".into()));
        }
        let slice = self.z_weight_spaces(window).remove(&mu).unwrap_or_default();
        let basis = if slice.is_empty() {
            Vec::new()
        } else {
            self.kernel(&[(self.gens.x2, None), (self.gens.x3, None)], &slice)
        };
        Ok(Solution { window, basis })
    }

    /// Number of generalized factors predicted by the degree -1 part, and the
    /// weights of its exterior algebra.
    pub fn filtration_length(&self) -> Result<(usize, Vec<Weight>)> {
        let rd = RootDatum::sl12(&sl_super(1, 2)?)?;
        let p = rd.exterior_weights();
        Ok((p.len(), p))
    }

    /// Simple when the even Whittaker space is already complete in the window
    /// and the full Whittaker space is a line; NotSimple when a maximal
    /// vector exists in weight drop 1 or 2.
    pub fn simplicity_certificate(&self, window: u32) -> Result<Certificate> {
        for mu in 1..=2 {
            if let Some(v) = self.maximal_vectors(mu, window)?.basis.into_iter().next() {
                return Ok(Certificate::NotSimple { mu, vector: v });
            }
        }
        let (expected, _) = self.filtration_length()?;
        let even = match self.whittaker_space_even(window) {
            Ok(s) => s,
            Err(Error::WindowTooSmall { .. }) => return Ok(Certificate::Inconclusive { window }),
            Err(e) => return Err(e),
        };
        let full = self.whittaker_space_full(window)?;
        if even.dim() == expected && full.dim() == 1 {
            return Ok(Certificate::Simple { witness: full.basis[0].clone(), window });
        }
        Ok(Certificate::Inconclusive { window })
    }

    /// `w1 = w`, `w2 = y2 w`, `w3 = y2 y3 w`, `w4 = 2a y3 w + y2 h w`.
    pub fn even_whittaker_generators(&self) -> [ModuleVector; 4] {
        let e = |k, l, m| ModuleVector::basis(BasisIndex::new(k, l, m));
        let two_a = &FieldElement::from_int(2) * &self.a;
        [e(0, 0, 0), e(1, 0, 0), e(1, 1, 0), e(0, 1, 0).scale(&two_a).add(&e(1, 0, 1))]
    }

    /// The eight `x2`/`x3` actions on `w1..w4`, with right-hand sides as
    /// commonly stated.
    pub fn action_identities(&self) -> Vec<ActionIdentity> {
        let (a, b, c) = (&self.a, &self.b, &self.c);
        let q = FieldElement::from_int;
        let half = FieldElement::ratio(1, 2);
        let quarter = FieldElement::ratio(1, 4);
        let inv4a = (&q(4) * a).inv().expect("a invertible");
        let e = |k, l, m, s: FieldElement| ModuleVector::term(BasisIndex::new(k, l, m), s);
        let [w1, w2, w3, w4] = self.even_whittaker_generators();
        let expected = vec![
            ("x2 w1", ModuleVector::zero()),
            ("x3 w1", ModuleVector::zero()),
            ("x2 w2", e(0, 0, 0, &half * c).add(&e(0, 0, 1, half.clone()))),
            ("x3 w2", e(0, 0, 0, a.clone())),
            (
                "x2 w3",
                e(0, 1, 0, &(&half * c) - &q(1))
                    .add(&e(0, 1, 1, half.clone()))
                    .add(&e(1, 0, 0, -&(&inv4a * b)))
                    .add(&e(1, 0, 1, quarter.clone()))
                    .add(&e(1, 0, 2, inv4a.clone())),
            ),
            ("x3 w3", e(1, 0, 0, &q(1) - &(&half * c)).add(&w4.scale(&half))),
            ("x2 w4", e(0, 0, 0, &half * b).add(&e(0, 0, 1, &half * &(c - &q(1))))),
            ("x3 w4", e(0, 0, 0, a * &(c - &q(2)))),
        ];
        let (x2, x3) = (self.gens.x2, self.gens.x3);
        let lhs = [(x2, &w1), (x3, &w1), (x2, &w2), (x3, &w2), (x2, &w3), (x3, &w3), (x2, &w4), (x3, &w4)];
        expected
            .into_iter()
            .zip(lhs)
            .map(|((name, expected), (x, v))| ActionIdentity {
                name: name.into(),
                computed: self.act(x, v),
                expected,
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qq(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn cyclic_vector_relations() {
        let m = WhittakerModule::symbolic().unwrap();
        let w = ModuleVector::cyclic();
        assert_eq!(m.act_label("z", &w).unwrap(), w.scale(m.c()));
        assert_eq!(m.act_label("x1", &w).unwrap(), w.scale(m.a()));
        assert!(m.act_label("x2", &w).unwrap().is_zero());
        assert!(m.act_label("x3", &w).unwrap().is_zero());
    }

    #[test]
    fn two_action_paths_agree() {
        let m = WhittakerModule::symbolic().unwrap();
        for x in 0..8 {
            for i in window_basis(3) {
                assert_eq!(m.act_basis(x, i), m.act_basis_by_normal_form(x, i), "{x} {:?}", i);
            }
        }
    }

    #[test]
    fn zero_a_is_rejected() {
        let err = WhittakerModule::specialized(qq(0), qq(1), qq(1)).unwrap_err();
        assert_eq!(err, Error::ParameterNotInvertible("a".into()));
    }

    #[test]
    fn window_zero_and_one() {
        let m = WhittakerModule::specialized(qq(1), qq(3), qq(5)).unwrap();
        assert!(m.whittaker_space_even(0).is_err());
        assert_eq!(
            m.whittaker_space_even(1),
            Err(Error::WindowTooSmall { window: 1, previous: 3, current: 4 })
        );
        assert_eq!(m.whittaker_space_even(2).unwrap().dim(), 4);
    }

    #[test]
    fn text_form() {
        let m = WhittakerModule::symbolic().unwrap();
        let [_, _, _, w4] = m.even_whittaker_generators();
        assert_eq!(w4.to_text(m.params()), "2*a * y3 w + 1 * y2 h w");
    }
}
