//! Super-PBW normal forms in the universal enveloping algebra U(g).
//!
//! Monomials are exponent vectors against the algebra's ordered basis. Odd
//! generators never carry an exponent above 1: `v v = [v, v] / 2`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::algebra::{LieElement, LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::field::FieldElement;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial(Vec<u32>);

impl PbwMonomial {
    pub fn one(dim: usize) -> Self {
        PbwMonomial(vec![0; dim])
    }

    pub fn generator(dim: usize, i: usize) -> Self {
        let mut m = PbwMonomial::one(dim);
        m.0[i] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        PbwMonomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Generators of the monomial as a word, left to right.
    pub fn word(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            for _ in 0..e {
                w.push(i);
            }
        }
        w
    }

    pub fn parity(&self, g: &LieSuperalgebra) -> Parity {
        let odd: u32 = self
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| g.parity(*i).is_odd())
            .map(|(_, &e)| e)
            .sum();
        Parity::from_bit(odd)
    }

    fn first(&self) -> Option<usize> {
        self.0.iter().position(|&e| e > 0)
    }

    fn bumped(&self, i: usize, delta: i32) -> PbwMonomial {
        let mut m = self.clone();
        m.0[i] = (m.0[i] as i32 + delta) as u32;
        m
    }
}

/// A finite linear combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopingElement {
    algebra: u64,
    dim: usize,
    terms: BTreeMap<PbwMonomial, FieldElement>,
}

impl EnvelopingElement {
    pub fn zero(g: &LieSuperalgebra) -> Self {
        EnvelopingElement { algebra: g.fingerprint(), dim: g.dim(), terms: BTreeMap::new() }
    }

    pub fn one(g: &LieSuperalgebra) -> Self {
        Self::monomial(g, PbwMonomial::one(g.dim()), FieldElement::one())
    }

    pub fn generator(g: &LieSuperalgebra, i: usize) -> Self {
        Self::monomial(g, PbwMonomial::generator(g.dim(), i), FieldElement::one())
    }

    /// The basis element with the given label.
    pub fn label(g: &LieSuperalgebra, label: &str) -> Result<Self> {
        Ok(Self::generator(g, g.index(label)?))
    }

    pub fn scalar(g: &LieSuperalgebra, c: FieldElement) -> Self {
        Self::monomial(g, PbwMonomial::one(g.dim()), c)
    }

    pub fn monomial(g: &LieSuperalgebra, m: PbwMonomial, c: FieldElement) -> Self {
        let mut e = Self::zero(g);
        e.add_term(m, c);
        e
    }

    pub fn from_lie(g: &LieSuperalgebra, x: &LieElement) -> Self {
        let mut e = Self::zero(g);
        for (i, c) in x.terms() {
            e.add_term(PbwMonomial::generator(g.dim(), i), c.clone());
        }
        e
    }

    /// The element as a linear combination of generators, if it is one.
    pub fn to_lie(&self) -> Result<LieElement> {
        let mut out = LieElement::zero();
        for (m, c) in &self.terms {
            if m.degree() != 1 {
                return Err(Error::NotDegreeOne);
            }
            out.add_term(m.first().expect("degree one"), c.clone());
        }
        Ok(out)
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: FieldElement) {
        debug_assert_eq!(m.0.len(), self.dim);
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&m) {
            Some(old) => old + &c,
            None => c,
        };
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    fn add_scaled(&mut self, other: &EnvelopingElement, s: &FieldElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c * s);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &PbwMonomial) -> FieldElement {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn algebra_fingerprint(&self) -> u64 {
        self.algebra
    }

    pub fn add(&self, other: &EnvelopingElement) -> Result<EnvelopingElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &FieldElement::one());
        Ok(out)
    }

    pub fn sub(&self, other: &EnvelopingElement) -> Result<EnvelopingElement> {
        self.check_same(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &FieldElement::from_int(-1));
        Ok(out)
    }

    pub fn scale(&self, s: &FieldElement) -> EnvelopingElement {
        let mut out = EnvelopingElement { terms: BTreeMap::new(), ..*self };
        out.add_scaled(self, s);
        out
    }

    fn check_same(&self, other: &EnvelopingElement) -> Result<()> {
        if self.algebra != other.algebra || self.dim != other.dim {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Split into Z2-homogeneous components (even, odd).
    pub fn homogeneous_parts(&self, g: &LieSuperalgebra) -> (EnvelopingElement, EnvelopingElement) {
        let mut even = EnvelopingElement { terms: BTreeMap::new(), ..*self };
        let mut odd = even.clone();
        for (m, c) in &self.terms {
            match m.parity(g) {
                Parity::Even => even.add_term(m.clone(), c.clone()),
                Parity::Odd => odd.add_term(m.clone(), c.clone()),
            }
        }
        (even, odd)
    }

    /// Z2-degree, if homogeneous (zero counts as even).
    pub fn parity(&self, g: &LieSuperalgebra) -> Option<Parity> {
        let mut parities = self.terms.keys().map(|m| m.parity(g));
        let first = parities.next().unwrap_or(Parity::Even);
        parities.all(|p| p == first).then_some(first)
    }

    /// Specialize parameters in every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&FieldElement) -> FieldElement) -> EnvelopingElement {
        let mut out = EnvelopingElement { terms: BTreeMap::new(), ..*self };
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Canonical text form `coeff * y2^k y3 ... + ...`, terms in increasing
    /// exponent-vector order.
    pub fn to_text(&self, g: &LieSuperalgebra) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (m, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                out.push_str(" + ");
            }
            let cs = c.to_string_with(g.params());
            if cs.contains(' ') {
                write!(out, "({})", cs).unwrap();
            } else {
                out.push_str(&cs);
            }
            out.push_str(" * ");
            out.push_str(&monomial_text(g, m));
        }
        out
    }
}

/// `y2^k y3 h^2`-style rendering of a monomial; the unit prints as `1`.
pub fn monomial_text(g: &LieSuperalgebra, m: &PbwMonomial) -> String {
    let mut out = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        out.push_str(g.label(i));
        if e > 1 {
            write!(out, "^{}", e).unwrap();
        }
    }
    if out.is_empty() {
        out.push('1');
    }
    out
}

type Terms = BTreeMap<PbwMonomial, FieldElement>;

/// Left multiplication by generators with a memo of `g * M` products.
struct Straightener<'a> {
    g: &'a LieSuperalgebra,
    memo: BTreeMap<(usize, PbwMonomial), Terms>,
}

fn add_into(acc: &mut Terms, m: PbwMonomial, c: FieldElement) {
    if c.is_zero() {
        return;
    }
    let sum = match acc.get(&m) {
        Some(old) => old + &c,
        None => c,
    };
    if sum.is_zero() {
        acc.remove(&m);
    } else {
        acc.insert(m, sum);
    }
}

impl<'a> Straightener<'a> {
    fn new(g: &'a LieSuperalgebra) -> Self {
        Straightener { g, memo: BTreeMap::new() }
    }

    /// Normal form of `x * M` for a generator `x` and PBW monomial `M`.
    fn gen_times_monomial(&mut self, x: usize, m: &PbwMonomial) -> Terms {
        let key = (x, m.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let mut out = Terms::new();
        match m.first() {
            None => add_into(&mut out, m.bumped(x, 1), FieldElement::one()),
            Some(f) if x < f => add_into(&mut out, m.bumped(x, 1), FieldElement::one()),
            Some(f) if x == f && !self.g.parity(x).is_odd() => {
                add_into(&mut out, m.bumped(x, 1), FieldElement::one())
            }
            Some(f) if x == f => {
                // x x rest = [x, x]/2 rest
                let rest = m.bumped(x, -1);
                let half = FieldElement::ratio(1, 2);
                let sq = self.g.bracket_basis(x, x).clone();
                for (k, c) in sq.terms() {
                    for (mm, cc) in self.gen_times_monomial(k, &rest) {
                        add_into(&mut out, mm, &(&half * c) * &cc);
                    }
                }
            }
            Some(f) => {
                // x f rest = sign f (x rest) + [x, f] rest
                let rest = m.bumped(f, -1);
                let sign = FieldElement::from_int(self.g.parity(x).sign(self.g.parity(f)));
                let inner = self.gen_times_monomial(x, &rest);
                for (mm, cc) in inner {
                    for (m2, c2) in self.gen_times_monomial(f, &mm) {
                        add_into(&mut out, m2, &(&sign * &cc) * &c2);
                    }
                }
                let br = self.g.bracket_basis(x, f).clone();
                for (k, c) in br.terms() {
                    for (mm, cc) in self.gen_times_monomial(k, &rest) {
                        add_into(&mut out, mm, c * &cc);
                    }
                }
            }
        }
        self.memo.insert(key, out.clone());
        out
    }

    fn gen_times(&mut self, x: usize, u: &Terms) -> Terms {
        let mut out = Terms::new();
        for (m, c) in u {
            for (mm, cc) in self.gen_times_monomial(x, m) {
                add_into(&mut out, mm, c * &cc);
            }
        }
        out
    }

    fn word_times(&mut self, word: &[usize], u: &Terms) -> Terms {
        let mut acc = u.clone();
        for &x in word.iter().rev() {
            acc = self.gen_times(x, &acc);
        }
        acc
    }
}

impl LieSuperalgebra {
    fn wrap(&self, terms: Terms) -> EnvelopingElement {
        EnvelopingElement { algebra: self.fingerprint(), dim: self.dim(), terms }
    }

    fn check(&self, u: &EnvelopingElement) -> Result<()> {
        if u.algebra != self.fingerprint() || u.dim != self.dim() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(())
    }

    /// Bracket of two linear combinations of generators.
    pub fn bracket(&self, x: &EnvelopingElement, y: &EnvelopingElement) -> Result<EnvelopingElement> {
        self.check(x)?;
        self.check(y)?;
        let l = self.bracket_lie(&x.to_lie()?, &y.to_lie()?);
        Ok(EnvelopingElement::from_lie(self, &l))
    }

    /// PBW normal form of `coeff * w1 w2 ... wn`.
    pub fn normal_form(&self, word: &[usize], coeff: FieldElement) -> EnvelopingElement {
        let mut s = Straightener::new(self);
        let mut unit = Terms::new();
        add_into(&mut unit, PbwMonomial::one(self.dim()), coeff);
        let t = s.word_times(word, &unit);
        self.wrap(t)
    }

    /// Normal form of a word given by labels.
    pub fn normal_form_labels(&self, word: &[&str], coeff: FieldElement) -> Result<EnvelopingElement> {
        let idx = word.iter().map(|l| self.index(l)).collect::<Result<Vec<_>>>()?;
        Ok(self.normal_form(&idx, coeff))
    }

    /// Straighten a word by repeatedly rewriting one adjacent pair, with the
    /// pair chosen by `pick` among all currently reducible positions.
    ///
    /// This is the plain rewriting system; [`LieSuperalgebra::normal_form`]
    /// computes the same result through memoized left multiplication.
    pub fn normal_form_by_rewriting(
        &self,
        word: &[usize],
        coeff: FieldElement,
        mut pick: impl FnMut(&[usize]) -> usize,
    ) -> EnvelopingElement {
        let mut pending: Vec<(Vec<usize>, FieldElement)> = vec![(word.to_vec(), coeff)];
        let mut done = self.wrap(Terms::new());
        while let Some((w, c)) = pending.pop() {
            if c.is_zero() {
                continue;
            }
            let reducible: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && self.parity(w[i]).is_odd()))
                .collect();
            if reducible.is_empty() {
                let mut exps = vec![0; self.dim()];
                for &x in &w {
                    exps[x] += 1;
                }
                done.add_term(PbwMonomial(exps), c);
                continue;
            }
            let i = reducible[pick(&reducible) % reducible.len()];
            let (x, y) = (w[i], w[i + 1]);
            let splice = |mid: &[usize]| {
                let mut nw = w[..i].to_vec();
                nw.extend_from_slice(mid);
                nw.extend_from_slice(&w[i + 2..]);
                nw
            };
            if x == y {
                let half = FieldElement::ratio(1, 2);
                for (k, b) in self.bracket_basis(x, x).terms() {
                    pending.push((splice(&[k]), &(&c * &half) * b));
                }
            } else {
                let sign = FieldElement::from_int(self.parity(x).sign(self.parity(y)));
                pending.push((splice(&[y, x]), &c * &sign));
                for (k, b) in self.bracket_basis(x, y).terms() {
                    pending.push((splice(&[k]), &c * b));
                }
            }
        }
        done
    }

    /// Product in U(g), in normal form.
    pub fn multiply(&self, u: &EnvelopingElement, v: &EnvelopingElement) -> Result<EnvelopingElement> {
        self.check(u)?;
        self.check(v)?;
        let mut s = Straightener::new(self);
        let mut out = Terms::new();
        for (m, c) in &u.terms {
            for (mm, cc) in s.word_times(&m.word(), &v.terms) {
                add_into(&mut out, mm, c * &cc);
            }
        }
        Ok(self.wrap(out))
    }

    /// Adjoint action `(ad x) u = x u - (-1)^{d(x) d(u)} u x`, applied to each
    /// homogeneous component of `u`.
    pub fn adjoint(&self, x: usize, u: &EnvelopingElement) -> Result<EnvelopingElement> {
        self.check(u)?;
        let gx = EnvelopingElement::generator(self, x);
        let (even, odd) = u.homogeneous_parts(self);
        let mut out = self.wrap(Terms::new());
        for (part, p) in [(even, Parity::Even), (odd, Parity::Odd)] {
            if part.is_zero() {
                continue;
            }
            let left = self.multiply(&gx, &part)?;
            let right = self.multiply(&part, &gx)?;
            let sign = FieldElement::from_int(-self.parity(x).sign(p));
            out.add_scaled(&left, &FieldElement::one());
            out.add_scaled(&right, &sign);
        }
        Ok(out)
    }

    /// True iff `ad x` kills `u` for every even basis generator `x`.
    pub fn is_central_in_even_part(&self, u: &EnvelopingElement) -> Result<bool> {
        for x in self.even_indices() {
            if !self.adjoint(x, u)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The sl2 Casimir `4 y1 x1 + h^2 + 2h` of the even part of sl(1,2).
    pub fn casimir_sl2(&self) -> Result<EnvelopingElement> {
        let (Ok(x1), Ok(y1), Ok(h)) = (self.index("x1"), self.index("y1"), self.index("h")) else {
            return Err(Error::Unsupported("Casimir needs generators x1, y1, h".into()));
        };
        let is_triple = self.bracket_basis(x1, y1) == &LieElement::basis(h)
            && self.bracket_basis(h, x1) == &LieElement::term(x1, FieldElement::from_int(2))
            && self.bracket_basis(h, y1) == &LieElement::term(y1, FieldElement::from_int(-2));
        if !is_triple {
            return Err(Error::Unsupported("x1, y1, h is not an sl2-triple".into()));
        }
        let mut c = self.normal_form(&[y1, x1], FieldElement::from_int(4));
        c.add_scaled(&self.normal_form(&[h, h], FieldElement::one()), &FieldElement::one());
        c.add_scaled(&self.normal_form(&[h], FieldElement::from_int(2)), &FieldElement::one());
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl_super;

    fn setup() -> LieSuperalgebra {
        sl_super(1, 2).unwrap()
    }

    fn word(g: &LieSuperalgebra, w: &[&str]) -> EnvelopingElement {
        g.normal_form_labels(w, FieldElement::one()).unwrap()
    }

    #[test]
    fn ordered_word_is_unchanged() {
        let g = setup();
        let h = word(&g, &["h"]);
        assert_eq!(h.num_terms(), 1);
        assert_eq!(h.to_text(&g), "1 * h");
    }

    #[test]
    fn single_swap() {
        let g = setup();
        let lhs = word(&g, &["x1", "y1"]);
        let rhs = word(&g, &["y1", "x1"]).add(&word(&g, &["h"])).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn odd_square_vanishes() {
        let g = setup();
        assert!(word(&g, &["y2", "y2"]).is_zero());
        assert!(word(&g, &["x3", "x3"]).is_zero());
    }

    #[test]
    fn unit_and_commutators() {
        let g = setup();
        let one = EnvelopingElement::one(&g);
        let x1 = word(&g, &["x1"]);
        let h = word(&g, &["h"]);
        assert_eq!(g.multiply(&one, &x1).unwrap(), x1);
        let comm = g.multiply(&h, &x1).unwrap().sub(&g.multiply(&x1, &h).unwrap()).unwrap();
        assert_eq!(comm, x1.scale(&FieldElement::from_int(2)));
        let y2 = word(&g, &["y2"]);
        let y3 = word(&g, &["y3"]);
        let anti = g.multiply(&y2, &y3).unwrap().add(&g.multiply(&y3, &y2).unwrap()).unwrap();
        assert!(anti.is_zero());
    }

    #[test]
    fn adjoint_examples() {
        let g = setup();
        let x1 = g.index("x1").unwrap();
        let h = g.index("h").unwrap();
        assert!(g.adjoint(x1, &EnvelopingElement::one(&g)).unwrap().is_zero());
        // [h, y2] = y2 and [h, y3] = -y3 by the matrix oracle, so y2 y3 has h-weight 0.
        assert!(g.adjoint(h, &word(&g, &["y2", "y3"])).unwrap().is_zero());
        // ad x1 (y1^2) = h y1 + y1 h by super-Leibniz.
        let lhs = g.adjoint(x1, &word(&g, &["y1", "y1"])).unwrap();
        let rhs = word(&g, &["h", "y1"]).add(&word(&g, &["y1", "h"])).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.to_text(&g), "-2 * y1 + 2 * y1 h");
    }

    #[test]
    fn casimir_is_central() {
        let g = setup();
        let c = g.casimir_sl2().unwrap();
        assert_eq!(c.num_terms(), 3);
        assert_eq!(c.to_text(&g), "2 * h + 1 * h^2 + 4 * y1 x1");
        assert!(g.is_central_in_even_part(&c).unwrap());
        assert!(g.is_central_in_even_part(&word(&g, &["z"])).unwrap());
        assert!(!g.is_central_in_even_part(&word(&g, &["h"])).unwrap());
        let x1 = g.index("x1").unwrap();
        assert_eq!(
            g.adjoint(x1, &word(&g, &["h"])).unwrap(),
            word(&g, &["x1"]).scale(&FieldElement::from_int(-2))
        );
    }

    #[test]
    fn mismatched_algebras_are_rejected() {
        let g = setup();
        let other = g.reordered(&[1, 0, 2, 3, 4, 5, 6, 7]).unwrap();
        let u = EnvelopingElement::one(&g);
        let v = EnvelopingElement::one(&other);
        assert_eq!(g.multiply(&u, &v), Err(Error::AlgebraMismatch));
    }

    #[test]
    fn bracket_of_generators() {
        let g = setup();
        let x2 = word(&g, &["x2"]);
        let y2 = word(&g, &["y2"]);
        let expected = word(&g, &["z"])
            .add(&word(&g, &["h"]))
            .unwrap()
            .scale(&FieldElement::ratio(1, 2));
        assert_eq!(g.bracket(&x2, &y2).unwrap(), expected);
        assert_eq!(g.bracket(&word(&g, &["x1"]), &word(&g, &["y1"])).unwrap(), word(&g, &["h"]));
        let h = word(&g, &["h"]);
        assert!(g.bracket(&h, &h).unwrap().is_zero());
        let hh = word(&g, &["h", "h"]);
        assert_eq!(g.bracket(&hh, &h), Err(Error::NotDegreeOne));
    }
}
