//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are referred to by index; names live in a [`crate::ParamSet`]
//! and only matter for printing. Monomials are ordered lexicographically
//! with variable 0 most significant, which is a monomial order, so the
//! largest key of the term map is the leading term.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exponent vector with trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: usize, exp: u32) -> Self {
        let mut v = vec![0; index + 1];
        v[index] = exp;
        let mut m = Monomial(v);
        m.trim();
        m
    }

    pub fn from_exponents(exps: Vec<u32>) -> Self {
        let mut m = Monomial(exps);
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        let v = (0..n).map(|i| self.exp(i) + other.exp(i)).collect();
        Monomial(v)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut v = Vec::with_capacity(self.0.len());
        for i in 0..self.0.len() {
            let (a, b) = (self.exp(i), other.exp(i));
            if b > a {
                return None;
            }
            v.push(a - b);
        }
        Some(Monomial::from_exponents(v))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().min(other.0.len());
        Monomial::from_exponents((0..n).map(|i| self.exp(i).min(other.exp(i))).collect())
    }

    fn without(&self, var: usize) -> Monomial {
        let mut v = self.0.clone();
        if var < v.len() {
            v[var] = 0;
        }
        Monomial::from_exponents(v)
    }

    fn half(&self) -> Option<Monomial> {
        if self.0.iter().any(|e| e % 2 != 0) {
            return None;
        }
        Some(Monomial(self.0.iter().map(|e| e / 2).collect()))
    }

    fn dominated_by(&self, bound: &Monomial) -> bool {
        (0..self.0.len()).all(|i| self.exp(i) <= bound.exp(i))
    }
}

/// Polynomial with exact rational coefficients. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn from_int(c: i64) -> Self {
        Poly::constant(BigRational::from_integer(BigInt::from(c)))
    }

    pub fn var(index: usize) -> Self {
        Poly::term(BigRational::one(), Monomial::var(index, 1))
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(BigRational::zero)
    }

    /// Number of variable slots touched by any term.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    fn mul_term(&self, m: &Monomial, c: &BigRational) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Scale so that the leading coefficient is 1.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Exact division; `None` if `divisor` does not divide `self`.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = divisor.leading().map(|(m, c)| (m.clone(), c.clone()))?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = rm.div(&dm)?;
            let qc = rc / &dc;
            rem = &rem - &divisor.mul_term(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`.
    fn coefficients_in(&self, var: usize) -> Vec<Poly> {
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Poly::zero(); deg + 1];
        for (m, c) in &self.terms {
            out[m.exp(var) as usize].add_term(m.without(var), c.clone());
        }
        out
    }

    fn leading_coeff_in(&self, var: usize) -> Poly {
        self.coefficients_in(var).pop().unwrap_or_default()
    }

    /// Gcd of the coefficients with respect to `var`.
    fn content_in(&self, var: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.coefficients_in(var) {
            if c.is_zero() {
                continue;
            }
            g = gcd(&g, &c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn primitive_part_in(&self, var: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let c = self.content_in(var);
        self.exact_div(&c).expect("content divides").monic()
    }

    /// Pseudo-remainder of `self` by `divisor` as univariate polynomials in `var`.
    fn pseudo_rem(&self, divisor: &Poly, var: usize) -> Poly {
        let db = divisor.degree_in(var);
        let lb = divisor.leading_coeff_in(var);
        let mut r = self.clone();
        while !r.is_zero() && r.degree_in(var) >= db {
            let dr = r.degree_in(var);
            let lr = r.leading_coeff_in(var);
            let shift = Poly::term(BigRational::one(), Monomial::var(var, dr - db));
            r = &(&lb * &r) - &(&(&lr * &shift) * divisor);
        }
        r
    }

    /// Evaluate at rational values for every variable that occurs.
    pub fn evaluate(&self, values: &[Option<BigRational>]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::with_capacity(m.0.len());
            for (i, &e) in m.0.iter().enumerate() {
                match values.get(i).and_then(|v| v.as_ref()) {
                    Some(v) if e > 0 => {
                        coeff *= num_traits::pow::pow(v.clone(), e as usize);
                        rest.push(0);
                    }
                    _ => rest.push(e),
                }
            }
            out.add_term(Monomial::from_exponents(rest), coeff);
        }
        out
    }

    /// Substitute `var -> var + shift` (used for Cartan shifts in `h`).
    pub fn shift_var(&self, var: usize, shift: &BigRational) -> Poly {
        let lin = &Poly::var(var) + &Poly::constant(shift.clone());
        let mut out = Poly::zero();
        for (k, c) in self.coefficients_in(var).into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out = &out + &(&c * &lin.pow(k as u32));
        }
        out
    }

    /// Square root if `self` is a perfect square in Q[vars].
    pub fn sqrt(&self) -> Option<Poly> {
        let Some((lm, lc)) = self.leading() else {
            return Some(Poly::zero());
        };
        let root_c = rational_sqrt(lc)?;
        let root_m = lm.half()?;
        let bound = Monomial::from_exponents(
            (0..self.num_vars())
                .map(|i| self.degree_in(i) / 2)
                .collect(),
        );
        let lead = Poly::term(root_c.clone(), root_m.clone());
        let two_lead_c = &root_c + &root_c;
        let mut root = lead;
        loop {
            let rem = self - &(&root * &root);
            let Some((rm, rc)) = rem.leading() else {
                return Some(root);
            };
            let tm = rm.div(&root_m)?;
            if tm >= root_m || !tm.dominated_by(&bound) {
                return None;
            }
            let tc = rc / &two_lead_c;
            root.add_term(tm, tc);
        }
    }

    pub fn to_string_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        if self.is_zero() {
            out.push('0');
            return out;
        }
        // Descending total degree, then descending lex.
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.total_degree()
                .cmp(&a.total_degree())
                .then_with(|| b.cmp(a))
        });
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = monomial_string(m, names);
            match (abs.is_one(), mono.is_empty()) {
                (true, true) => out.push('1'),
                (true, false) => out.push_str(&mono),
                (false, true) => write!(out, "{}", abs).unwrap(),
                (false, false) => write!(out, "{}*{}", abs, mono).unwrap(),
            }
        }
        out
    }
}

fn monomial_string(m: &Monomial, names: &[String]) -> String {
    let mut out = String::new();
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('*');
        }
        match names.get(i) {
            Some(n) => out.push_str(n),
            None => write!(out, "v{}", i).unwrap(),
        }
        if e > 1 {
            write!(out, "^{}", e).unwrap();
        }
    }
    out
}

pub(crate) fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Monic gcd of two polynomials (gcd(0, 0) = 0).
pub fn gcd(p: &Poly, q: &Poly) -> Poly {
    if p.is_zero() {
        return q.monic();
    }
    if q.is_zero() || p == q {
        return p.monic();
    }
    if p.is_constant() || q.is_constant() {
        return Poly::one();
    }
    if p.num_terms() == 1 || q.num_terms() == 1 {
        let (single, other) = if p.num_terms() == 1 { (p, q) } else { (q, p) };
        let mut g = single.leading().unwrap().0.clone();
        for (m, _) in other.terms() {
            g = g.gcd(m);
        }
        return Poly::term(BigRational::one(), g);
    }
    let var = p.num_vars().max(q.num_vars()) - 1;
    match (p.involves(var), q.involves(var)) {
        (false, false) => unreachable!("top variable occurs in one operand"),
        (true, false) => return gcd(&p.content_in(var), q),
        (false, true) => return gcd(p, &q.content_in(var)),
        (true, true) => {}
    }
    let content = gcd(&p.content_in(var), &q.content_in(var));
    let (mut a, mut b) = (p.primitive_part_in(var), q.primitive_part_in(var));
    if a.degree_in(var) < b.degree_in(var) {
        core::mem::swap(&mut a, &mut b);
    }
    let g = loop {
        let r = a.pseudo_rem(&b, var);
        if r.is_zero() {
            break b;
        }
        if r.degree_in(var) == 0 {
            break Poly::one();
        }
        a = b;
        b = r.primitive_part_in(var);
    };
    (&content * &g.primitive_part_in(var)).monic()
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a() -> Poly {
        Poly::var(0)
    }
    fn b() -> Poly {
        Poly::var(1)
    }
    fn c() -> Poly {
        Poly::var(2)
    }
    fn k(n: i64) -> Poly {
        Poly::from_int(n)
    }

    #[test]
    fn gcd_of_products_recovers_common_factor() {
        let f = &(&a() * &b()) - &k(2);
        let g1 = &(&c() + &a()) + &k(1);
        let g2 = &(&b() * &b()) - &c();
        let p = &f * &g1;
        let q = &f * &g2;
        assert_eq!(gcd(&p, &q), f.monic());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let p = &(&a() * &a()) + &k(1);
        let q = &a() - &b();
        assert!(gcd(&p, &q).is_one());
    }

    #[test]
    fn gcd_with_monomial() {
        let p = &(&(&a() * &a()) * &b()) + &(&a() * &c());
        let q = &a() * &b();
        assert_eq!(gcd(&p, &q), a());
    }

    #[test]
    fn exact_division_roundtrip() {
        let p = &(&a() + &b()) * &(&c() - &k(2));
        let q = &c() - &k(2);
        assert_eq!(p.exact_div(&q), Some(&a() + &b()));
        assert_eq!(p.exact_div(&(&c() + &k(2))), None);
    }

    #[test]
    fn perfect_square_root() {
        let s = &(&(&a() * &b()) - &k(3)) + &c();
        let sq = &s * &s;
        let r = sq.sqrt().unwrap();
        assert_eq!(&r * &r, sq);
        assert!((&sq + &k(1)).sqrt().is_none());
    }

    #[test]
    fn shift_variable() {
        let p = &a() * &a();
        let shifted = p.shift_var(0, &BigRational::from_integer(BigInt::from(2)));
        assert_eq!(shifted, &(&(&a() * &a()) + &(&k(4) * &a())) + &k(4));
    }

    #[test]
    fn printing_is_graded() {
        let names: Vec<String> = ["a", "b", "c"].iter().map(|s| (*s).into()).collect();
        let p = &(&(&a() * &c()) - &(&k(2) * &a())) + &k(1);
        assert_eq!(p.to_string_with(&names), "a*c - 2*a + 1");
    }
}
