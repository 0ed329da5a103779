//! The coefficient field Q(a, b, c, ...) of reduced rational functions.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::poly::{gcd, rational_sqrt, Poly};

/// Named parameters of the coefficient field, sorted alphabetically.
///
/// The position of a name is the variable index used by [`Poly`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamSet {
    names: Vec<String>,
}

impl ParamSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.sort();
        names.dedup();
        ParamSet { names }
    }

    pub fn empty() -> Self {
        ParamSet::default()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Parameter `name` as a field element, if declared.
    pub fn var(&self, name: &str) -> Option<FieldElement> {
        self.index(name).map(FieldElement::var)
    }
}

/// An element num/den of Q(params), kept reduced with a monic denominator,
/// so structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: Poly,
    den: Poly,
}

impl Default for FieldElement {
    fn default() -> Self {
        FieldElement::zero()
    }
}

impl FieldElement {
    pub fn zero() -> Self {
        FieldElement { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        FieldElement { num: Poly::one(), den: Poly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        FieldElement { num: Poly::from_int(n), den: Poly::one() }
    }

    pub fn from_rational(q: BigRational) -> Self {
        FieldElement { num: Poly::constant(q), den: Poly::one() }
    }

    pub fn ratio(n: i64, d: i64) -> Self {
        FieldElement::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn var(index: usize) -> Self {
        FieldElement { num: Poly::var(index), den: Poly::one() }
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElement { num: p, den: Poly::one() }
    }

    /// `num / den`, reduced. Returns `None` if `den` is zero.
    pub fn from_parts(num: Poly, den: Poly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return FieldElement::zero();
        }
        if let Some(c) = den.as_constant() {
            let inv = c.recip();
            return FieldElement { num: num.scale(&inv), den: Poly::one() };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.exact_div(&g).expect("gcd divides numerator"),
                den.exact_div(&g).expect("gcd divides denominator"),
            )
        };
        let lc = den.leading_coeff();
        if lc.is_one() {
            FieldElement { num, den }
        } else {
            let inv = lc.recip();
            FieldElement { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a rational number, if it is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as an integer, if it is an integral constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        let q = self.as_rational()?;
        q.is_integer().then(|| q.to_integer())
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(FieldElement::reduce(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        FieldElement { num: self.num.pow(e), den: self.den.pow(e) }
    }

    /// Substitute rational values for some parameters (index -> value).
    /// Returns `None` when the denominator vanishes under the substitution.
    pub fn specialize(&self, values: &[Option<BigRational>]) -> Option<Self> {
        let den = self.den.evaluate(values);
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(self.num.evaluate(values), den))
    }

    /// Substitute `var -> var + shift`.
    pub fn shift_var(&self, var: usize, shift: &BigRational) -> Self {
        Self::reduce(self.num.shift_var(var, shift), self.den.shift_var(var, shift))
    }

    /// Square root within the field, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if let Some(q) = self.as_rational() {
            return rational_sqrt(&q).map(FieldElement::from_rational);
        }
        // den is monic, so any square root of the quotient has a root of both.
        let n = self.num.sqrt()?;
        let d = self.den.sqrt()?;
        Some(Self::reduce(n, d))
    }

    pub fn to_string_with(&self, params: &ParamSet) -> String {
        let names = params.names();
        if self.den.is_one() {
            return self.num.to_string_with(names);
        }
        let wrap = |p: &Poly| {
            let s = p.to_string_with(names);
            if p.num_terms() > 1 || s.contains('*') || s.starts_with('-') {
                let mut w = String::from("(");
                w.push_str(&s);
                w.push(')');
                w
            } else {
                s
            }
        };
        let mut out = wrap(&self.num);
        out.push('/');
        out.push_str(&wrap(&self.den));
        out
    }

    pub fn display<'a>(&'a self, params: &'a ParamSet) -> impl fmt::Display + 'a {
        DisplayField { value: self, params }
    }
}

struct DisplayField<'a> {
    value: &'a FieldElement,
    params: &'a ParamSet,
}

impl fmt::Display for DisplayField<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.value.to_string_with(self.params))
    }
}

impl fmt::Display for FieldElement {
    /// Prints with placeholder variable names `v0, v1, ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&ParamSet::empty()))
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        FieldElement::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(q: BigRational) -> Self {
        FieldElement::from_rational(q)
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            return FieldElement::reduce(&self.num + &rhs.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let l = self.den.exact_div(&g).expect("gcd divides");
        let r = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &r) + &(&rhs.num * &l);
        FieldElement::reduce(num, &self.den * &r)
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self + &(-rhs)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        if self.is_zero() || rhs.is_zero() {
            return FieldElement::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return FieldElement { num: &self.num * &rhs.num, den: Poly::one() };
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        let num = &n1 * &n2;
        let den = &d1 * &d2;
        let lc = den.leading_coeff();
        if lc.is_one() {
            FieldElement { num, den }
        } else {
            let inv = lc.recip();
            FieldElement { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for &FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero; use [`FieldElement::inv`] to check first.
    fn div(self, rhs: &FieldElement) -> FieldElement {
        let inv = rhs.inv().expect("division by zero in coefficient field");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
}

impl One for FieldElement {
    fn one() -> Self {
        FieldElement::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> (ParamSet, FieldElement, FieldElement, FieldElement) {
        let p = ParamSet::new(["c", "a", "b"]);
        let a = p.var("a").unwrap();
        let b = p.var("b").unwrap();
        let c = p.var("c").unwrap();
        (p, a, b, c)
    }

    #[test]
    fn params_sorted_alphabetically() {
        let (p, ..) = abc();
        assert_eq!(p.names(), &["a", "b", "c"]);
    }

    #[test]
    fn reduced_representation_is_canonical() {
        let (_, a, b, _) = abc();
        let x = &(&a * &b) / &(&a * &a);
        assert_eq!(x, &b / &a);
        let y = &(&a - &b) / &(&b - &a);
        assert_eq!(y, FieldElement::from_int(-1));
    }

    #[test]
    fn add_then_subtract_is_identity() {
        let (_, a, b, c) = abc();
        let x = &b / &(&a + &c);
        let y = &FieldElement::from_int(1) / &(&c - &FieldElement::from_int(2));
        assert_eq!(&(&x + &y) - &y, x);
    }

    #[test]
    fn inverse_of_zero_is_none() {
        assert!(FieldElement::zero().inv().is_none());
    }

    #[test]
    fn specialization_detects_pole() {
        let (_, a, ..) = abc();
        let x = FieldElement::one() / a;
        let zero = [Some(BigRational::zero())];
        assert!(x.specialize(&zero).is_none());
        let two = [Some(BigRational::from_integer(BigInt::from(2)))];
        assert_eq!(x.specialize(&two).unwrap(), FieldElement::ratio(1, 2));
    }

    #[test]
    fn printing() {
        let (p, a, b, c) = abc();
        let x = &(&b - &(&c * &c)) / &(&FieldElement::from_int(4) * &a);
        assert_eq!(x.to_string_with(&p), "(-1/4*c^2 + 1/4*b)/a");
        let half = FieldElement::ratio(1, 2);
        assert_eq!((&half * &c).to_string_with(&p), "1/2*c");
    }

    #[test]
    fn square_roots() {
        let (_, a, b, _) = abc();
        let s = &(&a + &b) / &(&b * &b);
        assert_eq!((&s * &s).sqrt().unwrap().pow(2), &s * &s);
        assert!(FieldElement::from_int(2).sqrt().is_none());
    }
}
