//! Roots, Whittaker characters and the parabolic pieces they cut out.
//!
//! Weights are plain rational vectors in the coordinates of the chosen Cartan
//! generators; there is no lattice object.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::algebra::{LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::Matrix;
use crate::pbw::PbwMonomial;

pub type Weight = Vec<BigRational>;

fn add_weights(a: &[BigRational], b: &[BigRational]) -> Weight {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn neg_weight(a: &[BigRational]) -> Weight {
    a.iter().map(|x| -x).collect()
}

fn is_zero_weight(a: &[BigRational]) -> bool {
    a.iter().all(Zero::is_zero)
}

fn to_field(a: &[BigRational]) -> Vec<FieldElement> {
    a.iter().cloned().map(FieldElement::from_rational).collect()
}

fn from_field(v: &[FieldElement]) -> Weight {
    v.iter().map(|x| x.as_rational().expect("rational entries")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootDatum {
    dim: usize,
    labels: Vec<String>,
    parity: Vec<Parity>,
    cartan: Vec<usize>,
    roots: BTreeMap<usize, Weight>,
    positive: BTreeSet<usize>,
    simple: Vec<usize>,
}

impl RootDatum {
    /// Simultaneous ad-eigenvalues of the Cartan generators on the other basis
    /// elements. Positive roots default to the basis elements that come after
    /// every Cartan generator.
    pub fn root_decomposition(g: &LieSuperalgebra, cartan: &[&str]) -> Result<RootDatum> {
        let cartan: Vec<usize> = cartan.iter().map(|l| g.index(l)).collect::<Result<_>>()?;
        for &c in &cartan {
            if g.parity(c).is_odd() {
                return Err(Error::InvalidRootDatum(format!("Cartan generator `{}` is odd", g.label(c))));
            }
            for &d in &cartan {
                if !g.bracket_basis(c, d).is_zero() {
                    return Err(Error::CartanNotAbelian);
                }
            }
        }
        let mut roots = BTreeMap::new();
        for i in (0..g.dim()).filter(|i| !cartan.contains(i)) {
            let mut w = Weight::new();
            for &c in &cartan {
                let br = g.bracket_basis(c, i);
                let ev = br.coeff(i);
                let pure = br.terms().all(|(k, _)| k == i);
                match (pure, ev.as_rational()) {
                    (true, Some(q)) => w.push(q),
                    _ => return Err(Error::NotAdEigenbasis(g.label(i).into())),
                }
            }
            roots.insert(i, w);
        }
        if let Some((&i, _)) = roots.iter().find(|(_, w)| is_zero_weight(w)) {
            return Err(Error::InvalidRootDatum(format!(
                "`{}` has weight zero but is not in the Cartan",
                g.label(i)
            )));
        }
        let last_cartan = cartan.iter().copied().max();
        let first_cartan = cartan.iter().copied().min();
        let mut positive = BTreeSet::new();
        for &i in roots.keys() {
            match (first_cartan, last_cartan) {
                (Some(lo), Some(hi)) if i > lo && i < hi => {
                    return Err(Error::InvalidRootDatum(format!(
                        "cannot infer the sign of `{}`; declare positive roots explicitly",
                        g.label(i)
                    )))
                }
                (_, Some(hi)) if i > hi => {
                    positive.insert(i);
                }
                _ => {}
            }
        }
        let mut rd = RootDatum {
            dim: g.dim(),
            labels: g.labels().to_vec(),
            parity: g.parities().to_vec(),
            cartan,
            roots,
            positive,
            simple: Vec::new(),
        };
        rd.finish()?;
        Ok(rd)
    }

    /// Replace the positive system by the given labels.
    pub fn with_positive(mut self, labels: &[&str]) -> Result<RootDatum> {
        self.positive = labels.iter().map(|l| self.index(l)).collect::<Result<_>>()?;
        self.finish()?;
        Ok(self)
    }

    /// Replace the simple roots (must be positive roots).
    pub fn with_simple(mut self, labels: &[&str]) -> Result<RootDatum> {
        let simple: Vec<usize> = labels.iter().map(|l| self.index(l)).collect::<Result<_>>()?;
        if let Some(&bad) = simple.iter().find(|i| !self.positive.contains(i)) {
            return Err(Error::InvalidRootDatum(format!("`{}` is not a positive root", self.labels[bad])));
        }
        self.simple = simple;
        Ok(self)
    }

    /// The built-in datum for sl(1,2): Cartan (h, z), positive roots
    /// x1, x2, x3 and simple roots x1, x2.
    pub fn sl12(g: &LieSuperalgebra) -> Result<RootDatum> {
        RootDatum::root_decomposition(g, &["h", "z"])?
            .with_positive(&["x1", "x2", "x3"])?
            .with_simple(&["x1", "x2"])
    }

    fn index(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.into()))
    }

    /// Check the positive system and recompute the indecomposable roots.
    fn finish(&mut self) -> Result<()> {
        for &p in &self.positive {
            if !self.roots.contains_key(&p) {
                return Err(Error::InvalidRootDatum(format!("`{}` is not a root vector", self.labels[p])));
            }
        }
        let pos: Vec<Weight> = self.positive.iter().map(|i| self.roots[i].clone()).collect();
        let mut neg: Vec<Weight> = self
            .roots
            .iter()
            .filter(|(i, _)| !self.positive.contains(i))
            .map(|(_, w)| neg_weight(w))
            .collect();
        let mut pos_sorted = pos.clone();
        pos_sorted.sort();
        neg.sort();
        if pos_sorted != neg {
            return Err(Error::InvalidRootDatum("roots do not come in +/- pairs".into()));
        }
        for a in &pos {
            for b in &pos {
                let s = add_weights(a, b);
                let is_root = self.roots.values().any(|w| *w == s);
                if is_root && !pos.contains(&s) {
                    return Err(Error::InvalidRootDatum("positive roots are not closed under addition".into()));
                }
            }
        }
        self.simple = self.indecomposable(|_| true);
        Ok(())
    }

    fn indecomposable(&self, keep: impl Fn(usize) -> bool) -> Vec<usize> {
        let pos: Vec<usize> = self.positive.iter().copied().filter(|&i| keep(i)).collect();
        pos.iter()
            .copied()
            .filter(|&i| {
                !pos.iter().any(|&a| {
                    pos.iter()
                        .any(|&b| add_weights(&self.roots[&a], &self.roots[&b]) == self.roots[&i])
                })
            })
            .collect()
    }

    pub fn cartan(&self) -> &[usize] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn root(&self, i: usize) -> Option<&Weight> {
        self.roots.get(&i)
    }

    pub fn root_of(&self, label: &str) -> Result<&Weight> {
        let i = self.index(label)?;
        self.roots.get(&i).ok_or_else(|| Error::InvalidRootDatum(format!("`{}` is a Cartan generator", label)))
    }

    /// Root vectors in basis order.
    pub fn roots(&self) -> impl Iterator<Item = (usize, &Weight)> {
        self.roots.iter().map(|(i, w)| (*i, w))
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive.contains(&i)
    }

    pub fn positive(&self) -> Vec<usize> {
        self.positive.iter().copied().collect()
    }

    pub fn negative(&self) -> Vec<usize> {
        self.roots.keys().copied().filter(|i| !self.positive.contains(i)).collect()
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    /// Simple roots of the even part.
    pub fn even_simple(&self) -> Vec<usize> {
        self.indecomposable(|i| !self.parity[i].is_odd())
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parity[i]
    }

    /// Odd negative root vectors: the degree -1 part of a type-I grading.
    pub fn g_minus_one(&self) -> Vec<usize> {
        self.negative().into_iter().filter(|&i| self.parity[i].is_odd()).collect()
    }

    /// Weights of the exterior algebra on the degree -1 part, one per subset
    /// (subsets indexed by bitmask over [`RootDatum::g_minus_one`]).
    pub fn exterior_weights(&self) -> Vec<Weight> {
        let gens = self.g_minus_one();
        (0u64..1 << gens.len())
            .map(|mask| {
                let mut w = vec![BigRational::zero(); self.rank()];
                for (bit, &i) in gens.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        w = add_weights(&w, &self.roots[&i]);
                    }
                }
                w
            })
            .collect()
    }
}

/// A character of the positive nilradical together with central-character
/// parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WhittakerDatum {
    psi: BTreeMap<usize, FieldElement>,
    support: Vec<usize>,
    params: BTreeMap<String, FieldElement>,
}

impl WhittakerDatum {
    /// `values` assigns ψ on positive root vectors (unlisted ones are 0).
    pub fn new(
        g: &LieSuperalgebra,
        rd: &RootDatum,
        values: &[(&str, FieldElement)],
        params: &[(&str, FieldElement)],
    ) -> Result<WhittakerDatum> {
        let mut psi = BTreeMap::new();
        for (label, v) in values {
            let i = g.index(label)?;
            if !rd.is_positive(i) {
                return Err(Error::NotInL(format!("`{}` is not a positive root vector", label)));
            }
            if v.is_zero() {
                continue;
            }
            if g.parity(i).is_odd() {
                return Err(Error::NotInL(format!("nonzero on odd `{}`", label)));
            }
            psi.insert(i, v.clone());
        }
        let even_pos: Vec<usize> = rd.positive().into_iter().filter(|&i| !g.parity(i).is_odd()).collect();
        for &a in &even_pos {
            for &b in &even_pos {
                let br = g.bracket_basis(a, b);
                let val = br.terms().fold(FieldElement::zero(), |acc, (k, c)| {
                    &acc + &(c * &psi.get(&k).cloned().unwrap_or_default())
                });
                if !val.is_zero() {
                    return Err(Error::NotInL(format!("nonzero on [{}, {}]", g.label(a), g.label(b))));
                }
            }
        }
        let support = rd.even_simple().into_iter().filter(|i| psi.contains_key(i)).collect();
        let params = params.iter().map(|(n, v)| (String::from(*n), v.clone())).collect();
        Ok(WhittakerDatum { psi, support, params })
    }

    pub fn psi(&self, i: usize) -> FieldElement {
        self.psi.get(&i).cloned().unwrap_or_default()
    }

    pub fn psi_values(&self) -> impl Iterator<Item = (usize, &FieldElement)> {
        self.psi.iter().map(|(i, v)| (*i, v))
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn param(&self, name: &str) -> Option<&FieldElement> {
        self.params.get(name)
    }

    pub fn is_nonsingular(&self, rd: &RootDatum) -> bool {
        rd.even_simple().iter().all(|i| self.support.contains(i))
    }
}

pub fn is_nonsingular(w: &WhittakerDatum, rd: &RootDatum) -> bool {
    w.is_nonsingular(rd)
}

/// Basis labels of g_ψ, r_ψ^± and m_ψ^± (the even parts of r_ψ^±), plus the
/// Z-grading data used to order weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicPieces {
    pub g_psi: Vec<usize>,
    pub r_plus: Vec<usize>,
    pub r_minus: Vec<usize>,
    pub m_plus: Vec<usize>,
    pub m_minus: Vec<usize>,
    /// Basis of Z in Cartan coordinates.
    z_basis: Vec<Weight>,
    /// Restrictions to Z of the simple roots outside the support.
    z_simple: Vec<Weight>,
}

/// Integer coefficients of `w` on `gens`, if `w` lies in their rational span
/// with integral coordinates (the generators are assumed independent).
fn integral_coordinates(gens: &[Weight], w: &[BigRational]) -> Option<Vec<BigRational>> {
    if gens.is_empty() {
        return is_zero_weight(w).then(Vec::new);
    }
    let cols: Vec<Vec<FieldElement>> = gens.iter().map(|g| to_field(g)).collect();
    let m = Matrix::from_columns(&cols, w.len());
    let x = from_field(&m.solve(&to_field(w))?);
    x.iter().all(|q| q.is_integer()).then_some(x)
}

pub fn parabolic_pieces(w: &WhittakerDatum, rd: &RootDatum) -> Result<ParabolicPieces> {
    let support: Vec<Weight> = w.support.iter().map(|i| rd.roots[i].clone()).collect();
    if !support.is_empty() {
        let m = Matrix::from_columns(&support.iter().map(|s| to_field(s)).collect::<Vec<_>>(), rd.rank());
        if m.rank() != support.len() {
            return Err(Error::InvalidRootDatum("support roots are linearly dependent".into()));
        }
    }
    let in_levi = |i: usize| integral_coordinates(&support, &rd.roots[&i]).is_some();
    let mut g_psi = rd.cartan.clone();
    let mut r_plus = Vec::new();
    let mut r_minus = Vec::new();
    for &i in rd.roots.keys() {
        if in_levi(i) {
            g_psi.push(i);
        } else if rd.is_positive(i) {
            r_plus.push(i);
        } else {
            r_minus.push(i);
        }
    }
    g_psi.sort_unstable();
    let even = |v: &[usize]| v.iter().copied().filter(|&i| !rd.parity[i].is_odd()).collect::<Vec<_>>();
    let (m_plus, m_minus) = (even(&r_plus), even(&r_minus));

    // Z is the joint kernel of the support roots inside the Cartan.
    let z_basis: Vec<Weight> = if support.is_empty() {
        (0..rd.rank())
            .map(|j| (0..rd.rank()).map(|k| BigRational::from_integer((j == k).into())).collect())
            .collect()
    } else {
        let rows: Vec<Vec<FieldElement>> = support.iter().map(|s| to_field(s)).collect();
        Matrix::from_rows(rows).kernel().iter().map(|v| from_field(v)).collect()
    };
    let restrict = |wt: &[BigRational]| -> Weight {
        z_basis
            .iter()
            .map(|b| b.iter().zip(wt).fold(BigRational::zero(), |acc, (x, y)| acc + x * y))
            .collect()
    };
    let z_simple: Vec<Weight> = rd
        .simple
        .iter()
        .filter(|i| !w.support.contains(i))
        .map(|i| restrict(&rd.roots[i]))
        .collect();
    if !z_simple.is_empty() {
        let m = Matrix::from_columns(&z_simple.iter().map(|s| to_field(s)).collect::<Vec<_>>(), z_basis.len());
        if m.rank() != z_simple.len() {
            return Err(Error::InvalidRootDatum("restricted simple roots are dependent".into()));
        }
    }
    Ok(ParabolicPieces { g_psi, r_plus, r_minus, m_plus, m_minus, z_basis, z_simple })
}

impl ParabolicPieces {
    pub fn z_basis(&self) -> &[Weight] {
        &self.z_basis
    }

    /// Restriction of a weight to Z, in the coordinates of [`Self::z_basis`].
    pub fn restrict(&self, wt: &[BigRational]) -> Weight {
        self.z_basis
            .iter()
            .map(|b| b.iter().zip(wt).fold(BigRational::zero(), |acc, (x, y)| acc + x * y))
            .collect()
    }

    /// Z-weight of a basis element (zero for Cartan generators).
    pub fn z_weight(&self, rd: &RootDatum, i: usize) -> Weight {
        match rd.root(i) {
            Some(r) => self.restrict(r),
            None => vec![BigRational::zero(); self.z_basis.len()],
        }
    }

    pub fn z_weight_of_monomial(&self, rd: &RootDatum, m: &PbwMonomial) -> Weight {
        let mut acc = vec![BigRational::zero(); self.z_basis.len()];
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                let w = self.z_weight(rd, i);
                for (a, x) in acc.iter_mut().zip(w) {
                    *a += x * BigRational::from_integer(e.into());
                }
            }
        }
        acc
    }

    /// Coordinates of a Z-weight on the restricted simple roots, if integral.
    pub fn z_coordinates(&self, wt: &[BigRational]) -> Option<Vec<BigRational>> {
        integral_coordinates(&self.z_simple, wt)
    }

    /// `mu <= nu` iff `nu - mu` is a non-negative integral combination of the
    /// restricted simple roots; `None` when incomparable.
    pub fn z_order_compare(&self, mu: &[BigRational], nu: &[BigRational]) -> Option<Ordering> {
        let diff: Weight = nu.iter().zip(mu).map(|(a, b)| a - b).collect();
        if is_zero_weight(&diff) {
            return Some(Ordering::Equal);
        }
        let x = self.z_coordinates(&diff)?;
        if x.iter().all(|q| !q.is_negative()) {
            Some(Ordering::Less)
        } else if x.iter().all(|q| !q.is_positive()) {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// PBW monomials of U(r_ψ^-) of total degree at most `max_degree`, odd
    /// exponents at most 1, listed with their Z-weights.
    pub fn r_minus_monomials(&self, rd: &RootDatum, max_degree: u32) -> Vec<(PbwMonomial, Weight)> {
        let mut out = Vec::new();
        let mut exps = vec![0u32; rd.dim];
        self.enumerate(rd, 0, max_degree, &mut exps, &mut out);
        out
    }

    fn enumerate(
        &self,
        rd: &RootDatum,
        pos: usize,
        budget: u32,
        exps: &mut Vec<u32>,
        out: &mut Vec<(PbwMonomial, Weight)>,
    ) {
        if pos == self.r_minus.len() {
            let m = PbwMonomial::from_exponents(exps.clone());
            let w = self.z_weight_of_monomial(rd, &m);
            out.push((m, w));
            return;
        }
        let i = self.r_minus[pos];
        let cap = if rd.parity[i].is_odd() { budget.min(1) } else { budget };
        for e in 0..=cap {
            exps[i] = e;
            self.enumerate(rd, pos + 1, budget - e, exps, out);
        }
        exps[i] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::sl_super;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn sl12_roots() {
        let g = sl_super(1, 2).unwrap();
        let rd = RootDatum::sl12(&g).unwrap();
        assert_eq!(rd.root_of("x1").unwrap(), &vec![q(2), q(0)]);
        assert_eq!(rd.root_of("x2").unwrap(), &vec![q(-1), q(1)]);
        assert_eq!(rd.root_of("x3").unwrap(), &vec![q(1), q(1)]);
        for (x, y) in [("x1", "y1"), ("x2", "y2"), ("x3", "y3")] {
            assert_eq!(rd.root_of(y).unwrap(), &neg_weight(rd.root_of(x).unwrap()));
        }
        let labels = |v: &[usize]| v.iter().map(|&i| g.label(i)).collect::<Vec<_>>();
        assert_eq!(labels(rd.simple()), ["x1", "x2"]);
        assert_eq!(labels(&rd.even_simple()), ["x1"]);
        assert_eq!(labels(&rd.g_minus_one()), ["y2", "y3"]);
    }

    #[test]
    fn inferred_simple_roots_match_declared() {
        let g = sl_super(1, 2).unwrap();
        let inferred = RootDatum::root_decomposition(&g, &["h", "z"]).unwrap();
        assert_eq!(inferred, RootDatum::sl12(&g).unwrap());
    }

    #[test]
    fn abelian_has_no_roots() {
        let g = LieSuperalgebra::from_structure_constants(
            vec!["t".into()],
            vec![Parity::Even],
            crate::field::ParamSet::empty(),
            &[],
        )
        .unwrap();
        let rd = RootDatum::root_decomposition(&g, &["t"]).unwrap();
        assert_eq!(rd.roots().count(), 0);
        assert_eq!(rd.exterior_weights(), vec![vec![q(0)]]);
    }

    #[test]
    fn non_eigenvector_is_rejected() {
        let g = sl_super(1, 2).unwrap();
        // ad x1 maps y3 to y2, so y3 is not an eigenvector.
        let err = RootDatum::root_decomposition(&g, &["x1"]).unwrap_err();
        assert!(matches!(err, Error::NotAdEigenbasis(_)));
        assert_eq!(RootDatum::root_decomposition(&g, &["h", "x1"]), Err(Error::CartanNotAbelian));
    }

    #[test]
    fn exterior_weights_of_sl12() {
        let g = sl_super(1, 2).unwrap();
        let rd = RootDatum::sl12(&g).unwrap();
        let p = rd.exterior_weights();
        assert_eq!(p.len(), 4);
        assert_eq!(p[0], vec![q(0), q(0)]);
        let both = add_weights(rd.root_of("y2").unwrap(), rd.root_of("y3").unwrap());
        assert_eq!(p[3], both);
    }
}
