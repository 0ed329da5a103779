//! Finite-dimensional modules over nilpotent Lie superalgebras: the simple
//! modules I(ψ) induced from a polarization, and the decomposition of a
//! module into generalized ψ-eigenspaces.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use rand_core::RngCore;

use crate::algebra::{LieElement, LieSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::field::FieldElement;
use crate::linalg::{echelon_basis, in_span, Matrix};

/// A representation on `dim` homogeneous basis vectors, one action matrix per
/// basis element of the algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModule {
    algebra: u64,
    action: Vec<Matrix>,
    grading: Vec<Parity>,
}

impl FiniteModule {
    /// Validates shapes, the Z2-grading and the bracket relations.
    pub fn new(g: &LieSuperalgebra, action: Vec<Matrix>, grading: Vec<Parity>) -> Result<FiniteModule> {
        let dim = grading.len();
        if action.len() != g.dim() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for {} generators",
                action.len(),
                g.dim()
            )));
        }
        for (x, m) in action.iter().enumerate() {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidModule(format!("`{}` acts by a non-{dim}x{dim} matrix", g.label(x))));
            }
            for i in 0..dim {
                for j in 0..dim {
                    if !m[(i, j)].is_zero() && grading[i] != grading[j].plus(g.parity(x)) {
                        return Err(Error::InvalidModule(format!("`{}` does not respect the grading", g.label(x))));
                    }
                }
            }
        }
        let module = FiniteModule { algebra: g.fingerprint(), action, grading };
        for x in 0..g.dim() {
            for y in 0..g.dim() {
                let sign = FieldElement::from_int(g.parity(x).sign(g.parity(y)));
                let lhs = module.action[x]
                    .mul(&module.action[y])
                    .sub(&module.action[y].mul(&module.action[x]).scale(&sign));
                let rhs = module.act_lie(g.bracket_basis(x, y));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "relation [{}, {}] fails",
                        g.label(x),
                        g.label(y)
                    )));
                }
            }
        }
        Ok(module)
    }

    /// The trivial one-dimensional even module.
    pub fn trivial(g: &LieSuperalgebra) -> FiniteModule {
        FiniteModule {
            algebra: g.fingerprint(),
            action: vec![Matrix::zeros(1, 1); g.dim()],
            grading: vec![Parity::Even],
        }
    }

    pub fn dim(&self) -> usize {
        self.grading.len()
    }

    pub fn grading(&self) -> &[Parity] {
        &self.grading
    }

    pub fn action(&self, x: usize) -> &Matrix {
        &self.action[x]
    }

    /// Matrix of a linear combination of generators.
    pub fn act_lie(&self, e: &LieElement) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (k, c) in e.terms() {
            m = m.add(&self.action[k].scale(c));
        }
        m
    }

    /// The same action with the grading flipped.
    pub fn parity_shift(&self) -> FiniteModule {
        FiniteModule {
            grading: self.grading.iter().map(|p| p.plus(Parity::Odd)).collect(),
            ..self.clone()
        }
    }

    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch);
        }
        let (n, m) = (self.dim(), other.dim());
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let mut s = Matrix::zeros(n + m, n + m);
                for i in 0..n {
                    for j in 0..n {
                        s[(i, j)] = a[(i, j)].clone();
                    }
                }
                for i in 0..m {
                    for j in 0..m {
                        s[(n + i, n + j)] = b[(i, j)].clone();
                    }
                }
                s
            })
            .collect();
        let grading = self.grading.iter().chain(&other.grading).copied().collect();
        Ok(FiniteModule { algebra: self.algebra, action, grading })
    }

    /// Smallest submodule containing `v`.
    pub fn cyclic_submodule(&self, v: &[FieldElement]) -> Vec<Vec<FieldElement>> {
        let mut basis = echelon_basis(&[v.to_vec()], self.dim());
        let mut frontier = vec![v.to_vec()];
        while let Some(u) = frontier.pop() {
            for a in &self.action {
                let w = a.mul_vec(&u);
                if !in_span(&basis, &w) {
                    let mut rows = basis.clone();
                    rows.push(w.clone());
                    basis = echelon_basis(&rows, self.dim());
                    frontier.push(w);
                }
            }
        }
        basis
    }

    /// `(ρ(x) - ψ(x))` is nilpotent for every even generator `x`.
    pub fn is_locally_psi_nilpotent(&self, n: &LieSuperalgebra, psi: &Character) -> bool {
        n.even_indices()
            .into_iter()
            .all(|x| self.action[x].shift(&psi.values[x]).pow(self.dim()).is_zero())
    }

    /// Matrix table: a `dim`/`grading` header followed by one line per generator.
    pub fn to_text(&self, g: &LieSuperalgebra) -> String {
        let mut out = String::new();
        writeln!(out, "dim: {}", self.dim()).unwrap();
        let grading: Vec<&str> = self.grading.iter().map(|p| p.name()).collect();
        writeln!(out, "grading: {}", grading.join(" ")).unwrap();
        for (x, m) in self.action.iter().enumerate() {
            let rows: Vec<String> = (0..m.rows())
                .map(|i| {
                    m.row(i)
                        .iter()
                        .map(|c| c.to_string_with(g.params()))
                        .collect::<Vec<_>>()
                        .join(", ")
                })
                .collect();
            writeln!(out, "{}: [{}]", g.label(x), rows.join("; ")).unwrap();
        }
        out
    }
}

/// A linear functional on a nilpotent superalgebra, vanishing on the odd part
/// and on the derived even part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    values: Vec<FieldElement>,
}

impl Character {
    pub fn new(n: &LieSuperalgebra, values: &[(&str, FieldElement)]) -> Result<Character> {
        let mut v = vec![FieldElement::zero(); n.dim()];
        for (label, c) in values {
            v[n.index(label)?] = c.clone();
        }
        Self::from_values(n, v)
    }

    pub fn from_values(n: &LieSuperalgebra, values: Vec<FieldElement>) -> Result<Character> {
        if values.len() != n.dim() {
            return Err(Error::InvalidInput("character has the wrong length".into()));
        }
        for i in n.odd_indices() {
            if !values[i].is_zero() {
                return Err(Error::NotInL(format!("nonzero on odd `{}`", n.label(i))));
            }
        }
        let psi = Character { values };
        let even = n.even_indices();
        for &x in &even {
            for &y in &even {
                if !psi.eval(n.bracket_basis(x, y)).is_zero() {
                    return Err(Error::NotInL(format!("nonzero on [{}, {}]", n.label(x), n.label(y))));
                }
            }
        }
        Ok(psi)
    }

    pub fn zero(n: &LieSuperalgebra) -> Character {
        Character { values: vec![FieldElement::zero(); n.dim()] }
    }

    pub fn value(&self, i: usize) -> &FieldElement {
        &self.values[i]
    }

    pub fn eval(&self, e: &LieElement) -> FieldElement {
        e.terms().fold(FieldElement::zero(), |acc, (k, c)| &acc + &(c * &self.values[k]))
    }
}

/// The lower central series reaches zero.
pub fn is_nilpotent(n: &LieSuperalgebra) -> bool {
    let dim = n.dim();
    let to_vec = |e: &LieElement| (0..dim).map(|k| e.coeff(k)).collect::<Vec<_>>();
    let mut current: Vec<Vec<FieldElement>> = (0..dim)
        .map(|i| to_vec(&LieElement::basis(i)))
        .collect();
    for _ in 0..=dim {
        let mut next = Vec::new();
        for x in 0..dim {
            for v in &current {
                let mut e = LieElement::zero();
                for (k, c) in v.iter().enumerate() {
                    e.add_term(k, c.clone());
                }
                next.push(to_vec(&n.bracket_lie(&LieElement::basis(x), &e)));
            }
        }
        current = echelon_basis(&next, dim);
        if current.is_empty() {
            return true;
        }
    }
    false
}

fn is_polarization(n: &LieSuperalgebra, psi: &Character, odd: &[usize]) -> bool {
    for &s in odd {
        for &t in odd {
            if !psi.eval(n.bracket_basis(s, t)).is_zero() {
                return false;
            }
        }
        for x in n.even_indices() {
            if n.bracket_basis(x, s).terms().any(|(k, _)| !odd.contains(&k)) {
                return false;
            }
        }
    }
    true
}

/// Every polarization `n0 + span(S)` with `S` a set of odd basis elements of
/// maximum size, in lexicographic order of `S`.
pub fn all_maximal_polarizations(n: &LieSuperalgebra, psi: &Character) -> Result<Vec<Vec<usize>>> {
    if !is_nilpotent(n) {
        return Err(Error::Unsupported("algebra is not nilpotent".into()));
    }
    let odd = n.odd_indices();
    if odd.len() > 20 {
        return Err(Error::Unsupported("too many odd generators for exhaustive search".into()));
    }
    let mut best: Vec<Vec<usize>> = Vec::new();
    let mut best_size = 0;
    for mask in 0u32..1 << odd.len() {
        let s: Vec<usize> = (0..odd.len()).filter(|b| mask >> b & 1 == 1).map(|b| odd[b]).collect();
        if s.len() < best_size || !is_polarization(n, psi, &s) {
            continue;
        }
        if s.len() > best_size {
            best_size = s.len();
            best.clear();
        }
        best.push(s);
    }
    best.sort();
    let even = n.even_indices();
    Ok(best
        .into_iter()
        .map(|s| {
            let mut h: Vec<usize> = even.iter().copied().chain(s).collect();
            h.sort_unstable();
            h
        })
        .collect())
}

/// A polarization for ψ: the even part plus a maximum-size admissible set of
/// odd basis elements.
pub fn choose_polarization(n: &LieSuperalgebra, psi: &Character) -> Result<Vec<usize>> {
    Ok(all_maximal_polarizations(n, psi)?.swap_remove(0))
}

/// I(ψ) induced from the polarization chosen by [`choose_polarization`].
pub fn induce_i_psi(n: &LieSuperalgebra, psi: &Character) -> Result<FiniteModule> {
    let h = choose_polarization(n, psi)?;
    induce_from(n, psi, &h)
}

/// `U(n) ⊗_{U(h)} C_ψ` for an explicit polarization `h`. The basis is the
/// odd monomials in the complement of `h`, indexed by bitmask.
pub fn induce_from(n: &LieSuperalgebra, psi: &Character, h: &[usize]) -> Result<FiniteModule> {
    let complement: Vec<usize> = (0..n.dim()).filter(|i| !h.contains(i)).collect();
    if complement.iter().any(|&i| !n.parity(i).is_odd()) || !is_polarization(n, psi, &n.odd_indices().into_iter().filter(|i| h.contains(i)).collect::<Vec<_>>()) {
        return Err(Error::InvalidInput("not a polarization for this character".into()));
    }
    let k = complement.len();
    let order: Vec<usize> = complement.iter().chain(h).copied().collect();
    let g2 = n.reordered(&order)?;
    let dim = 1usize << k;
    let mut action = vec![Matrix::zeros(dim, dim); n.dim()];
    for (new_x, &x) in order.iter().enumerate() {
        for col in 0..dim {
            let mut word = vec![new_x];
            word.extend((0..k).filter(|b| col >> b & 1 == 1));
            for (m, c) in g2.normal_form(&word, FieldElement::one()).terms() {
                let e = m.exponents();
                let row: usize = (0..k).filter(|&b| e[b] == 1).map(|b| 1 << b).sum();
                let mut coeff = c.clone();
                for (p, &ep) in e.iter().enumerate().skip(k) {
                    if ep > 0 {
                        coeff = &coeff * &psi.values[order[p]].pow(ep);
                    }
                }
                action[x][(row, col)] = &action[x][(row, col)] + &coeff;
            }
        }
    }
    let grading = (0..dim).map(|b| Parity::from_bit(b.count_ones())).collect();
    FiniteModule::new(n, action, grading)
}

// Univariate polynomials over the coefficient field, ascending coefficients.

fn utrim(mut p: Vec<FieldElement>) -> Vec<FieldElement> {
    while p.last().is_some_and(FieldElement::is_zero) {
        p.pop();
    }
    p
}

fn umonic(p: Vec<FieldElement>) -> Vec<FieldElement> {
    let p = utrim(p);
    match p.last() {
        Some(lc) => {
            let inv = lc.inv().expect("nonzero");
            p.iter().map(|c| c * &inv).collect()
        }
        None => p,
    }
}

fn udivrem(a: &[FieldElement], b: &[FieldElement]) -> (Vec<FieldElement>, Vec<FieldElement>) {
    let b = utrim(b.to_vec());
    let mut r = utrim(a.to_vec());
    let lc_inv = b.last().expect("division by zero").inv().expect("nonzero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![FieldElement::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let f = r.last().unwrap() * &lc_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] = &r[shift + i] - &(&f * bc);
        }
        q[shift] = f;
        r = utrim(r);
    }
    (q, r)
}

fn ugcd(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let (mut a, mut b) = (utrim(a.to_vec()), utrim(b.to_vec()));
    while !b.is_empty() {
        let r = udivrem(&a, &b).1;
        a = b;
        b = r;
    }
    umonic(a)
}

fn uderiv(p: &[FieldElement]) -> Vec<FieldElement> {
    utrim(p.iter().enumerate().skip(1).map(|(i, c)| c * &FieldElement::from_int(i as i64)).collect())
}

fn usub(a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let n = a.len().max(b.len());
    let z = FieldElement::zero();
    utrim((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect())
}

/// Squarefree factorization `f = Π f_i^i` of a monic polynomial (Yun).
fn squarefree(f: &[FieldElement]) -> Vec<(Vec<FieldElement>, usize)> {
    let f = umonic(f.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    let df = uderiv(&f);
    let a0 = ugcd(&f, &df);
    let mut b = udivrem(&f, &a0).0;
    let c = udivrem(&df, &a0).0;
    let mut d = usub(&c, &uderiv(&b));
    let mut out = Vec::new();
    let mut i = 1;
    while b.len() > 1 {
        let a = ugcd(&b, &d);
        let nb = udivrem(&b, &a).0;
        let nc = udivrem(&d, &a).0;
        if a.len() > 1 {
            out.push((a, i));
        }
        d = usub(&nc, &uderiv(&nb));
        b = nb;
        i += 1;
    }
    out
}

fn poly_of_matrix(p: &[FieldElement], a: &Matrix) -> Matrix {
    let mut acc = Matrix::zeros(a.rows(), a.cols());
    for c in p.iter().rev() {
        acc = acc.mul(a).add(&Matrix::identity(a.rows()).scale(c));
    }
    acc
}

/// One coordinate of a block key: an eigenvalue in the field, or a factor of
/// the characteristic polynomial that does not split here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Eigen {
    Value(FieldElement),
    Factor(Vec<FieldElement>),
}

/// A generalized eigenspace: eigen-data for each even generator (in basis
/// order) and a basis of the subspace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub key: Vec<Eigen>,
    pub basis: Vec<Vec<FieldElement>>,
}

impl Block {
    /// The block's character values, when every eigenvalue lies in the field.
    pub fn values(&self) -> Option<Vec<FieldElement>> {
        self.key
            .iter()
            .map(|e| match e {
                Eigen::Value(v) => Some(v.clone()),
                Eigen::Factor(_) => None,
            })
            .collect()
    }
}

/// Matrix of `a` restricted to the invariant subspace spanned by `basis`.
fn restrict(a: &Matrix, basis: &[Vec<FieldElement>]) -> Result<Matrix> {
    let dim = a.rows();
    let b = Matrix::from_columns(basis, dim);
    let cols = basis
        .iter()
        .map(|v| {
            b.solve(&a.mul_vec(v))
                .ok_or_else(|| Error::InvalidModule("subspace is not invariant".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(&cols, basis.len()))
}

fn lift(basis: &[Vec<FieldElement>], coords: &[FieldElement]) -> Vec<FieldElement> {
    let mut v = vec![FieldElement::zero(); basis[0].len()];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (vi, bi) in v.iter_mut().zip(b) {
            *vi = &*vi + &(bi * c);
        }
    }
    v
}

/// Split `basis` into generalized eigenspaces of `a`.
fn split(a: &Matrix, basis: &[Vec<FieldElement>]) -> Result<Vec<(Eigen, Vec<Vec<FieldElement>>)>> {
    let r = restrict(a, basis)?;
    let mut out = Vec::new();
    let mut push = |key: Eigen, p: &[FieldElement], mult: usize| {
        let ker = poly_of_matrix(p, &r).pow(mult).kernel();
        let sub: Vec<Vec<FieldElement>> = ker.iter().map(|c| lift(basis, c)).collect();
        out.push((key, sub));
    };
    for (f, mult) in squarefree(&r.charpoly()) {
        match f.len() - 1 {
            1 => push(Eigen::Value(-&f[0]), &f, mult),
            2 => {
                let disc = &(&f[1] * &f[1]) - &(&f[0] * &FieldElement::from_int(4));
                match disc.sqrt() {
                    Some(s) => {
                        let half = FieldElement::ratio(1, 2);
                        for root in [&(&(-&f[1]) + &s) * &half, &(&(-&f[1]) - &s) * &half] {
                            let lin = vec![-&root, FieldElement::one()];
                            push(Eigen::Value(root), &lin, mult);
                        }
                    }
                    None => push(Eigen::Factor(f.clone()), &f, mult),
                }
            }
            _ => push(Eigen::Factor(f.clone()), &f, mult),
        }
    }
    Ok(out)
}

/// Decompose `v` into the joint generalized eigenspaces of the even part.
/// Every block is checked to be closed under the whole algebra.
pub fn psi_block_decomposition(v: &FiniteModule, n: &LieSuperalgebra) -> Result<Vec<Block>> {
    if v.algebra != n.fingerprint() {
        return Err(Error::AlgebraMismatch);
    }
    let identity: Vec<Vec<FieldElement>> = (0..v.dim()).map(|j| Matrix::identity(v.dim()).column(j)).collect();
    let mut blocks = vec![Block { key: Vec::new(), basis: identity }];
    for x in n.even_indices() {
        let mut next = Vec::new();
        for b in blocks {
            for (e, sub) in split(&v.action[x], &b.basis)? {
                let mut key = b.key.clone();
                key.push(e);
                next.push(Block { key, basis: sub });
            }
        }
        blocks = next;
    }
    for b in &blocks {
        for (x, a) in v.action.iter().enumerate() {
            for u in &b.basis {
                if !in_span(&b.basis, &a.mul_vec(u)) {
                    return Err(Error::InvalidModule(format!(
                        "generalized eigenspace is not stable under `{}`",
                        n.label(x)
                    )));
                }
            }
        }
    }
    Ok(blocks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    /// Basis of a proper nonzero submodule.
    NotSimple(Vec<Vec<FieldElement>>),
    /// Every sampled vector generated the whole module.
    ProbablySimple,
}

fn random_field(rng: &mut impl RngCore) -> FieldElement {
    FieldElement::from_int((rng.next_u32() % 201) as i64 - 100)
}

/// Decide whether `v` has no proper graded submodule.
///
/// A nonzero graded submodule meets the joint eigenspace `E` of the even part
/// in a homogeneous vector, so when each parity part of `E` is at most a line
/// the answer is exact. Otherwise `samples` random homogeneous vectors of `E`
/// are tried.
pub fn check_simplicity(
    v: &FiniteModule,
    n: &LieSuperalgebra,
    rng: &mut impl RngCore,
    samples: usize,
) -> Result<Simplicity> {
    let blocks = psi_block_decomposition(v, n)?;
    if blocks.len() > 1 {
        return Ok(Simplicity::NotSimple(blocks[0].basis.clone()));
    }
    let full = v.dim();
    let values = blocks[0].values();
    let mut exact = values.is_some();
    let mut candidates: Vec<Vec<Vec<FieldElement>>> = Vec::new();
    for p in [Parity::Even, Parity::Odd] {
        let mut rows: Vec<Vec<FieldElement>> = Vec::new();
        if let Some(vals) = &values {
            for (x, lambda) in n.even_indices().into_iter().zip(vals) {
                let m = v.action[x].shift(lambda);
                rows.extend((0..full).map(|i| m.row(i).to_vec()));
            }
        }
        for (i, q) in v.grading.iter().enumerate() {
            if *q != p {
                let mut r = vec![FieldElement::zero(); full];
                r[i] = FieldElement::one();
                rows.push(r);
            }
        }
        let e = if rows.is_empty() {
            (0..full).map(|j| Matrix::identity(full).column(j)).collect()
        } else {
            Matrix::from_rows(rows).kernel()
        };
        if e.len() > 1 {
            exact = false;
        }
        candidates.push(e);
    }
    let proper = |u: &[FieldElement]| {
        let span = v.cyclic_submodule(u);
        (span.len() < full).then_some(span)
    };
    for e in &candidates {
        if e.len() == 1 {
            if let Some(s) = proper(&e[0]) {
                return Ok(Simplicity::NotSimple(s));
            }
        }
    }
    if exact {
        return Ok(Simplicity::Simple);
    }
    for e in candidates.iter().filter(|e| e.len() > 1) {
        for _ in 0..samples {
            let coeffs: Vec<FieldElement> = e.iter().map(|_| random_field(rng)).collect();
            let u = lift(e, &coeffs);
            if u.iter().all(FieldElement::is_zero) {
                continue;
            }
            if let Some(s) = proper(&u) {
                return Ok(Simplicity::NotSimple(s));
            }
        }
    }
    Ok(Simplicity::ProbablySimple)
}

/// Search for an isomorphism `v -> w`, also allowing `v ≅ Πw`. Returns the
/// matrix and whether the parity is shifted.
pub fn find_isomorphism(
    v: &FiniteModule,
    w: &FiniteModule,
    rng: &mut impl RngCore,
    samples: usize,
) -> Result<Option<(Matrix, bool)>> {
    if v.algebra != w.algebra {
        return Err(Error::AlgebraMismatch);
    }
    let (n, m) = (v.dim(), w.dim());
    if n != m {
        return Ok(None);
    }
    for shifted in [false, true] {
        // Unknowns: T[(i, j)] for grading-compatible (i, j).
        let vars: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| (w.grading[i] == v.grading[j]) != shifted)
            .collect();
        let mut rows = Vec::new();
        for (a, b) in v.action.iter().zip(&w.action) {
            // (T a - b T)[(i, j)] = Σ_k T[i,k] a[k,j] - b[i,k] T[k,j]
            for i in 0..m {
                for j in 0..n {
                    let row: Vec<FieldElement> = vars
                        .iter()
                        .map(|&(r, c)| {
                            let mut e = FieldElement::zero();
                            if r == i {
                                e = &e + &a[(c, j)];
                            }
                            if c == j {
                                e = &e - &b[(i, r)];
                            }
                            e
                        })
                        .collect();
                    if row.iter().any(|e| !e.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
        let sols = if rows.is_empty() {
            (0..vars.len()).map(|j| Matrix::identity(vars.len()).column(j)).collect()
        } else {
            Matrix::from_rows(rows).kernel()
        };
        if sols.is_empty() {
            continue;
        }
        let to_matrix = |coeffs: &[FieldElement]| {
            let flat = lift(&sols, coeffs);
            let mut t = Matrix::zeros(m, n);
            for (&(i, j), c) in vars.iter().zip(flat) {
                t[(i, j)] = c;
            }
            t
        };
        let mut trials: Vec<Vec<FieldElement>> = (0..sols.len())
            .map(|k| (0..sols.len()).map(|l| FieldElement::from_int((k == l) as i64)).collect())
            .collect();
        trials.push(vec![FieldElement::one(); sols.len()]);
        for _ in 0..samples {
            trials.push((0..sols.len()).map(|_| random_field(rng)).collect());
        }
        for c in trials {
            let t = to_matrix(&c);
            if !t.determinant().is_zero() {
                return Ok(Some((t, shifted)));
            }
        }
    }
    Ok(None)
}
