//! Sparse multivariate polynomials over Q(ζₙ).
//!
//! [`SparsePoly`] is the arithmetic engine shared by every polynomial family in
//! the crate: the x- and y-space polynomials wrapped by [`Poly`], and the
//! generator-ring polynomials of the `ideal` module. Terms live in a hash map
//! keyed by exponent vector; iteration in canonical order sorts on demand.

use std::borrow::Borrow;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rustc_hash::FxHashMap;

use crate::cyclotomic::{self, CycElement, CycField};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Integer exponent vector. Used both as a monomial exponent (entries `>= 0`)
/// and as a general lattice vector.
///
/// Ordering is graded lexicographic: total degree first, then entries
/// compared left to right.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExpVec(Vec<i64>);

impl ExpVec {
    pub fn new(entries: Vec<i64>) -> Self {
        ExpVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        ExpVec(vec![0; n])
    }

    /// The standard basis vector `e_i` of length `n`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        ExpVec(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> ExpVec {
        ExpVec(self.0.iter().map(|a| a * k).collect())
    }

    pub fn add_scaled(&mut self, other: &ExpVec, k: i64) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += k * b;
        }
    }
}

impl From<Vec<i64>> for ExpVec {
    fn from(v: Vec<i64>) -> Self {
        ExpVec(v)
    }
}

impl Borrow<[i64]> for ExpVec {
    fn borrow(&self) -> &[i64] {
        &self.0
    }
}

impl std::ops::Index<usize> for ExpVec {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Ord for ExpVec {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExpVec {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for ExpVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

type Terms = FxHashMap<ExpVec, Vec<Rational>>;

/// Polynomial in `nvars` variables with coefficients in Q(ζₙ).
#[derive(Clone)]
pub struct SparsePoly {
    field: Arc<CycField>,
    nvars: usize,
    terms: Terms,
}

impl PartialEq for SparsePoly {
    fn eq(&self, other: &Self) -> bool {
        self.field.order() == other.field.order() && self.nvars == other.nvars && self.terms == other.terms
    }
}

impl Eq for SparsePoly {}

impl SparsePoly {
    pub fn zero(field: Arc<CycField>, nvars: usize) -> Self {
        SparsePoly { field, nvars, terms: Terms::default() }
    }

    pub fn constant(field: Arc<CycField>, nvars: usize, coeff: Vec<Rational>) -> Self {
        Self::monomial(field, ExpVec::zeros(nvars), coeff)
    }

    pub fn one(field: Arc<CycField>, nvars: usize) -> Self {
        let c = field.one_coords();
        Self::constant(field, nvars, c)
    }

    pub fn var(field: Arc<CycField>, nvars: usize, i: usize) -> Self {
        let c = field.one_coords();
        Self::monomial(field, ExpVec::unit(nvars, i), c)
    }

    pub fn monomial(field: Arc<CycField>, exp: ExpVec, coeff: Vec<Rational>) -> Self {
        let nvars = exp.len();
        let mut p = Self::zero(field, nvars);
        p.add_term(exp, &coeff);
        p
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in unspecified order.
    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &[Rational])> {
        self.terms.iter().map(|(e, c)| (e, c.as_slice()))
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(&ExpVec, &[Rational])> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| b.0.cmp(a.0));
        v
    }

    pub fn coeff(&self, exp: &[i64]) -> Option<&[Rational]> {
        self.terms.get(exp).map(Vec::as_slice)
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(ExpVec::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExpVec::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// `self += coeff * x^exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: ExpVec, coeff: &[Rational]) {
        debug_assert_eq!(exp.len(), self.nvars);
        if CycField::is_zero(coeff) {
            return;
        }
        match self.terms.get_mut(exp.entries()) {
            Some(c) => {
                CycField::add_assign(c, coeff);
                if CycField::is_zero(c) {
                    self.terms.remove(exp.entries());
                }
            }
            None => {
                self.terms.insert(exp, coeff.to_vec());
            }
        }
    }

    fn assert_compatible(&self, other: &Self) {
        assert_eq!(self.field.order(), other.field.order(), "cyclotomic order mismatch");
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), &CycField::neg(c));
        }
        out
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), CycField::neg(c))).collect();
        SparsePoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn scale(&self, coeff: &[Rational]) -> Self {
        if CycField::is_zero(coeff) {
            return Self::zero(self.field.clone(), self.nvars);
        }
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.mul(c, coeff))).collect();
        SparsePoly { field: self.field.clone(), nvars: self.nvars, terms }
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.scale(&self.field.rational_coords(r.clone()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_compatible(other);
        let (a, b) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        let mut out = Terms::default();
        out.reserve(b.len());
        let mut key = vec![0i64; self.nvars];
        for (ea, ca) in a.terms.iter() {
            for (eb, cb) in b.terms.iter() {
                for (k, (x, y)) in key.iter_mut().zip(ea.0.iter().zip(&eb.0)) {
                    *k = x + y;
                }
                match out.get_mut(key.as_slice()) {
                    Some(acc) => self.field.mul_add_into(acc, ca, cb),
                    None => {
                        out.insert(ExpVec(key.clone()), self.field.mul(ca, cb));
                    }
                }
            }
        }
        out.retain(|_, c| !CycField::is_zero(c));
        SparsePoly { field: self.field.clone(), nvars: self.nvars, terms: out }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.field.clone(), self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Applies `f` to every term, summing the images.
    pub fn map_terms(
        &self,
        nvars: usize,
        mut f: impl FnMut(&ExpVec, &[Rational]) -> Option<(ExpVec, Vec<Rational>)>,
    ) -> Self {
        let mut out = Self::zero(self.field.clone(), nvars);
        for (e, c) in self.terms() {
            if let Some((e2, c2)) = f(e, c) {
                out.add_term(e2, &c2);
            }
        }
        out
    }

    /// Substitutes variable `i` by `forms[i]` and expands, using a Horner
    /// scheme on each variable in turn.
    pub fn substitute(&self, forms: &[SparsePoly]) -> SparsePoly {
        assert_eq!(forms.len(), self.nvars, "one substitution per variable");
        let out_vars = forms.first().map_or(0, SparsePoly::nvars);
        let mut terms: Vec<(&ExpVec, &[Rational])> = self.terms().collect();
        subst_rec(&self.field, &mut terms, 0, forms, out_vars)
    }
}

fn subst_rec(
    field: &Arc<CycField>,
    terms: &mut [(&ExpVec, &[Rational])],
    var: usize,
    forms: &[SparsePoly],
    out_vars: usize,
) -> SparsePoly {
    if terms.is_empty() {
        return SparsePoly::zero(field.clone(), out_vars);
    }
    if var == forms.len() {
        let mut acc = field.zero_coords();
        for (_, c) in terms.iter() {
            CycField::add_assign(&mut acc, c);
        }
        return SparsePoly::constant(field.clone(), out_vars, acc);
    }
    terms.sort_by_key(|(e, _)| e[var]);
    // groups[k] holds the terms whose exponent in `var` equals the group key
    let mut groups: Vec<(i64, SparsePoly)> = Vec::new();
    let mut start = 0;
    while start < terms.len() {
        let k = terms[start].0[var];
        let mut end = start;
        while end < terms.len() && terms[end].0[var] == k {
            end += 1;
        }
        let inner = subst_rec(field, &mut terms[start..end], var + 1, forms, out_vars);
        groups.push((k, inner));
        start = end;
    }
    // Horner: acc = (((r_top) L + r_{top-1}) L + ...) L^{k_min}
    let form = &forms[var];
    let mut acc = SparsePoly::zero(field.clone(), out_vars);
    let mut cur = groups.last().unwrap().0;
    while let Some((k, r)) = groups.pop() {
        while cur > k {
            acc = acc.mul(form);
            cur -= 1;
        }
        acc = acc.add(&r);
    }
    for _ in 0..cur {
        acc = acc.mul(form);
    }
    acc
}

/// Which variable family a [`Poly`]'s exponents refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// x₀, …, x_{n−1}
    X,
    /// The eigenbasis yᵢ = Σⱼ ζⁱʲ xⱼ.
    Y,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::X => "x",
            Basis::Y => "y",
        }
    }
}

/// Polynomial in n variables over Q(ζₙ), tagged with its variable basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    basis: Basis,
    inner: SparsePoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
    Scale,
}

pub enum Operand<'a> {
    Poly(&'a Poly),
    Scalar(&'a CycElement),
}

/// Ring operations with basis and order checking.
pub fn poly_arith(op: PolyOp, f: &Poly, g: Operand<'_>) -> Result<Poly> {
    match (op, g) {
        (PolyOp::Scale, Operand::Scalar(c)) => f.scale(c),
        (PolyOp::Scale, Operand::Poly(_)) => Err(Error::LengthMismatch { expected: 0, found: 1 }),
        (_, Operand::Scalar(c)) => {
            let g = Poly::constant(f.basis, c);
            poly_arith(op, f, Operand::Poly(&g))
        }
        (PolyOp::Add, Operand::Poly(g)) => f.checked_add(g),
        (PolyOp::Sub, Operand::Poly(g)) => f.checked_sub(g),
        (PolyOp::Mul, Operand::Poly(g)) => f.checked_mul(g),
    }
}

impl Poly {
    pub fn from_sparse(basis: Basis, inner: SparsePoly) -> Self {
        assert_eq!(inner.nvars(), inner.field().order(), "Poly has one variable per root of unity");
        Poly { basis, inner }
    }

    pub fn zero(n: usize, basis: Basis) -> Result<Self> {
        Ok(Poly { basis, inner: SparsePoly::zero(cyclotomic::field(n)?, n) })
    }

    pub fn one(n: usize, basis: Basis) -> Result<Self> {
        Ok(Poly { basis, inner: SparsePoly::one(cyclotomic::field(n)?, n) })
    }

    pub fn var(n: usize, basis: Basis, i: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { name: format!("{}{}", basis.name(), i), pos: 0, limit: n });
        }
        Ok(Poly { basis, inner: SparsePoly::var(cyclotomic::field(n)?, n, i) })
    }

    pub fn constant(basis: Basis, c: &CycElement) -> Self {
        let n = c.order();
        Poly { basis, inner: SparsePoly::constant(c.field().clone(), n, c.coords().to_vec()) }
    }

    /// `coeff * basis^exp`; the exponent must be nonnegative with length `n`.
    pub fn monomial(basis: Basis, exp: ExpVec, coeff: &CycElement) -> Result<Self> {
        let n = coeff.order();
        if exp.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: exp.len() });
        }
        if !exp.is_nonnegative() {
            return Err(Error::NegativeEntry(exp.to_string()));
        }
        Ok(Poly { basis, inner: SparsePoly::monomial(coeff.field().clone(), exp, coeff.coords().to_vec()) })
    }

    pub fn n(&self) -> usize {
        self.inner.nvars()
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn sparse(&self) -> &SparsePoly {
        &self.inner
    }

    pub fn into_sparse(self) -> SparsePoly {
        self.inner
    }

    pub fn field(&self) -> &Arc<CycField> {
        self.inner.field()
    }

    pub fn len(&self) -> usize {
        self.inner.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.inner.total_degree()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.inner.is_homogeneous()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> Vec<(ExpVec, CycElement)> {
        self.inner
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| (e.clone(), CycElement::from_coords(self.field().clone(), c.to_vec())))
            .collect()
    }

    /// Exponent vectors in canonical order.
    pub fn exponents(&self) -> Vec<ExpVec> {
        self.inner.sorted_terms().into_iter().map(|(e, _)| e.clone()).collect()
    }

    pub fn coeff(&self, exp: &ExpVec) -> CycElement {
        let coords = match self.inner.coeff(exp.entries()) {
            Some(c) => c.to_vec(),
            None => self.field().zero_coords(),
        };
        CycElement::from_coords(self.field().clone(), coords)
    }

    /// True when every coefficient lies in Z.
    pub fn has_integer_coeffs(&self) -> bool {
        self.inner.terms().all(|(_, c)| CycField::is_rational(c) && c[0].is_integer())
    }

    fn check(&self, other: &Poly) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::OrderMismatch { left: self.n(), right: other.n() });
        }
        if self.basis != other.basis {
            return Err(Error::BasisMismatch { expected: self.basis.name(), found: other.basis.name() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Poly { basis: self.basis, inner: self.inner.add(&other.inner) })
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Poly { basis: self.basis, inner: self.inner.sub(&other.inner) })
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check(other)?;
        Ok(Poly { basis: self.basis, inner: self.inner.mul(&other.inner) })
    }

    pub fn scale(&self, c: &CycElement) -> Result<Poly> {
        if c.order() != self.n() {
            return Err(Error::OrderMismatch { left: self.n(), right: c.order() });
        }
        Ok(Poly { basis: self.basis, inner: self.inner.scale(c.coords()) })
    }

    pub fn pow(&self, e: u32) -> Poly {
        Poly { basis: self.basis, inner: self.inner.pow(e) }
    }

    /// The first term (canonical order) where `self` and `other` differ.
    pub fn first_difference(&self, other: &Poly) -> Option<(ExpVec, CycElement, CycElement)> {
        let diff = self.inner.sub(&other.inner);
        let (e, _) = diff.sorted_terms().into_iter().next()?;
        Some((e.clone(), self.coeff(e), other.coeff(e)))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("incompatible polynomials")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("incompatible polynomials")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("incompatible polynomials")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { basis: self.basis, inner: self.inner.neg() }
    }
}

/// The two cyclic-shift derivations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    /// Σ x_{i−1} ∂/∂xᵢ
    D,
    /// Σ x_{i+1} ∂/∂xᵢ
    Delta,
}

impl Operator {
    /// Index shift of the operator in x-space, and the sign of ζ's exponent in y-space.
    fn direction(self) -> i64 {
        match self {
            Operator::D => -1,
            Operator::Delta => 1,
        }
    }
}

/// Applies D or Δ. In x-space this is the derivation itself; in y-space each
/// monomial y^α is an eigenvector with eigenvalue Σ αᵢ ζ^{±i}.
pub fn apply_operator(which: Operator, f: &Poly) -> Poly {
    let n = f.n();
    let field = f.field().clone();
    let dir = which.direction();
    let inner = match f.basis {
        Basis::X => {
            let mut out = SparsePoly::zero(field.clone(), n);
            for (e, c) in f.inner.terms() {
                for i in 0..n {
                    let a = e[i];
                    if a == 0 {
                        continue;
                    }
                    let target = (i as i64 + dir).rem_euclid(n as i64) as usize;
                    let mut e2 = e.clone();
                    e2.0[i] -= 1;
                    e2.0[target] += 1;
                    out.add_term(e2, &CycField::scale(c, &Rational::from_i64(a)));
                }
            }
            out
        }
        Basis::Y => f.inner.map_terms(n, |e, c| {
            let mult = eigenvalue(&field, which, e);
            Some((e.clone(), field.mul(c, &mult)))
        }),
    };
    Poly { basis: f.basis, inner }
}

/// Σ αᵢ ζ^{∓i} … the y-space eigenvalue of `which` on y^α, as power-basis coordinates.
pub fn eigenvalue(field: &CycField, which: Operator, alpha: &ExpVec) -> Vec<Rational> {
    // D(yᵢ) = ζⁱ yᵢ and Δ(yᵢ) = ζ^{−i} yᵢ
    let sign = -which.direction();
    let mut acc = vec![0i64; field.degree()];
    let mut overflow = false;
    for (i, &a) in alpha.entries().iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (x, &z) in acc.iter_mut().zip(field.zeta_int_coords(sign * i as i64)) {
            match a.checked_mul(z).and_then(|p| x.checked_add(p)) {
                Some(v) => *x = v,
                None => overflow = true,
            }
        }
    }
    if !overflow {
        return acc.into_iter().map(Rational::from_i64).collect();
    }
    let mut acc = field.zero_coords();
    for (i, &a) in alpha.entries().iter().enumerate() {
        let z = field.zeta_coords(sign * i as i64);
        for (x, zc) in acc.iter_mut().zip(&z) {
            x.add_mul(&Rational::from_i64(a), zc);
        }
    }
    acc
}

/// The linear forms Σᵢ ζ^{sign·ij} vᵢ (one per j) used by both basis changes.
fn dft_forms(field: &Arc<CycField>, n: usize, sign: i64) -> Vec<SparsePoly> {
    (0..n)
        .map(|j| {
            let mut form = SparsePoly::zero(field.clone(), n);
            for i in 0..n {
                form.add_term(ExpVec::unit(n, i), &field.zeta_coords(sign * (i * j) as i64));
            }
            form
        })
        .collect()
}

/// x-space → y-space: substitutes xⱼ ↦ (1/n) Σᵢ ζ^{−ij} yᵢ.
pub fn to_y(f: &Poly) -> Result<Poly> {
    if f.basis != Basis::X {
        return Err(Error::BasisMismatch { expected: "x", found: "y" });
    }
    let n = f.n();
    let field = f.field().clone();
    let forms = dft_forms(&field, n, -1);
    // the forms are left unscaled so the expansion stays integral; each term
    // of degree d picks up n^{-d} afterwards
    let raw = f.inner.substitute(&forms);
    let inv_n = Rational::new(1, n as i64).expect("n > 0");
    let inner = raw.map_terms(n, |e, c| {
        let s = inv_n.pow(e.degree() as u32);
        Some((e.clone(), CycField::scale(c, &s)))
    });
    Ok(Poly { basis: Basis::Y, inner })
}

/// y-space → x-space: substitutes yᵢ ↦ Σⱼ ζ^{ij} xⱼ.
pub fn to_x(g: &Poly) -> Result<Poly> {
    if g.basis != Basis::Y {
        return Err(Error::BasisMismatch { expected: "y", found: "x" });
    }
    let n = g.n();
    let field = g.field().clone();
    let forms: Vec<SparsePoly> = (0..n).map(|i| y_form_in_x(&field, n, i)).collect();
    Ok(Poly { basis: Basis::X, inner: g.inner.substitute(&forms) })
}

/// yᵢ written in x-space.
pub(crate) fn y_form_in_x(field: &Arc<CycField>, n: usize, i: usize) -> SparsePoly {
    let mut form = SparsePoly::zero(field.clone(), n);
    for j in 0..n {
        form.add_term(ExpVec::unit(n, j), &field.zeta_coords((i * j) as i64));
    }
    form
}

/// The linear form yᵢ as an x-space polynomial.
pub fn y_variable_in_x(n: usize, i: usize) -> Result<Poly> {
    let field = cyclotomic::field(n)?;
    if i >= n {
        return Err(Error::IndexOutOfRange { name: format!("y{i}"), pos: 0, limit: n });
    }
    Ok(Poly { basis: Basis::X, inner: y_form_in_x(&field, n, i) })
}

/// Converts to y-space, cloning if already there.
pub fn ensure_y(f: &Poly) -> Result<Poly> {
    match f.basis {
        Basis::Y => Ok(f.clone()),
        Basis::X => to_y(f),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parse::print_poly(self))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}; n={}]({})", self.basis.name(), self.n(), self)
    }
}
