//! Invariants of the shift derivations D and Δ.
//!
//! In y-space both operators act diagonally, so f is invariant iff each of
//! its monomials y^α has α ∈ Vₙ. That reduces expressing invariants in the
//! block determinants to decomposing exponent vectors.

use std::fmt;

use rand::Rng;
use rustc_hash::FxHashMap;

use crate::circulant::{theta_block, BlockSpec, Limits};
use crate::cyclotomic::{self, zeta_power, CycElement};
use crate::error::{Error, Result};
use crate::lattice::{self, counterexample, decompose, monoid_member_oracle, GeneratorId, OracleResult};
use crate::multipoly::{apply_operator, ensure_y, Basis, ExpVec, Operator, Poly, SparsePoly};
use crate::parse::{format_monomial, print_sparse};
use crate::rational::Rational;

/// Result of applying D and Δ to a polynomial.
#[derive(Debug, Clone)]
pub struct InvarianceReport {
    pub d_invariant: bool,
    pub delta_invariant: bool,
    /// Leading term of D f when it is nonzero, in the input's basis.
    pub witness: Option<(ExpVec, CycElement)>,
}

impl InvarianceReport {
    pub fn invariant(&self) -> bool {
        self.d_invariant && self.delta_invariant
    }

    pub fn operators_agree(&self) -> bool {
        self.d_invariant == self.delta_invariant
    }
}

/// Applies D and Δ in the polynomial's own basis. The operators commute with
/// the basis change, so the answer does not depend on the basis.
pub fn is_invariant(f: &Poly) -> InvarianceReport {
    let df = apply_operator(Operator::D, f);
    let delta = apply_operator(Operator::Delta, f);
    InvarianceReport {
        d_invariant: df.is_zero(),
        delta_invariant: delta.is_zero(),
        witness: df.terms().into_iter().next(),
    }
}

/// True iff every y-monomial of f has a constant exponent vector, i.e. f is a
/// polynomial in Θₙ = y₀⋯y_{n−1}.
pub fn is_sl_invariant(f: &Poly) -> Result<bool> {
    let g = ensure_y(f)?;
    let constant = g.sparse().terms().all(|(e, _)| e.entries().windows(2).all(|w| w[0] == w[1]));
    Ok(constant)
}

/// A polynomial in the block determinants Θₚ(y⁽ᵖ⁾ᵢ), prime p | n.
///
/// Stored as a polynomial whose k-th variable is the k-th element of
/// `lattice::generators_tn(n)`.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorExpression {
    n: usize,
    gens: Vec<GeneratorId>,
    poly: SparsePoly,
}

impl GeneratorExpression {
    pub fn zero(n: usize) -> Result<Self> {
        let field = cyclotomic::field(n)?;
        let gens: Vec<GeneratorId> = lattice::generators_tn(n).into_iter().map(|(g, _)| g).collect();
        let poly = SparsePoly::zero(field, gens.len());
        Ok(GeneratorExpression { n, gens, poly })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poly.is_zero()
    }

    fn slot(&self, g: &GeneratorId) -> usize {
        self.gens.iter().position(|h| h == g).expect("generator of Tₙ")
    }

    /// Adds `coeff · Π gᵏ` for the multiset given as (generator, multiplicity) pairs.
    pub fn add_term(&mut self, factors: &[(GeneratorId, u64)], coeff: &CycElement) {
        let mut e = vec![0i64; self.gens.len()];
        for (g, k) in factors {
            e[self.slot(g)] += *k as i64;
        }
        self.poly.add_term(ExpVec::new(e), coeff.coords());
    }

    /// Terms in canonical order as (generator multiset, coefficient).
    pub fn terms(&self) -> Vec<(Vec<(GeneratorId, u64)>, CycElement)> {
        self.poly
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let factors = e
                    .entries()
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(s, &k)| (self.gens[s], k as u64))
                    .collect();
                (factors, CycElement::from_coords(self.poly.field().clone(), c.to_vec()))
            })
            .collect()
    }

    fn y_exponent(&self, e: &ExpVec) -> ExpVec {
        let mut acc = ExpVec::zeros(self.n);
        for (s, &k) in e.entries().iter().enumerate() {
            if k > 0 {
                acc.add_scaled(&self.gens[s].vector(self.n), k);
            }
        }
        acc
    }

    /// Substitutes y^{v⁽ᵖ⁾ᵢ} for each generator.
    pub fn evaluate_y(&self) -> Poly {
        let field = self.poly.field().clone();
        let mut out = SparsePoly::zero(field, self.n);
        for (e, c) in self.poly.terms() {
            out.add_term(self.y_exponent(e), c);
        }
        Poly::from_sparse(Basis::Y, out)
    }

    /// Substitutes the x-space expansion of each block determinant.
    pub fn evaluate_x(&self, limits: &Limits) -> Result<Poly> {
        let mut forms = Vec::with_capacity(self.gens.len());
        let used: Vec<bool> = (0..self.gens.len()).map(|s| self.poly.terms().any(|(e, _)| e[s] > 0)).collect();
        for (s, g) in self.gens.iter().enumerate() {
            let form = if used[s] {
                theta_block(&BlockSpec::new(self.n, g.p, g.i)?, limits)?.into_sparse()
            } else {
                SparsePoly::zero(self.poly.field().clone(), self.n)
            };
            forms.push(form);
        }
        if forms.is_empty() {
            let c = self.poly.coeff(&[]).map(<[_]>::to_vec).unwrap_or_else(|| self.poly.field().zero_coords());
            return Ok(Poly::from_sparse(Basis::X, SparsePoly::constant(self.poly.field().clone(), self.n, c)));
        }
        Ok(Poly::from_sparse(Basis::X, self.poly.substitute(&forms)))
    }
}

impl fmt::Display for GeneratorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens = &self.gens;
        f.write_str(&print_sparse(&self.poly, &|s| format!("T({},{})", gens[s].p, gens[s].i)))
    }
}

impl fmt::Debug for GeneratorExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GeneratorExpression[n={}]({})", self.n, self)
    }
}

/// Writes an invariant f as a polynomial in the block determinants; n must
/// have at most two prime factors.
pub fn express_in_generators(f: &Poly) -> Result<GeneratorExpression> {
    let report = is_invariant(f);
    if !report.invariant() {
        let witness = match &report.witness {
            Some((e, c)) => {
                format!("D f has leading term ({c})*{}", format_monomial(e, &|i| format!("{}{i}", f.basis().name())))
            }
            None => "D f = 0 but Δ f ≠ 0".to_string(),
        };
        return Err(Error::NotInvariant { witness });
    }
    let n = f.n();
    let count = cyclotomic::prime_factors(n).len();
    if count > 2 {
        return Err(Error::TooManyPrimeFactors { n, count });
    }
    let g = ensure_y(f)?;
    let mut out = GeneratorExpression::zero(n)?;
    let mut cache: FxHashMap<ExpVec, Vec<(GeneratorId, u64)>> = FxHashMap::default();
    for (alpha, c) in g.sparse().terms() {
        let factors = match cache.get(alpha) {
            Some(v) => v.clone(),
            None => {
                let d = decompose(alpha, n)?;
                let v: Vec<_> = d.coeffs.into_iter().collect();
                cache.insert(alpha.clone(), v.clone());
                v
            }
        };
        out.add_term(&factors, &CycElement::from_coords(g.field().clone(), c.to_vec()));
    }
    debug_assert_eq!(out.evaluate_y(), g);
    Ok(out)
}

/// An invariant outside the subring generated by the block determinants.
#[derive(Debug, Clone)]
pub struct GapWitness {
    pub n: usize,
    pub alpha: ExpVec,
    /// y^α in y-space.
    pub monomial: Poly,
    pub invariant: bool,
    pub oracle: OracleResult,
}

impl GapWitness {
    /// True when the monomial is invariant and the oracle proved non-membership.
    pub fn confirmed(&self) -> bool {
        self.invariant && matches!(self.oracle, OracleResult::NonMember { .. })
    }
}

/// y^{α′} for α′ = `counterexample(n)`: invariant, yet α′ is not a
/// nonnegative combination of Tₙ, so the monomial is not in the subring.
pub fn gap_witness(n: usize) -> Result<GapWitness> {
    let alpha = counterexample(n)?;
    let monomial = Poly::monomial(Basis::Y, alpha.clone(), &CycElement::one(n)?)?;
    let invariant = is_invariant(&monomial).invariant();
    let oracle = monoid_member_oracle(&alpha, n, u64::MAX)?;
    Ok(GapWitness { n, alpha, monomial, invariant, oracle })
}

/// A random polynomial in the block determinants, returned in y-space:
/// up to `terms` terms, each a product of at most `max_factors` generators
/// with a coefficient ±k·ζʲ.
pub fn random_invariant<R: Rng>(n: usize, rng: &mut R, terms: usize, max_factors: usize) -> Result<Poly> {
    let mut e = GeneratorExpression::zero(n)?;
    let gens = e.generators().to_vec();
    for _ in 0..terms {
        let k = if gens.is_empty() { 0 } else { rng.gen_range(0..=max_factors) };
        let factors: Vec<(GeneratorId, u64)> = (0..k).map(|_| (gens[rng.gen_range(0..gens.len())], 1)).collect();
        let c = random_unit(n, rng)?;
        e.add_term(&factors, &c);
    }
    Ok(e.evaluate_y())
}

/// [`random_invariant`] plus one y-monomial whose exponent is outside Vₙ.
pub fn random_non_invariant<R: Rng>(n: usize, rng: &mut R, terms: usize, max_factors: usize) -> Result<Poly> {
    let base = random_invariant(n, rng, terms, max_factors)?;
    loop {
        let deg = rng.gen_range(1..=n + 2);
        let mut beta = vec![0; n];
        for _ in 0..deg {
            beta[rng.gen_range(0..n)] += 1;
        }
        let beta = ExpVec::new(beta);
        if lattice::in_vn(&beta) {
            continue;
        }
        let mono = Poly::monomial(Basis::Y, beta, &random_unit(n, rng)?)?;
        return Ok(&base + &mono);
    }
}

fn random_unit<R: Rng>(n: usize, rng: &mut R) -> Result<CycElement> {
    let k = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
    Ok(zeta_power(n, rng.gen_range(0..n as i64))?.scale(&Rational::from_i64(k)))
}
