//! Relations among the block determinants.
//!
//! For coprime p, q with pq | n, let zᵢ stand for Θₚ(y⁽ᵖ⁾ᵢ) and wⱼ for
//! Θ_q(y⁽ᵠ⁾ⱼ). The map ρ′ sending these to their y-monomials has kernel
//! generated by the binomials tᵢ = Πⱼ z_{i+n_pq j} − Πⱼ w_{i+n_pq j}.
//! Membership is decided by applying ρ′; certificates F = Σ gᵢtᵢ are built
//! by rewriting each monomial to a reference monomial of its fiber one
//! block at a time.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::Rng;

use crate::cyclotomic::{self, gcd, CycElement, CycField};
use crate::error::{Error, Result};
use crate::lattice::{self, sigma};
use crate::multipoly::{Basis, ExpVec, Poly, SparsePoly};
use crate::parse::{parse_sparse, print_sparse};
use crate::rational::Rational;

/// The polynomial ring in z₀..z_{n/p−1}, w₀..w_{n/q−1} over Q(ζₙ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenRing {
    pub n: usize,
    pub p: usize,
    pub q: usize,
}

impl GenRing {
    /// Requires p, q ≥ 2 coprime with pq | n.
    pub fn new(n: usize, p: usize, q: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if p < 2 || q < 2 || gcd(p, q) != 1 {
            return Err(Error::NotCoprime { p, q });
        }
        if !n.is_multiple_of(p * q) {
            return Err(Error::NotADivisor { n, p: p * q });
        }
        Ok(GenRing { n, p, q })
    }

    /// Number of z variables, n/p.
    pub fn np(&self) -> usize {
        self.n / self.p
    }

    /// Number of w variables, n/q.
    pub fn nq(&self) -> usize {
        self.n / self.q
    }

    /// Number of relations, n/pq.
    pub fn npq(&self) -> usize {
        self.n / (self.p * self.q)
    }

    pub fn nvars(&self) -> usize {
        self.np() + self.nq()
    }

    fn field(&self) -> Arc<CycField> {
        cyclotomic::field(self.n).expect("n > 0")
    }

    pub fn var_name(&self, slot: usize) -> String {
        if slot < self.np() {
            format!("z{slot}")
        } else {
            format!("w{}", slot - self.np())
        }
    }

    /// Splits an exponent vector into its z and w parts.
    pub fn split<'a>(&self, e: &'a ExpVec) -> (&'a [i64], &'a [i64]) {
        e.entries().split_at(self.np())
    }

    fn block_z(&self, i: usize) -> ExpVec {
        let mut e = vec![0; self.nvars()];
        for j in 0..self.q {
            e[i + self.npq() * j] = 1;
        }
        ExpVec::new(e)
    }

    fn block_w(&self, i: usize) -> ExpVec {
        let mut e = vec![0; self.nvars()];
        for j in 0..self.p {
            e[self.np() + i + self.npq() * j] = 1;
        }
        ExpVec::new(e)
    }

    /// σ(c, d) for an exponent vector of this ring.
    pub fn sigma(&self, e: &ExpVec) -> ExpVec {
        let (c, d) = self.split(e);
        sigma(self.n, self.p, self.q, c, d).expect("ring parameters are valid")
    }
}

/// A polynomial in the z/w generator ring.
#[derive(Clone, PartialEq, Eq)]
pub struct GenPoly {
    ring: GenRing,
    poly: SparsePoly,
}

impl GenPoly {
    pub fn zero(ring: GenRing) -> Self {
        GenPoly { ring, poly: SparsePoly::zero(ring.field(), ring.nvars()) }
    }

    pub fn one(ring: GenRing) -> Self {
        GenPoly { ring, poly: SparsePoly::one(ring.field(), ring.nvars()) }
    }

    pub fn from_sparse(ring: GenRing, poly: SparsePoly) -> Self {
        assert_eq!(poly.nvars(), ring.nvars());
        assert_eq!(poly.field().order(), ring.n);
        GenPoly { ring, poly }
    }

    /// `coeff · z^c w^d` for the concatenated exponent (c | d).
    pub fn monomial(ring: GenRing, exp: ExpVec, coeff: &[Rational]) -> Self {
        GenPoly { ring, poly: SparsePoly::monomial(ring.field(), exp, coeff.to_vec()) }
    }

    pub fn ring(&self) -> GenRing {
        self.ring
    }

    pub fn sparse(&self) -> &SparsePoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn len(&self) -> usize {
        self.poly.len()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn add(&self, other: &GenPoly) -> GenPoly {
        GenPoly { ring: self.ring, poly: self.poly.add(&other.poly) }
    }

    pub fn sub(&self, other: &GenPoly) -> GenPoly {
        GenPoly { ring: self.ring, poly: self.poly.sub(&other.poly) }
    }

    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        GenPoly { ring: self.ring, poly: self.poly.mul(&other.poly) }
    }

    pub fn scale(&self, c: &CycElement) -> GenPoly {
        GenPoly { ring: self.ring, poly: self.poly.scale(c.coords()) }
    }
}

impl fmt::Display for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = self.ring;
        f.write_str(&print_sparse(&self.poly, &|s| ring.var_name(s)))
    }
}

impl fmt::Debug for GenPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GenPoly[n={},p={},q={}]({})", self.ring.n, self.ring.p, self.ring.q, self)
    }
}

/// Parses a polynomial in z₀..z_{n/p−1} and w₀..w_{n/q−1}.
pub fn parse_gen_poly(text: &str, ring: GenRing) -> Result<GenPoly> {
    let (np, nq) = (ring.np(), ring.nq());
    let resolve = |fam: char, idx: usize, pos: usize| -> Result<usize> {
        let (limit, offset) = match fam {
            'z' => (np, 0),
            'w' => (nq, np),
            _ => {
                return Err(Error::Syntax {
                    pos,
                    msg: format!("variable `{fam}{idx}` is not allowed here; expected z- or w-variables"),
                })
            }
        };
        if idx >= limit {
            return Err(Error::IndexOutOfRange { name: format!("{fam}{idx}"), pos, limit });
        }
        Ok(offset + idx)
    };
    let poly = parse_sparse(text, ring.field(), ring.nvars(), &resolve)?;
    Ok(GenPoly { ring, poly })
}

/// The binomials t₀..t_{n/pq−1}.
pub fn relations(ring: GenRing) -> Vec<GenPoly> {
    let field = ring.field();
    let one = field.one_coords();
    (0..ring.npq())
        .map(|i| {
            let mut t = SparsePoly::zero(field.clone(), ring.nvars());
            t.add_term(ring.block_z(i), &one);
            t.add_term(ring.block_w(i), &CycField::neg(&one));
            let t = GenPoly { ring, poly: t };
            debug_assert!(rho_prime_apply(&t).is_zero());
            t
        })
        .collect()
}

/// ρ: zᵢ ↦ y^{v⁽ᵖ⁾ᵢ}, for a polynomial in n/p variables.
pub fn rho_apply(f: &SparsePoly, n: usize, p: usize) -> Result<Poly> {
    lattice::GeneratorId::new(n, p, 0)?;
    let np = n / p;
    if f.nvars() != np {
        return Err(Error::LengthMismatch { expected: np, found: f.nvars() });
    }
    if f.field().order() != n {
        return Err(Error::OrderMismatch { left: n, right: f.field().order() });
    }
    let mut out = SparsePoly::zero(f.field().clone(), n);
    for (c, coeff) in f.terms() {
        let mut acc = vec![0; n];
        for (i, &k) in c.entries().iter().enumerate() {
            for j in 0..p {
                acc[i + np * j] += k;
            }
        }
        out.add_term(ExpVec::new(acc), coeff);
    }
    Ok(Poly::from_sparse(Basis::Y, out))
}

/// ρ′: z^c w^d ↦ y^{σ(c,d)}.
pub fn rho_prime_apply(f: &GenPoly) -> Poly {
    let ring = f.ring;
    let mut out = SparsePoly::zero(ring.field(), ring.n);
    for (e, coeff) in f.poly.terms() {
        out.add_term(ring.sigma(e), coeff);
    }
    Poly::from_sparse(Basis::Y, out)
}

/// Cofactors g₀..g_{n/pq−1} with F = Σ gᵢtᵢ.
#[derive(Clone, PartialEq, Eq)]
pub struct Certificate {
    pub cofactors: Vec<GenPoly>,
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.cofactors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "g{i} = {g}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KernelResult {
    InKernel(Option<Certificate>),
    /// ρ′(F) ≠ 0; its leading y-monomial and coefficient.
    NotInKernel {
        witness: ExpVec,
        coeff: CycElement,
    },
}

impl KernelResult {
    pub fn in_kernel(&self) -> bool {
        matches!(self, KernelResult::InKernel(_))
    }
}

/// Decides F ∈ Ker ρ′ and optionally builds a verified certificate.
pub fn kernel_membership(f: &GenPoly, want_certificate: bool) -> KernelResult {
    let image = rho_prime_apply(f);
    if let Some((witness, coeff)) = image.terms().into_iter().next() {
        return KernelResult::NotInKernel { witness, coeff };
    }
    if !want_certificate {
        return KernelResult::InKernel(None);
    }
    let cert = build_certificate(f);
    assert!(verify_certificate(f, &cert).expect("lengths match"), "certificate must reproduce F");
    KernelResult::InKernel(Some(cert))
}

/// Groups the terms of F by σ(c, d); each group's exponents in grlex order.
pub fn sigma_fibers(f: &GenPoly) -> BTreeMap<ExpVec, Vec<(ExpVec, Vec<Rational>)>> {
    let mut fibers: BTreeMap<ExpVec, Vec<(ExpVec, Vec<Rational>)>> = BTreeMap::new();
    for (e, c) in f.poly.terms() {
        fibers.entry(f.ring.sigma(e)).or_default().push((e.clone(), c.to_vec()));
    }
    for terms in fibers.values_mut() {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
    }
    fibers
}

/// Block vector m with c − c′ = (m, …, m) and d − d′ = −(m, …, m), if any.
pub fn block_difference(ring: GenRing, from: &ExpVec, to: &ExpVec) -> Option<Vec<i64>> {
    let npq = ring.npq();
    let diff = from.sub(to);
    let (dc, dd) = ring.split(&diff);
    let m = dc[..npq].to_vec();
    let ok =
        dc.iter().enumerate().all(|(k, &x)| x == m[k % npq]) && dd.iter().enumerate().all(|(k, &x)| x == -m[k % npq]);
    ok.then_some(m)
}

/// Cofactors g with z^{from} − z^{to} = Σ gᵢtᵢ, for exponents in the same σ-fiber.
///
/// Blocks with mᵢ > 0 are processed first, then those with mᵢ < 0, each in
/// ascending i, one unit at a time: uᵢ = vᵢ + tᵢ removes a z-block, and
/// vᵢ = uᵢ − tᵢ removes a w-block.
pub fn rewrite_to(ring: GenRing, from: &ExpVec, to: &ExpVec, coeff: &[Rational]) -> Vec<GenPoly> {
    let m = block_difference(ring, from, to).unwrap_or_else(|| {
        panic!("exponents {from} and {to} differ by a non-block vector; σ-fibers must be block translates")
    });
    let mut g: Vec<GenPoly> = (0..ring.npq()).map(|_| GenPoly::zero(ring)).collect();
    let mut cur = from.clone();
    let neg = CycField::neg(coeff);
    let order = (0..ring.npq()).filter(|&i| m[i] > 0).chain((0..ring.npq()).filter(|&i| m[i] < 0));
    for i in order {
        let (remove, insert, sign) = if m[i] > 0 {
            (ring.block_z(i), ring.block_w(i), coeff)
        } else {
            (ring.block_w(i), ring.block_z(i), neg.as_slice())
        };
        for _ in 0..m[i].abs() {
            cur.add_scaled(&remove, -1);
            debug_assert!(cur.is_nonnegative());
            g[i].poly.add_term(cur.clone(), sign);
            cur.add_scaled(&insert, 1);
        }
    }
    assert_eq!(&cur, to);
    g
}

fn build_certificate(f: &GenPoly) -> Certificate {
    let ring = f.ring;
    let mut cofactors: Vec<GenPoly> = (0..ring.npq()).map(|_| GenPoly::zero(ring)).collect();
    for (alpha, terms) in sigma_fibers(f) {
        let mut total = ring.field().zero_coords();
        for (_, c) in &terms {
            CycField::add_assign(&mut total, c);
        }
        assert!(CycField::is_zero(&total), "coefficients over the fiber of {alpha} must sum to zero");
        let reference = &terms[0].0;
        for (e, c) in &terms[1..] {
            for (acc, g) in cofactors.iter_mut().zip(rewrite_to(ring, e, reference, c)) {
                *acc = acc.add(&g);
            }
        }
    }
    Certificate { cofactors }
}

/// Expands Σ gᵢtᵢ and compares with F.
pub fn verify_certificate(f: &GenPoly, cert: &Certificate) -> Result<bool> {
    let ring = f.ring;
    if cert.cofactors.len() != ring.npq() {
        return Err(Error::LengthMismatch { expected: ring.npq(), found: cert.cofactors.len() });
    }
    let mut sum = GenPoly::zero(ring);
    for (g, t) in cert.cofactors.iter().zip(relations(ring)) {
        sum = sum.add(&g.mul(&t));
    }
    Ok(sum == *f)
}

/// Evidence that ρ is injective.
#[derive(Debug, Clone)]
pub struct RhoReport {
    pub n: usize,
    pub p: usize,
    /// The supports of y^{v⁽ᵖ⁾ᵢ} partition {0, …, n−1}.
    pub supports_partition: bool,
    pub samples: usize,
    /// Every sampled nonzero polynomial had a nonzero image.
    pub samples_nonzero: bool,
}

impl RhoReport {
    pub fn holds(&self) -> bool {
        self.supports_partition && self.samples_nonzero
    }
}

/// Checks Ker ρ = 0 via disjoint supports plus random nonzero samples.
pub fn kernel_rho_trivial<R: Rng>(n: usize, p: usize, samples: usize, rng: &mut R) -> Result<RhoReport> {
    lattice::GeneratorId::new(n, p, 0)?;
    let np = n / p;
    let mut seen = vec![0usize; n];
    for i in 0..np {
        for (k, &e) in lattice::generator_v(n, p, i as i64)?.entries().iter().enumerate() {
            seen[k] += e as usize;
        }
    }
    let supports_partition = seen.iter().all(|&c| c == 1);
    let field = cyclotomic::field(n)?;
    let mut samples_nonzero = true;
    for _ in 0..samples {
        let mut f = SparsePoly::zero(field.clone(), np);
        while f.is_zero() {
            f = random_sparse(rng, &field, np, 5, 4);
        }
        samples_nonzero &= !rho_apply(&f, n, p)?.is_zero();
    }
    Ok(RhoReport { n, p, supports_partition, samples, samples_nonzero })
}

fn random_coeff<R: Rng>(rng: &mut R, field: &CycField) -> Vec<Rational> {
    let mut c = field.zeta_coords(rng.gen_range(0..field.order() as i64));
    let k = Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=3)).expect("nonzero denominator");
    for x in c.iter_mut() {
        *x = &*x * &k;
    }
    c
}

fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_deg: usize) -> ExpVec {
    let mut e = vec![0; nvars];
    for _ in 0..rng.gen_range(0..=max_deg) {
        e[rng.gen_range(0..nvars)] += 1;
    }
    ExpVec::new(e)
}

fn random_sparse<R: Rng>(rng: &mut R, field: &Arc<CycField>, nvars: usize, terms: usize, max_deg: usize) -> SparsePoly {
    let mut f = SparsePoly::zero(field.clone(), nvars);
    for _ in 0..rng.gen_range(1..=terms) {
        f.add_term(random_monomial(rng, nvars, max_deg), &random_coeff(rng, field));
    }
    f
}

/// Σ gᵢtᵢ for random cofactors gᵢ with at most `terms` terms in total and
/// degree at most `max_deg` (counting the relation's own degree).
pub fn random_ideal_element<R: Rng>(ring: GenRing, rng: &mut R, terms: usize, max_deg: usize) -> GenPoly {
    let field = ring.field();
    let rels = relations(ring);
    let rel_deg = ring.p.max(ring.q);
    let mut out = GenPoly::zero(ring);
    for _ in 0..rng.gen_range(1..=terms.max(1)) {
        let i = rng.gen_range(0..rels.len());
        let mono = random_monomial(rng, ring.nvars(), max_deg.saturating_sub(rel_deg));
        let g = GenPoly { ring, poly: SparsePoly::monomial(field.clone(), mono, random_coeff(rng, &field)) };
        out = out.add(&g.mul(&rels[i]));
    }
    out
}

/// A random ideal element plus one monomial, which is never in the kernel.
pub fn random_non_element<R: Rng>(ring: GenRing, rng: &mut R, terms: usize, max_deg: usize) -> GenPoly {
    let base = random_ideal_element(ring, rng, terms, max_deg);
    loop {
        let field = ring.field();
        let mono = GenPoly::monomial(ring, random_monomial(rng, ring.nvars(), max_deg), &random_coeff(rng, &field));
        let f = base.add(&mono);
        if !rho_prime_apply(&f).is_zero() {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn ring(n: usize, p: usize, q: usize) -> GenRing {
        GenRing::new(n, p, q).unwrap()
    }

    fn gp(s: &str, r: GenRing) -> GenPoly {
        parse_gen_poly(s, r).unwrap()
    }

    #[test]
    fn relation_examples() {
        let r6 = ring(6, 2, 3);
        assert_eq!(relations(r6), vec![gp("z0*z1*z2 - w0*w1", r6)]);
        let r12 = ring(12, 2, 3);
        assert_eq!(relations(r12), vec![gp("z0*z2*z4 - w0*w2", r12), gp("z1*z3*z5 - w1*w3", r12)]);
        assert_eq!(GenRing::new(6, 2, 4), Err(Error::NotCoprime { p: 2, q: 4 }));
        assert_eq!(GenRing::new(10, 2, 3), Err(Error::NotADivisor { n: 10, p: 6 }));
        assert_eq!(relations(r12)[1].to_string(), "z1*z3*z5 - w1*w3");
    }

    #[test]
    fn rho_examples() {
        let y = |s: &str, n| parse_poly(s, n, Basis::Y).unwrap();
        let field = cyclotomic::field(6).unwrap();
        assert_eq!(rho_apply(&SparsePoly::var(field.clone(), 3, 0), 6, 2).unwrap(), y("y0*y3", 6));
        let r6 = ring(6, 2, 3);
        assert_eq!(rho_prime_apply(&gp("w1", r6)), y("y1*y3*y5", 6));
        assert_eq!(rho_prime_apply(&gp("5", r6)), y("5", 6));
        let five = SparsePoly::constant(field.clone(), 3, field.rational_coords(Rational::from_i64(5)));
        assert_eq!(rho_apply(&five, 6, 2).unwrap(), y("5", 6));
        assert!(matches!(rho_apply(&five, 6, 4), Err(Error::NotADivisor { .. })));
    }

    #[test]
    fn kernel_examples() {
        let r6 = ring(6, 2, 3);
        let t0 = gp("z0*z1*z2 - w0*w1", r6);
        match kernel_membership(&t0, true) {
            KernelResult::InKernel(Some(c)) => assert_eq!(c.cofactors, vec![GenPoly::one(r6)]),
            r => panic!("{r:?}"),
        }
        match kernel_membership(&gp("z0", r6), true) {
            KernelResult::NotInKernel { witness, .. } => assert_eq!(witness, ExpVec::new(vec![1, 0, 0, 1, 0, 0])),
            r => panic!("{r:?}"),
        }
        let f = gp("z0*z1*z2*w0 - w0^2*w1", r6);
        match kernel_membership(&f, true) {
            KernelResult::InKernel(Some(c)) => assert_eq!(c.cofactors, vec![gp("w0", r6)]),
            r => panic!("{r:?}"),
        }
        let r12 = ring(12, 2, 3);
        match kernel_membership(&gp("w0*w2 - z0*z2*z4", r12), true) {
            KernelResult::InKernel(Some(c)) => {
                assert_eq!(c.cofactors, vec![gp("-1", r12), GenPoly::zero(r12)]);
                assert_eq!(c.to_string(), "g0 = -1, g1 = 0");
            }
            r => panic!("{r:?}"),
        }
        assert_eq!(kernel_membership(&t0, false), KernelResult::InKernel(None));
        assert!(kernel_membership(&GenPoly::zero(r6), true).in_kernel());
    }

    #[test]
    fn verify_certificate_examples() {
        let r6 = ring(6, 2, 3);
        let t0 = relations(r6).remove(0);
        assert!(verify_certificate(&t0, &Certificate { cofactors: vec![GenPoly::one(r6)] }).unwrap());
        assert!(!verify_certificate(&t0, &Certificate { cofactors: vec![GenPoly::zero(r6)] }).unwrap());
        let f = gp("w0", r6).mul(&t0).add(&gp("z1", r6).mul(&t0));
        assert!(verify_certificate(&f, &Certificate { cofactors: vec![gp("w0 + z1", r6)] }).unwrap());
        assert_eq!(
            verify_certificate(&f, &Certificate { cofactors: vec![] }),
            Err(Error::LengthMismatch { expected: 1, found: 0 })
        );
    }

    #[test]
    fn parse_errors() {
        let r6 = ring(6, 2, 3);
        assert!(matches!(parse_gen_poly("z3", r6), Err(Error::IndexOutOfRange { limit: 3, .. })));
        assert!(matches!(parse_gen_poly("w2", r6), Err(Error::IndexOutOfRange { limit: 2, .. })));
        assert!(matches!(parse_gen_poly("x0", r6), Err(Error::Syntax { .. })));
        assert_eq!(gp("zeta*z0", r6).to_string(), "zeta*z0");
    }

    #[test]
    fn rho_is_injective_for_prime_powers() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for (n, p) in [(6, 2), (9, 3), (4, 2), (8, 2), (27, 3), (25, 5)] {
            let r = kernel_rho_trivial(n, p, 20, &mut rng).unwrap();
            assert!(r.holds(), "{r:?}");
        }
        assert!(kernel_rho_trivial(6, 4, 1, &mut rng).is_err());
    }

    #[test]
    fn random_elements_certify() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        for (n, p, q) in [(6, 2, 3), (12, 2, 3), (18, 2, 3), (30, 2, 5), (12, 4, 3), (30, 5, 3)] {
            let r = ring(n, p, q);
            for _ in 0..15 {
                let f = random_ideal_element(r, &mut rng, 10, 6);
                assert!(kernel_membership(&f, true).in_kernel());
                // every fiber sums to zero
                for terms in sigma_fibers(&f).values() {
                    let mut s = r.field().zero_coords();
                    for (_, c) in terms {
                        CycField::add_assign(&mut s, c);
                    }
                    assert!(CycField::is_zero(&s));
                }
                let g = random_non_element(r, &mut rng, 10, 6);
                assert!(!kernel_membership(&g, true).in_kernel());
            }
        }
    }

    #[test]
    fn fiber_rewriting() {
        // translate a random monomial by block vectors and rewrite back
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let r = ring(12, 2, 3);
        let one = r.field().one_coords();
        for _ in 0..50 {
            let base = random_monomial(&mut rng, r.nvars(), 4).into_entries();
            let mut from = base.clone();
            let mut to = base;
            for i in 0..r.npq() {
                let (a, b) = (rng.gen_range(0..3), rng.gen_range(0..3));
                for j in 0..r.q {
                    from[i + r.npq() * j] += a;
                    to[i + r.npq() * j] += b;
                }
                for j in 0..r.p {
                    from[r.np() + i + r.npq() * j] += b;
                    to[r.np() + i + r.npq() * j] += a;
                }
            }
            let (from, to) = (ExpVec::new(from), ExpVec::new(to));
            assert_eq!(r.sigma(&from), r.sigma(&to));
            let g = rewrite_to(r, &from, &to, &one);
            let f = GenPoly::monomial(r, from, &one).sub(&GenPoly::monomial(r, to, &one));
            assert!(verify_certificate(&f, &Certificate { cofactors: g }).unwrap());
        }
    }
}
