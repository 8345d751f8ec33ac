//! The exponent lattice Vₙ = {α ∈ Qⁿ : Σ αᵢ ζⁱ = 0} and its generators.
//!
//! The D-invariant monomials y^α are exactly those with α ∈ Vₙ ∩ Z≥0ⁿ, so
//! questions about the invariant ring become questions about this monoid.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashSet;

use crate::cyclotomic::{self, euler_phi, prime_factors};
use crate::error::{Error, Result};
use crate::linalg;
use crate::multipoly::ExpVec;
use crate::rational::Rational;

/// True iff Σ αᵢ ζₙⁱ = 0, where n is the length of `alpha`.
pub fn in_vn(alpha: &ExpVec) -> bool {
    let n = alpha.len();
    let Ok(field) = cyclotomic::field(n) else { return false };
    let mut acc = vec![0i128; field.degree()];
    for (i, &a) in alpha.entries().iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (x, &z) in acc.iter_mut().zip(field.zeta_int_coords(i as i64)) {
            *x += a as i128 * z as i128;
        }
    }
    acc.iter().all(|&x| x == 0)
}

/// [`in_vn`] for rational vectors.
pub fn in_vn_rational(alpha: &[Rational]) -> bool {
    let n = alpha.len();
    let Ok(field) = cyclotomic::field(n) else { return false };
    let mut acc = field.zero_coords();
    for (i, a) in alpha.iter().enumerate() {
        for (x, z) in acc.iter_mut().zip(field.zeta_int_coords(i as i64)) {
            x.add_mul(a, &Rational::from_i64(*z));
        }
    }
    acc.iter().all(Rational::is_zero)
}

/// The n − φ(n) shifts of the coefficient vector of Φₙ, a basis of Vₙ.
/// Empty for n = 1.
pub fn basis_sn(n: usize) -> Result<Vec<ExpVec>> {
    let phi = cyclotomic::cyclotomic_poly(n)?;
    let b = phi.coeffs();
    Ok((0..n - phi.degree())
        .map(|i| {
            let mut v = vec![0; n];
            for (j, &c) in b.iter().enumerate() {
                v[i + j] = c;
            }
            ExpVec::new(v)
        })
        .collect())
}

/// Rank of [`basis_sn`] over Q.
pub fn basis_sn_rank(n: usize) -> Result<usize> {
    let rows: Vec<Vec<i64>> = basis_sn(n)?.into_iter().map(ExpVec::into_entries).collect();
    Ok(linalg::rank_i64(&rows))
}

/// Expected dimension of Vₙ.
pub fn vn_dimension(n: usize) -> usize {
    n - euler_phi(n)
}

fn check_divisor(n: usize, p: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if p < 2 || !n.is_multiple_of(p) {
        return Err(Error::NotADivisor { n, p });
    }
    Ok(())
}

/// A generator v^{(p)}ᵢ: the 0/1 vector with ones at i, i + n/p, …, i + (p−1)n/p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    pub p: usize,
    pub i: usize,
}

impl GeneratorId {
    /// Normalizes `i` modulo n/p.
    pub fn new(n: usize, p: usize, i: i64) -> Result<Self> {
        check_divisor(n, p)?;
        let np = (n / p) as i64;
        Ok(GeneratorId { p, i: i.rem_euclid(np) as usize })
    }

    pub fn vector(&self, n: usize) -> ExpVec {
        let np = n / self.p;
        let mut v = vec![0; n];
        for j in 0..self.p {
            v[self.i + np * j] = 1;
        }
        ExpVec::new(v)
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v({},{})", self.p, self.i)
    }
}

pub fn generator_v(n: usize, p: usize, i: i64) -> Result<ExpVec> {
    Ok(GeneratorId::new(n, p, i)?.vector(n))
}

/// Tₙ: every v^{(p)}ᵢ for prime p | n, ordered by (p, i).
pub fn generators_tn(n: usize) -> Vec<(GeneratorId, ExpVec)> {
    let mut out = Vec::new();
    for p in prime_factors(n) {
        for i in 0..n / p {
            let id = GeneratorId { p, i };
            out.push((id, id.vector(n)));
        }
    }
    out
}

fn combine(n: usize, p: usize, c: &[i64], acc: &mut [i64]) -> Result<()> {
    check_divisor(n, p)?;
    let np = n / p;
    if c.len() != np {
        return Err(Error::LengthMismatch { expected: np, found: c.len() });
    }
    for (i, &ci) in c.iter().enumerate() {
        for j in 0..p {
            acc[i + np * j] += ci;
        }
    }
    Ok(())
}

/// σ(c, d) = Σ cᵢ v^{(p)}ᵢ + Σ dᵢ v^{(q)}ᵢ.
pub fn sigma(n: usize, p: usize, q: usize, c: &[i64], d: &[i64]) -> Result<ExpVec> {
    let mut acc = vec![0; n];
    combine(n, p, c, &mut acc)?;
    combine(n, q, d, &mut acc)?;
    Ok(ExpVec::new(acc))
}

/// τ(c) = Σ over prime factors p of Σ c⁽ᵖ⁾ᵢ v^{(p)}ᵢ; one vector per prime, ascending.
pub fn tau(n: usize, coeffs: &[Vec<i64>]) -> Result<ExpVec> {
    let primes = prime_factors(n);
    if coeffs.len() != primes.len() {
        return Err(Error::LengthMismatch { expected: primes.len(), found: coeffs.len() });
    }
    let mut acc = vec![0; n];
    for (&p, c) in primes.iter().zip(coeffs) {
        combine(n, p, c, &mut acc)?;
    }
    Ok(ExpVec::new(acc))
}

/// A nonnegative integer combination of generators; only positive
/// coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    pub coeffs: BTreeMap<GeneratorId, u64>,
}

impl Decomposition {
    pub fn empty(n: usize) -> Self {
        Decomposition { n, coeffs: BTreeMap::new() }
    }

    pub fn add(&mut self, id: GeneratorId, k: u64) {
        if k > 0 {
            *self.coeffs.entry(id).or_insert(0) += k;
        }
    }

    pub fn reconstruct(&self) -> ExpVec {
        let mut acc = ExpVec::zeros(self.n);
        for (id, &k) in &self.coeffs {
            acc.add_scaled(&id.vector(self.n), k as i64);
        }
        acc
    }

    /// Total number of generator factors.
    pub fn size(&self) -> u64 {
        self.coeffs.values().sum()
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (k, (id, &c)) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if c == 1 {
                write!(f, "{id}")?;
            } else {
                write!(f, "{c}*{id}")?;
            }
        }
        Ok(())
    }
}

fn check_monomial_exponent(alpha: &ExpVec, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if alpha.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: alpha.len() });
    }
    if !alpha.is_nonnegative() {
        return Err(Error::NegativeEntry(alpha.to_string()));
    }
    Ok(())
}

/// Writes α ∈ Vₙ ∩ Z≥0ⁿ as a nonnegative combination of Tₙ, for n with at
/// most two prime factors.
///
/// With two primes p < q the coordinates in the basis
/// {v^{(p)}ᵢ : i < n/p} ∪ {v^{(q)}ᵢ : i < n/q − n/pq} are found by exact
/// elimination and then rebalanced blockwise so every coefficient is
/// nonnegative.
pub fn decompose(alpha: &ExpVec, n: usize) -> Result<Decomposition> {
    check_monomial_exponent(alpha, n)?;
    let primes = prime_factors(n);
    if primes.len() > 2 {
        return Err(Error::TooManyPrimeFactors { n, count: primes.len() });
    }
    if !in_vn(alpha) {
        return Err(Error::NotInLattice(alpha.to_string()));
    }
    let mut out = Decomposition::empty(n);
    match primes.as_slice() {
        [] => {}
        [p] => {
            for i in 0..n / p {
                out.add(GeneratorId { p: *p, i }, alpha[i] as u64);
            }
        }
        [p, q] => decompose_two_primes(alpha, n, *p, *q, &mut out),
        _ => unreachable!(),
    }
    assert_eq!(&out.reconstruct(), alpha, "decomposition must reconstruct its target");
    Ok(out)
}

fn decompose_two_primes(alpha: &ExpVec, n: usize, p: usize, q: usize, out: &mut Decomposition) {
    let (np, nq, npq) = (n / p, n / q, n / (p * q));
    let mut columns: Vec<Vec<i64>> = (0..np).map(|i| GeneratorId { p, i }.vector(n).into_entries()).collect();
    columns.extend((0..nq - npq).map(|i| GeneratorId { p: q, i }.vector(n).into_entries()));
    let sol = linalg::solve_unique(&columns, alpha.entries()).expect("α ∈ Vₙ has unique coordinates in the basis");
    let as_int = |r: &Rational| r.to_i64().unwrap_or_else(|| panic!("basis coordinate {r} is not an integer"));
    let c: Vec<i64> = sol[..np].iter().map(as_int).collect();
    let d: Vec<i64> = sol[np..].iter().map(as_int).collect();
    for i in 0..npq {
        let cmin = (0..q).map(|j| c[i + npq * j]).min().unwrap();
        for j in 0..q {
            let k = c[i + npq * j] - cmin;
            assert!(k >= 0);
            out.add(GeneratorId { p, i: i + npq * j }, k as u64);
        }
        for j in 0..p - 1 {
            let k = cmin + d[i + npq * j];
            assert!(k >= 0, "rebalanced q-coefficient must be nonnegative");
            out.add(GeneratorId { p: q, i: i + npq * j }, k as u64);
        }
        assert!(cmin >= 0, "block minimum must be nonnegative");
        out.add(GeneratorId { p: q, i: i + nq - npq }, cmin as u64);
    }
}

/// α′ = Σ_{j=2}^{p} v^{(q)}_{j·n/p} + v^{(r)}_{n/p + n/q} − v^{(p)}_{n/q} for the
/// three smallest primes p < q < r of n: a D-invariant exponent outside the
/// span of Tₙ.
pub fn counterexample(n: usize) -> Result<ExpVec> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    let primes = prime_factors(n);
    if primes.len() < 3 {
        return Err(Error::TooFewPrimeFactors { n, count: primes.len() });
    }
    let (p, q, r) = (primes[0], primes[1], primes[2]);
    let (np, nq) = ((n / p) as i64, (n / q) as i64);
    let mut acc = ExpVec::zeros(n);
    for j in 2..=p as i64 {
        acc.add_scaled(&generator_v(n, q, np * j)?, 1);
    }
    acc.add_scaled(&generator_v(n, r, np + nq)?, 1);
    acc.add_scaled(&generator_v(n, p, nq)?, -1);
    assert!(acc.is_nonnegative() && acc[0] >= 1 && in_vn(&acc));
    assert!(primes.iter().all(|s| acc[n / s] == 0));
    Ok(acc)
}

/// Every α ∈ Vₙ ∩ Z≥0ⁿ with total degree ≤ `max_deg`, in lexicographic order.
pub fn enumerate_vn_nonneg(n: usize, max_deg: usize) -> Result<Vec<ExpVec>> {
    let field = cyclotomic::field(n)?;
    let zetas: Vec<Vec<i64>> = (0..n).map(|i| field.zeta_int_coords(i as i64).to_vec()).collect();
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
    let mut acc = vec![0i64; field.degree()];
    enumerate_rec(&zetas, 0, max_deg as i64, &mut cur, &mut acc, &mut out);
    Ok(out)
}

fn enumerate_rec(
    zetas: &[Vec<i64>],
    pos: usize,
    left: i64,
    cur: &mut Vec<i64>,
    acc: &mut Vec<i64>,
    out: &mut Vec<ExpVec>,
) {
    if pos == cur.len() {
        if acc.iter().all(|&x| x == 0) {
            out.push(ExpVec::new(cur.clone()));
        }
        return;
    }
    for k in 0..=left {
        cur[pos] = k;
        enumerate_rec(zetas, pos + 1, left - k, cur, acc, out);
        for (a, z) in acc.iter_mut().zip(&zetas[pos]) {
            *a += z;
        }
    }
    for (a, z) in acc.iter_mut().zip(&zetas[pos]) {
        *a -= (left + 1) * z;
    }
    cur[pos] = 0;
}

/// Result of the exhaustive monoid-membership search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleResult {
    Member(Decomposition),
    /// No combination exists; `bound` is the coefficient-sum bound searched.
    NonMember {
        bound: u64,
    },
    BudgetExceeded {
        budget: u64,
    },
}

/// Decides α ∈ Z≥0-Span Tₙ by exhaustive search, independent of [`decompose`].
///
/// The smallest index still uncovered must be covered by some generator, so
/// the search branches only over generators through that index that fit
/// under the remainder. Every generator has degree ≥ 2, so at most deg(α)/2
/// generators are ever used and the search terminates; `budget` caps the
/// coefficient sum further.
pub fn monoid_member_oracle(alpha: &ExpVec, n: usize, budget: u64) -> Result<OracleResult> {
    check_monomial_exponent(alpha, n)?;
    let bound = budget.min(alpha.degree() as u64 / 2);
    if alpha.is_zero() {
        return Ok(OracleResult::Member(Decomposition::empty(n)));
    }
    let gens = generators_tn(n);
    let mut through: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (g, (_, v)) in gens.iter().enumerate() {
        for (i, &e) in v.entries().iter().enumerate() {
            if e > 0 {
                through[i].push(g);
            }
        }
    }
    let mut search = Search { gens: &gens, through, bound, cut: false, failed: FxHashSet::default(), path: Vec::new() };
    let mut rest = alpha.entries().to_vec();
    if search.run(&mut rest, 0) {
        let mut d = Decomposition::empty(n);
        for &g in &search.path {
            d.add(gens[g].0, 1);
        }
        return Ok(OracleResult::Member(d));
    }
    Ok(if search.cut && bound < alpha.degree() as u64 / 2 {
        OracleResult::BudgetExceeded { budget }
    } else {
        OracleResult::NonMember { bound }
    })
}

struct Search<'a> {
    gens: &'a [(GeneratorId, ExpVec)],
    through: Vec<Vec<usize>>,
    bound: u64,
    cut: bool,
    failed: FxHashSet<Vec<i64>>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn run(&mut self, rest: &mut Vec<i64>, used: u64) -> bool {
        let Some(first) = rest.iter().position(|&a| a > 0) else {
            return true;
        };
        if used == self.bound {
            self.cut = true;
            return false;
        }
        if self.failed.contains(rest.as_slice()) {
            return false;
        }
        let was_cut = self.cut;
        self.cut = false;
        for k in 0..self.through[first].len() {
            let g = self.through[first][k];
            let v = self.gens[g].1.entries();
            if v.iter().zip(rest.iter()).any(|(&a, &b)| a > b) {
                continue;
            }
            for (r, a) in rest.iter_mut().zip(v) {
                *r -= a;
            }
            self.path.push(g);
            if self.run(rest, used + 1) {
                return true;
            }
            self.path.pop();
            for (r, a) in rest.iter_mut().zip(v) {
                *r += a;
            }
        }
        // a failure below a budget cut is not definitive
        if !self.cut {
            self.failed.insert(rest.clone());
        }
        self.cut |= was_cut;
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ev(v: &[i64]) -> ExpVec {
        ExpVec::new(v.to_vec())
    }

    fn unit_sum(n: usize, idx: &[usize]) -> ExpVec {
        let mut v = vec![0; n];
        for &i in idx {
            v[i] += 1;
        }
        ExpVec::new(v)
    }

    #[test]
    fn vn_examples() {
        assert!(in_vn(&ev(&[1, 1])));
        assert!(!in_vn(&ev(&[1, 1, 0, 0])));
        assert!(in_vn(&ev(&[1, 0, 0, 1, 0, 0])));
        assert!(in_vn(&ev(&[0])));
        assert!(!in_vn(&ev(&[2])));
        let half = Rational::new(1, 2).unwrap();
        assert!(in_vn_rational(&[half.clone(), half]));
    }

    #[test]
    fn basis_examples() {
        assert_eq!(basis_sn(4).unwrap(), vec![ev(&[1, 0, 1, 0]), ev(&[0, 1, 0, 1])]);
        assert_eq!(
            basis_sn(6).unwrap(),
            vec![
                ev(&[1, -1, 1, 0, 0, 0]),
                ev(&[0, 1, -1, 1, 0, 0]),
                ev(&[0, 0, 1, -1, 1, 0]),
                ev(&[0, 0, 0, 1, -1, 1])
            ]
        );
        assert_eq!(basis_sn(2).unwrap(), vec![ev(&[1, 1])]);
        assert!(basis_sn(1).unwrap().is_empty());
    }

    #[test]
    fn basis_rank_is_n_minus_phi() {
        for n in 2..=100 {
            let b = basis_sn(n).unwrap();
            assert!(b.iter().all(in_vn), "n = {n}");
            assert_eq!(basis_sn_rank(n).unwrap(), vn_dimension(n), "n = {n}");
        }
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generator_v(6, 2, 0).unwrap(), unit_sum(6, &[0, 3]));
        assert_eq!(generator_v(6, 3, 1).unwrap(), unit_sum(6, &[1, 3, 5]));
        assert_eq!(generator_v(4, 2, 3).unwrap(), unit_sum(4, &[1, 3]));
        assert_eq!(generator_v(6, 4, 0), Err(Error::NotADivisor { n: 6, p: 4 }));
        assert_eq!(generator_v(6, 1, 0), Err(Error::NotADivisor { n: 6, p: 1 }));
        assert_eq!(generators_tn(4).len(), 2);
        assert_eq!(generators_tn(6).len(), 5);
        assert_eq!(generators_tn(30).len(), 31);
    }

    #[test]
    fn generators_in_vn() {
        for n in 2..=60 {
            for (_, v) in generators_tn(n) {
                assert!(v.is_nonnegative() && in_vn(&v));
            }
        }
    }

    #[test]
    fn block_identity() {
        for n in 2..=60 {
            for p in 2..=n {
                for q in p + 1..=n {
                    if cyclotomic::gcd(p, q) != 1 || n % (p * q) != 0 {
                        continue;
                    }
                    let npq = n / (p * q);
                    for i in 0..npq {
                        let mut lhs = ExpVec::zeros(n);
                        for j in 0..q {
                            lhs.add_scaled(&generator_v(n, p, (i + npq * j) as i64).unwrap(), 1);
                        }
                        let mut rhs = ExpVec::zeros(n);
                        for j in 0..p {
                            rhs.add_scaled(&generator_v(n, q, (i + npq * j) as i64).unwrap(), 1);
                        }
                        assert_eq!(lhs, rhs, "n={n} p={p} q={q} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn sigma_and_tau_examples() {
        assert_eq!(sigma(6, 2, 3, &[1, 1, 1], &[0, 0]).unwrap(), ev(&[1; 6]));
        assert!(sigma(6, 2, 3, &[1, 1, 1], &[-1, -1]).unwrap().is_zero());
        assert_eq!(sigma(6, 2, 3, &[1, 0, 0], &[0, 0]).unwrap(), unit_sum(6, &[0, 3]));
        assert_eq!(sigma(6, 2, 3, &[1, 0], &[0, 0]), Err(Error::LengthMismatch { expected: 3, found: 2 }));
        assert!(tau(30, &[vec![0; 15], vec![0; 10], vec![0; 6]]).unwrap().is_zero());
        assert_eq!(tau(6, &[vec![1, 0, 0], vec![0, 0]]).unwrap(), unit_sum(6, &[0, 3]));
        let mut c2 = vec![0; 15];
        c2[10] = -1;
        let mut c3 = vec![0; 10];
        c3[0] = 1;
        let mut c5 = vec![0; 6];
        c5[1] = 1;
        assert_eq!(tau(30, &[c2, c3, c5]).unwrap(), counterexample(30).unwrap());
        assert!(matches!(tau(6, &[vec![0; 3]]), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn kernel_of_sigma() {
        // brute force over small boxes: σ(c,d) = 0 iff c is m repeated q times and d = −m repeated p times
        for (n, p, q) in [(6, 2, 3), (12, 2, 3), (10, 2, 5)] {
            let (np, nq, npq) = (n / p, n / q, n / (p * q));
            let total = np + nq;
            let mut count = 0;
            for code in 0..3usize.pow(total as u32) {
                let mut x = code;
                let mut cd = Vec::with_capacity(total);
                for _ in 0..total {
                    cd.push((x % 3) as i64 - 1);
                    x /= 3;
                }
                let (c, d) = cd.split_at(np);
                let zero = sigma(n, p, q, c, d).unwrap().is_zero();
                let m = &c[..npq];
                let block = (0..np).all(|k| c[k] == m[k % npq]) && (0..nq).all(|k| d[k] == -m[k % npq]);
                assert_eq!(zero, block, "n={n} c={c:?} d={d:?}");
                count += zero as usize;
            }
            assert_eq!(count, 3usize.pow(npq as u32));
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&ev(&[2, 1, 2, 1]), 4).unwrap();
        assert_eq!(
            d.coeffs.into_iter().collect::<Vec<_>>(),
            vec![(GeneratorId { p: 2, i: 0 }, 2), (GeneratorId { p: 2, i: 1 }, 1)]
        );
        let d = decompose(&ev(&[1; 6]), 6).unwrap();
        assert_eq!(
            d.coeffs.into_iter().collect::<Vec<_>>(),
            vec![(GeneratorId { p: 3, i: 0 }, 1), (GeneratorId { p: 3, i: 1 }, 1)]
        );
        let cx = counterexample(30).unwrap();
        assert_eq!(decompose(&cx, 30), Err(Error::TooManyPrimeFactors { n: 30, count: 3 }));
        assert!(matches!(decompose(&ev(&[1, 0, 0, 0]), 4), Err(Error::NotInLattice(_))));
        assert!(matches!(decompose(&ev(&[-1, 0, -1, 0]), 4), Err(Error::NegativeEntry(_))));
        assert!(decompose(&ev(&[0]), 1).unwrap().coeffs.is_empty());
        assert_eq!(decompose(&ev(&[1, 1]), 2).unwrap().to_string(), "v(2,0)");
    }

    #[test]
    fn counterexample_examples() {
        let cx = counterexample(30).unwrap();
        assert_eq!(cx, unit_sum(30, &[0, 1, 7, 13, 19, 20]));
        assert_eq!((cx[15], cx[10], cx[6]), (0, 0, 0));
        assert!(in_vn(&cx) && cx.is_nonnegative());
        assert_eq!(counterexample(12), Err(Error::TooFewPrimeFactors { n: 12, count: 2 }));
        for n in [60, 42, 105, 210] {
            counterexample(n).unwrap();
        }
    }

    #[test]
    fn oracle_examples() {
        match monoid_member_oracle(&ev(&[1; 6]), 6, 100).unwrap() {
            OracleResult::Member(d) => assert_eq!(d.reconstruct(), ev(&[1; 6])),
            r => panic!("{r:?}"),
        }
        let cx = counterexample(30).unwrap();
        assert_eq!(monoid_member_oracle(&cx, 30, 100).unwrap(), OracleResult::NonMember { bound: 3 });
        assert_eq!(monoid_member_oracle(&ev(&[0; 4]), 4, 1).unwrap(), OracleResult::Member(Decomposition::empty(4)));
        assert_eq!(monoid_member_oracle(&ev(&[2, 2, 2, 2]), 4, 1).unwrap(), OracleResult::BudgetExceeded { budget: 1 });
        assert_eq!(monoid_member_oracle(&ev(&[1, 0, 0, 0]), 4, 10).unwrap(), OracleResult::NonMember { bound: 0 });
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (n, deg) in [(1, 3), (2, 4), (4, 4), (6, 4), (5, 5)] {
            let got = enumerate_vn_nonneg(n, deg).unwrap();
            let mut want = Vec::new();
            let total = (deg + 1).pow(n as u32);
            for code in 0..total {
                let mut x = code;
                let v: Vec<i64> = (0..n)
                    .map(|_| {
                        let d = (x % (deg + 1)) as i64;
                        x /= deg + 1;
                        d
                    })
                    .collect();
                let v = ExpVec::new(v);
                if v.degree() <= deg as i64 && in_vn(&v) {
                    want.push(v);
                }
            }
            want.sort_by(|a, b| a.entries().cmp(b.entries()));
            assert_eq!(got, want, "n = {n}");
        }
        assert_eq!(enumerate_vn_nonneg(4, 2).unwrap(), vec![ev(&[0; 4]), ev(&[0, 1, 0, 1]), ev(&[1, 0, 1, 0])]);
    }

    #[test]
    fn small_enumeration_decomposes() {
        for n in [4, 6, 9, 10] {
            for alpha in enumerate_vn_nonneg(n, 6).unwrap() {
                let d = decompose(&alpha, n).unwrap();
                assert_eq!(d.reconstruct(), alpha);
                assert!(matches!(monoid_member_oracle(&alpha, n, u64::MAX).unwrap(), OracleResult::Member(_)));
            }
        }
    }

    proptest! {
        #[test]
        fn decompose_reconstructs_generated_members(
            n in prop::sample::select(vec![2usize, 4, 6, 8, 9, 10, 12, 15, 18, 20, 36]),
            seed in proptest::collection::vec(0u64..3, 40),
        ) {
            let gens = generators_tn(n);
            let mut alpha = ExpVec::zeros(n);
            for (k, (_, v)) in gens.iter().enumerate() {
                alpha.add_scaled(v, seed[k % seed.len()] as i64);
            }
            let d = decompose(&alpha, n).unwrap();
            prop_assert_eq!(d.reconstruct(), alpha);
        }
    }
}
