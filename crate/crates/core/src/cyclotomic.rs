//! Exact arithmetic in the cyclotomic field Q(ζₙ).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^{φ(n)-1}` and are always
//! reduced modulo Φₙ, so two elements are equal exactly when their coordinate
//! vectors are. ζₙ is the canonical root of Φₙ; nothing here ever touches a
//! floating-point embedding.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Prime factorization of `n` as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_factors(n: usize) -> Vec<usize> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Euler's totient via the prime factorization of `n`. `euler_phi(0)` is 0.
pub fn euler_phi(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    factorize(n).into_iter().fold(1, |acc, (p, e)| acc * (p - 1) * p.pow(e - 1))
}

/// The n-th cyclotomic polynomial with integer coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicPoly {
    n: usize,
    coeffs: Vec<i64>,
}

impl CyclotomicPoly {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for CyclotomicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.unsigned_abs();
            match (k, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("x")?,
                (1, _) => write!(f, "{a}*x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{a}*x^{k}")?,
            }
        }
        Ok(())
    }
}

fn phi_cache() -> &'static RwLock<HashMap<usize, Arc<Vec<i64>>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<Vec<i64>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic_coeffs(n: usize) -> Arc<Vec<i64>> {
    if let Some(c) = phi_cache().read().unwrap().get(&n) {
        return c.clone();
    }
    // x^n - 1 divided by every Φ_d, d a proper divisor of n.
    let mut rem: Vec<i128> = vec![0; n + 1];
    rem[0] = -1;
    rem[n] = 1;
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        let div = cyclotomic_coeffs(d);
        rem = exact_div_monic(&rem, &div);
    }
    let coeffs: Vec<i64> =
        rem.into_iter().map(|c| i64::try_from(c).expect("cyclotomic coefficient exceeds i64")).collect();
    let coeffs = Arc::new(coeffs);
    phi_cache().write().unwrap().entry(n).or_insert(coeffs).clone()
}

/// Exact quotient of `num` by a monic integer polynomial; panics on a nonzero remainder.
fn exact_div_monic(num: &[i128], div: &[i64]) -> Vec<i128> {
    let dd = div.len() - 1;
    debug_assert_eq!(div[dd], 1);
    let mut rem = num.to_vec();
    let qlen = num.len() - dd;
    let mut quot = vec![0i128; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, &b) in div.iter().enumerate() {
                rem[k + j] = rem[k + j]
                    .checked_sub(c.checked_mul(b as i128).expect("overflow in cyclotomic division"))
                    .expect("overflow in cyclotomic division");
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

/// Φₙ by recursive exact division of `xⁿ − 1`; memoized per `n`.
pub fn cyclotomic_poly(n: usize) -> Result<CyclotomicPoly> {
    if n == 0 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(CyclotomicPoly { n, coeffs: cyclotomic_coeffs(n).as_ref().clone() })
}

/// Arithmetic context for Q(ζₙ); shared by every element and polynomial of order `n`.
#[derive(Debug)]
pub struct CycField {
    n: usize,
    phi: usize,
    modulus: Arc<Vec<i64>>,
    /// ζ^k in the power basis, `0 <= k < n`; the coordinates are integers.
    zeta_pows: Vec<Vec<i64>>,
}

fn field_cache() -> &'static RwLock<HashMap<usize, Arc<CycField>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<CycField>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The shared context for Q(ζₙ).
pub fn field(n: usize) -> Result<Arc<CycField>> {
    if n == 0 {
        return Err(Error::InvalidOrder(0));
    }
    if let Some(f) = field_cache().read().unwrap().get(&n) {
        return Ok(f.clone());
    }
    let f = Arc::new(CycField::build(n));
    Ok(field_cache().write().unwrap().entry(n).or_insert(f).clone())
}

impl CycField {
    fn build(n: usize) -> Self {
        let modulus = cyclotomic_coeffs(n);
        let phi = modulus.len() - 1;
        let mut zeta_pows = Vec::with_capacity(n);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..n {
            zeta_pows.push(cur.clone());
            // multiply by ζ: shift up, then fold ζ^φ = -Σ b_j ζ^j back in
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] -= top * modulus[j];
                }
            }
        }
        CycField { n, phi, modulus, zeta_pows }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// φ(n), the dimension of the power basis.
    pub fn degree(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub fn zero_coords(&self) -> Vec<Rational> {
        vec![Rational::ZERO; self.phi]
    }

    pub fn one_coords(&self) -> Vec<Rational> {
        let mut v = self.zero_coords();
        v[0] = Rational::ONE;
        v
    }

    pub fn rational_coords(&self, r: Rational) -> Vec<Rational> {
        let mut v = self.zero_coords();
        v[0] = r;
        v
    }

    /// ζ^k for any integer `k`.
    pub fn zeta_coords(&self, k: i64) -> Vec<Rational> {
        let idx = k.rem_euclid(self.n as i64) as usize;
        self.zeta_pows[idx].iter().map(|&c| Rational::from_i64(c)).collect()
    }

    /// Integer power-basis coordinates of ζ^k.
    pub fn zeta_int_coords(&self, k: i64) -> &[i64] {
        &self.zeta_pows[k.rem_euclid(self.n as i64) as usize]
    }

    pub fn is_zero(a: &[Rational]) -> bool {
        a.iter().all(Rational::is_zero)
    }

    pub fn is_rational(a: &[Rational]) -> bool {
        a[1..].iter().all(Rational::is_zero)
    }

    /// Reduces an arbitrary-length power-series coefficient vector modulo Φₙ.
    pub fn reduce(&self, mut buf: Vec<Rational>) -> Vec<Rational> {
        let phi = self.phi;
        if buf.len() < phi {
            buf.resize(phi, Rational::ZERO);
            return buf;
        }
        for k in (phi..buf.len()).rev() {
            if buf[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut buf[k]);
            for j in 0..phi {
                let b = self.modulus[j];
                if b != 0 {
                    buf[k - phi + j].add_mul(&c, &Rational::from_i64(-b));
                }
            }
        }
        buf.truncate(phi);
        buf
    }

    pub fn add_assign(a: &mut [Rational], b: &[Rational]) {
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x += y;
            }
        }
    }

    pub fn sub_assign(a: &mut [Rational], b: &[Rational]) {
        for (x, y) in a.iter_mut().zip(b) {
            if !y.is_zero() {
                *x -= y;
            }
        }
    }

    pub fn scale(a: &[Rational], r: &Rational) -> Vec<Rational> {
        a.iter().map(|x| x * r).collect()
    }

    pub fn neg(a: &[Rational]) -> Vec<Rational> {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = self.zero_coords();
        self.mul_add_into(&mut out, a, b);
        out
    }

    /// `acc += a * b`.
    pub fn mul_add_into(&self, acc: &mut [Rational], a: &[Rational], b: &[Rational]) {
        let phi = self.phi;
        if Self::is_rational(b) {
            let s = &b[0];
            if !s.is_zero() {
                for (x, y) in acc.iter_mut().zip(a) {
                    if !y.is_zero() {
                        x.add_mul(y, s);
                    }
                }
            }
            return;
        }
        if Self::is_rational(a) {
            return self.mul_add_into(acc, b, a);
        }
        let mut buf = vec![Rational::ZERO; 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    buf[i + j].add_mul(x, y);
                }
            }
        }
        let red = self.reduce(buf);
        Self::add_assign(acc, &red);
    }

    /// Inverse by the extended Euclidean algorithm against Φₙ.
    pub fn inv(&self, a: &[Rational]) -> Option<Vec<Rational>> {
        if Self::is_zero(a) {
            return None;
        }
        let modulus: Vec<Rational> = self.modulus.iter().map(|&c| Rational::from_i64(c)).collect();
        let mut r0 = modulus;
        let mut r1 = trim(a.to_vec());
        let mut s0: Vec<Rational> = vec![];
        let mut s1 = vec![Rational::ONE];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant because Φₙ is irreducible
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].inv()?;
        let scaled: Vec<Rational> = s0.iter().map(|x| x * &c).collect();
        Some(self.reduce(scaled))
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(Rational::is_zero) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j].add_mul(x, y);
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::ZERO; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let lead_inv = den[dd].inv().expect("nonzero leading coefficient");
    let mut quot = vec![Rational::ZERO; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            let t = &c * d;
            rem[k + j] -= &t;
        }
        quot[k] = c;
    }
    rem.truncate(dd);
    (trim(quot), trim(rem))
}

/// An element of Q(ζₙ) in reduced power-basis form.
#[derive(Clone)]
pub struct CycElement {
    field: Arc<CycField>,
    coords: Vec<Rational>,
}

impl PartialEq for CycElement {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coords == other.coords
    }
}

impl Eq for CycElement {}

impl std::hash::Hash for CycElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.field.n.hash(state);
        self.coords.hash(state);
    }
}

/// Operation selector for [`cyc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
    Inv,
}

/// Single entry point for the four field operations; `b` is ignored for `Inv`.
pub fn cyc_arith(op: CycOp, a: &CycElement, b: Option<&CycElement>) -> Result<CycElement> {
    let need_b = || b.ok_or(Error::LengthMismatch { expected: 2, found: 1 });
    match op {
        CycOp::Add => a.checked_add(need_b()?),
        CycOp::Sub => a.checked_sub(need_b()?),
        CycOp::Mul => a.checked_mul(need_b()?),
        CycOp::Inv => a.inv(),
    }
}

/// ζₙᵏ reduced modulo Φₙ; `k` is taken mod `n`.
pub fn zeta_power(n: usize, k: i64) -> Result<CycElement> {
    let f = field(n)?;
    let coords = f.zeta_coords(k);
    Ok(CycElement { field: f, coords })
}

impl CycElement {
    pub fn from_coords(field: Arc<CycField>, coords: Vec<Rational>) -> Self {
        assert_eq!(coords.len(), field.phi, "coordinate vector length must be phi(n)");
        CycElement { field, coords }
    }

    /// Reduces an arbitrary polynomial `Σ cₖ ζᵏ` (ascending `cₖ`) into the power basis.
    pub fn from_power_series(n: usize, coeffs: &[Rational]) -> Result<Self> {
        let f = field(n)?;
        let mut acc = f.zero_coords();
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (x, &z) in acc.iter_mut().zip(f.zeta_int_coords(k as i64)) {
                if z != 0 {
                    x.add_mul(c, &Rational::from_i64(z));
                }
            }
        }
        Ok(CycElement { field: f, coords: acc })
    }

    pub fn zero(n: usize) -> Result<Self> {
        let f = field(n)?;
        let coords = f.zero_coords();
        Ok(CycElement { field: f, coords })
    }

    pub fn one(n: usize) -> Result<Self> {
        Self::from_rational(n, Rational::ONE)
    }

    pub fn from_rational(n: usize, r: Rational) -> Result<Self> {
        let f = field(n)?;
        let coords = f.rational_coords(r);
        Ok(CycElement { field: f, coords })
    }

    pub fn order(&self) -> usize {
        self.field.n
    }

    pub fn field(&self) -> &Arc<CycField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        CycField::is_zero(&self.coords)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && CycField::is_rational(&self.coords)
    }

    /// The value if it lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        CycField::is_rational(&self.coords).then(|| &self.coords[0])
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.n != other.field.n {
            return Err(Error::OrderMismatch { left: self.field.n, right: other.field.n });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coords = self.coords.clone();
        CycField::add_assign(&mut coords, &other.coords);
        Ok(CycElement { field: self.field.clone(), coords })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut coords = self.coords.clone();
        CycField::sub_assign(&mut coords, &other.coords);
        Ok(CycElement { field: self.field.clone(), coords })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coords = self.field.mul(&self.coords, &other.coords);
        Ok(CycElement { field: self.field.clone(), coords })
    }

    pub fn inv(&self) -> Result<Self> {
        let coords = self.field.inv(&self.coords).ok_or(Error::DivisionByZero)?;
        Ok(CycElement { field: self.field.clone(), coords })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycElement { field: self.field.clone(), coords: CycField::scale(&self.coords, r) }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.field.one_coords();
        let mut base = self.coords.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.field.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.field.mul(&base, &base);
            }
        }
        CycElement { field: self.field.clone(), coords: acc }
    }
}

/// Operators panic on an order mismatch; use the `checked_*` methods to get an error instead.
impl Add for &CycElement {
    type Output = CycElement;
    fn add(self, rhs: &CycElement) -> CycElement {
        self.checked_add(rhs).expect("cyclotomic order mismatch")
    }
}

impl Sub for &CycElement {
    type Output = CycElement;
    fn sub(self, rhs: &CycElement) -> CycElement {
        self.checked_sub(rhs).expect("cyclotomic order mismatch")
    }
}

impl Mul for &CycElement {
    type Output = CycElement;
    fn mul(self, rhs: &CycElement) -> CycElement {
        self.checked_mul(rhs).expect("cyclotomic order mismatch")
    }
}

impl Neg for &CycElement {
    type Output = CycElement;
    fn neg(self) -> CycElement {
        CycElement { field: self.field.clone(), coords: CycField::neg(&self.coords) }
    }
}

/// Writes `Σ cₖ ζᵏ` from the highest power down, e.g. `zeta - 1` or `-3/2*zeta^2 + 1`.
pub fn format_coords(coords: &[Rational]) -> String {
    let mut out = String::new();
    for (k, c) in coords.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let zeta = match k {
            0 => String::new(),
            1 => "zeta".to_string(),
            _ => format!("zeta^{k}"),
        };
        match (k, a.is_one()) {
            (0, _) => out.push_str(&a.to_string()),
            (_, true) => out.push_str(&zeta),
            _ => out.push_str(&format!("{a}*{zeta}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_coords(&self.coords))
    }
}

impl fmt::Debug for CycElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(zeta_{})[{}]", self.field.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    /// Schoolbook product of integer polynomials, used as an independent check.
    fn int_poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    #[test]
    fn cyclotomic_poly_small_orders() {
        assert_eq!(cyclotomic_poly(1).unwrap().coeffs(), &[-1, 1]);
        assert_eq!(cyclotomic_poly(2).unwrap().coeffs(), &[1, 1]);
        assert_eq!(cyclotomic_poly(6).unwrap().coeffs(), &[1, -1, 1]);
        assert_eq!(cyclotomic_poly(12).unwrap().coeffs(), &[1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_poly(0), Err(Error::InvalidOrder(0)));
        // Φ₁₀₅ is the first with a coefficient outside {-1, 0, 1}
        assert!(cyclotomic_poly(105).unwrap().coeffs().contains(&-2));
        assert_eq!(cyclotomic_poly(6).unwrap().to_string(), "x^2 - x + 1");
    }

    #[test]
    fn cyclotomic_product_is_x_n_minus_one() {
        for n in 1..=100 {
            let mut prod = vec![1i64];
            for d in divisors(n) {
                let phi = cyclotomic_poly(d).unwrap();
                assert_eq!(phi.degree(), euler_phi(d));
                assert_eq!(*phi.coeffs().last().unwrap(), 1);
                assert_ne!(phi.coeffs()[0], 0);
                prod = int_poly_mul(&prod, phi.coeffs());
            }
            let mut expect = vec![0; n + 1];
            expect[0] = -1;
            expect[n] = 1;
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn totient_matches_brute_force() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(7), 6);
        for n in 1..=200 {
            let brute = (1..=n).filter(|&k| gcd(k, n) == 1).count();
            assert_eq!(euler_phi(n), brute, "n = {n}");
        }
    }

    #[test]
    fn zeta_power_examples() {
        assert_eq!(zeta_power(4, 2).unwrap(), CycElement::from_rational(4, r(-1)).unwrap());
        assert_eq!(zeta_power(6, 3).unwrap(), CycElement::from_rational(6, r(-1)).unwrap());
        assert!(zeta_power(5, 5).unwrap().is_one());
        assert_eq!(zeta_power(5, -1).unwrap(), zeta_power(5, 4).unwrap());
    }

    #[test]
    fn arithmetic_examples() {
        let one = CycElement::one(3).unwrap();
        let s = &(&one + &zeta_power(3, 1).unwrap()) + &zeta_power(3, 2).unwrap();
        assert!(s.is_zero());

        let i = zeta_power(4, 1).unwrap();
        assert_eq!(cyc_arith(CycOp::Inv, &i, None).unwrap(), -&i);

        let z6 = zeta_power(6, 1).unwrap();
        let expect = &z6 - &CycElement::one(6).unwrap();
        assert_eq!(cyc_arith(CycOp::Mul, &z6, Some(&z6)).unwrap(), expect);

        assert_eq!(CycElement::zero(5).unwrap().inv(), Err(Error::DivisionByZero));
        assert_eq!(cyc_arith(CycOp::Add, &z6, Some(&i)), Err(Error::OrderMismatch { left: 6, right: 4 }));
    }

    #[test]
    fn is_zero_examples() {
        assert!(CycElement::zero(7).unwrap().is_zero());
        let one2 = CycElement::one(2).unwrap();
        assert!((&one2 + &zeta_power(2, 1).unwrap()).is_zero());
        let one4 = CycElement::one(4).unwrap();
        assert!(!(&one4 + &zeta_power(4, 1).unwrap()).is_zero());
    }

    #[test]
    fn roots_of_unity_sum_and_pair() {
        for n in 1..=60 {
            let mut sum = CycElement::zero(n).unwrap();
            for k in 0..n as i64 {
                let z = zeta_power(n, k).unwrap();
                assert!(!z.is_zero());
                if k > 0 {
                    assert!((&z * &zeta_power(n, n as i64 - k).unwrap()).is_one(), "n={n} k={k}");
                }
                sum = &sum + &z;
            }
            assert_eq!(sum.is_zero(), n >= 2, "n = {n}");
        }
    }

    fn random_element(rng: &mut ChaCha8Rng, n: usize) -> CycElement {
        let f = field(n).unwrap();
        let coords =
            (0..f.degree()).map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)).unwrap()).collect();
        CycElement::from_coords(f, coords)
    }

    #[test]
    fn field_axioms_on_random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [3, 5, 7, 8, 9, 12, 15] {
            for _ in 0..1000 {
                let a = random_element(&mut rng, n);
                let b = random_element(&mut rng, n);
                let c = random_element(&mut rng, n);
                assert_eq!(&a + &b, &b + &a);
                assert_eq!(&a * &b, &b * &a);
                assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
                assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                if !b.is_zero() {
                    assert_eq!(&(&a * &b) * &b.inv().unwrap(), a);
                }
            }
        }
    }

    #[test]
    fn from_power_series_reduces() {
        // ζ₆⁶ = 1
        let mut c = vec![Rational::ZERO; 7];
        c[6] = Rational::ONE;
        assert!(CycElement::from_power_series(6, &c).unwrap().is_one());
    }

    #[test]
    fn display_is_descending() {
        let z = zeta_power(6, 2).unwrap();
        assert_eq!(z.to_string(), "zeta - 1");
        assert_eq!(CycElement::zero(6).unwrap().to_string(), "0");
        assert_eq!((-&zeta_power(8, 3).unwrap()).scale(&Rational::new(3, 2).unwrap()).to_string(), "-3/2*zeta^3");
    }
}
