//! Batch runner for every identity suite, scaled by a maximum order.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::circulant::{self, BlockSpec, Limits};
use crate::cyclotomic::{self, cyclotomic_poly, divisors, factorize, gcd, prime_factors, CycElement};
use crate::error::{Error, Result};
use crate::ideal::{self, GenRing};
use crate::invariant::{self, random_invariant, random_non_invariant};
use crate::lattice::{self, OracleResult};
use crate::multipoly::{apply_operator, to_x, to_y, Basis, ExpVec, Operator, Poly, SparsePoly};
use crate::rational::Rational;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    /// What was covered, or the first failure.
    pub detail: String,
    pub elapsed_ms: f64,
}

type Outcome = std::result::Result<String, String>;

type CheckFn = fn(usize, &Limits, &mut ChaCha8Rng) -> Outcome;

struct Check {
    name: &'static str,
    run: CheckFn,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn checks() -> Vec<Check> {
    vec![
        Check { name: "cyclotomic.phi_product", run: |m, _, _| phi_product(m) },
        Check { name: "cyclotomic.field_axioms", run: |m, _, rng| field_axioms(m, rng) },
        Check { name: "multipoly.eigenrelation", run: |m, _, _| eigenrelation(m) },
        Check { name: "multipoly.derivation_naturality", run: |m, _, rng| derivation_naturality(m.min(6), rng) },
        Check { name: "lattice.basis_rank", run: |m, _, _| basis_rank(m) },
        Check { name: "lattice.generators_in_lattice", run: |m, _, _| generators_in_lattice(m) },
        Check { name: "lattice.block_identity", run: |m, _, _| block_identity(m) },
        Check { name: "lattice.decomposition", run: |m, _, _| decomposition(m) },
        Check { name: "lattice.gap_witness", run: |m, _, _| gap(m) },
        Check { name: "circulant.factorization_x", run: |m, l, _| factorization(m.min(10), Basis::X, l) },
        Check { name: "circulant.factorization_y", run: |m, l, _| factorization(m, Basis::Y, l) },
        Check { name: "circulant.block_monomials", run: |m, l, _| block_monomials(m.min(12), l) },
        Check { name: "invariant.express_round_trip", run: |m, _, rng| express_round_trip(m.min(12), rng) },
        Check { name: "invariant.sl_invariance", run: sl_invariance },
        Check { name: "ideal.kernel_generation", run: |m, _, rng| kernel_generation(m, rng) },
        Check { name: "ideal.rho_injective", run: |m, _, rng| rho_injective(m, rng) },
    ]
}

/// Names of all checks, in report order.
pub fn check_names() -> Vec<&'static str> {
    let mut v: Vec<_> = checks().into_iter().map(|c| c.name).collect();
    v.sort_unstable();
    v
}

/// Runs every check for orders up to `n_max`, in parallel; results are
/// sorted by check name. Each check gets its own RNG derived from `seed`
/// and its name, so results do not depend on scheduling.
pub fn verify_all(n_max: usize, limits: &Limits, seed: u64) -> Result<Vec<CheckResult>> {
    if n_max == 0 {
        return Err(Error::InvalidOrder(0));
    }
    limits.check(n_max, Basis::Y)?;
    let mut results: Vec<CheckResult> = checks()
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ name_hash(c.name));
            let start = Instant::now();
            let outcome = (c.run)(n_max, limits, &mut rng);
            let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            let (passed, detail) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CheckResult { name: c.name, passed, detail, elapsed_ms }
        })
        .collect();
    results.sort_by_key(|r| r.name);
    Ok(results)
}

fn name_hash(name: &str) -> u64 {
    // FNV-1a, fixed across platforms and releases
    name.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
}

fn phi_product(m: usize) -> Outcome {
    for n in 1..=m {
        let mut prod = vec![1i64];
        for d in divisors(n) {
            let phi = cyclotomic_poly(d).map_err(|e| e.to_string())?;
            let mut next = vec![0i64; prod.len() + phi.degree()];
            for (i, a) in prod.iter().enumerate() {
                for (j, b) in phi.coeffs().iter().enumerate() {
                    next[i + j] += a * b;
                }
            }
            prod = next;
        }
        let mut want = vec![0i64; n + 1];
        want[0] = -1;
        want[n] = 1;
        ensure!(prod == want, "product of cyclotomic polynomials over divisors of {n} is not x^{n} - 1");
    }
    Ok(format!("n = 1..{m}"))
}

fn random_element(n: usize, rng: &mut ChaCha8Rng) -> CycElement {
    let field = cyclotomic::field(n).expect("n > 0");
    let coords =
        (0..field.degree()).map(|_| Rational::new(rng.gen_range(-9..=9), rng.gen_range(1..=5)).unwrap()).collect();
    CycElement::from_coords(field, coords)
}

fn field_axioms(m: usize, rng: &mut ChaCha8Rng) -> Outcome {
    for n in 1..=m {
        for _ in 0..50 {
            let (a, b, c) = (random_element(n, rng), random_element(n, rng), random_element(n, rng));
            ensure!(&(&a * &b) * &c == &a * &(&b * &c), "associativity fails in Q(zeta_{n})");
            ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity fails in Q(zeta_{n})");
            if !a.is_zero() {
                ensure!((&a * &a.inv().unwrap()).is_one(), "a * a^-1 != 1 in Q(zeta_{n}) for a = {a}");
            }
        }
    }
    Ok(format!("n = 1..{m}, 50 triples each"))
}

fn eigenrelation(m: usize) -> Outcome {
    for n in 1..=m {
        for i in 0..n {
            let yi = Poly::var(n, Basis::Y, i).unwrap();
            let xi = to_x(&yi).unwrap();
            for (op, k) in [(Operator::D, i as i64), (Operator::Delta, -(i as i64))] {
                let z = cyclotomic::zeta_power(n, k).unwrap();
                ensure!(apply_operator(op, &yi) == yi.scale(&z).unwrap(), "{op:?}(y{i}) != zeta^{k} y{i} for n = {n}");
                ensure!(
                    apply_operator(op, &xi) == xi.scale(&z).unwrap(),
                    "{op:?} of y{i} in x-space is wrong for n = {n}"
                );
            }
        }
    }
    Ok(format!("n = 1..{m}, all i, both bases"))
}

/// A random x-space polynomial with small rational coefficients.
pub fn random_x_poly(n: usize, rng: &mut impl Rng, max_deg: usize, terms: usize) -> Poly {
    let field = cyclotomic::field(n).expect("n > 0");
    let mut f = SparsePoly::zero(field.clone(), n);
    for _ in 0..terms {
        let mut e = vec![0; n];
        for _ in 0..rng.gen_range(0..=max_deg) {
            e[rng.gen_range(0..n)] += 1;
        }
        let coords: Vec<Rational> =
            (0..field.degree()).map(|_| Rational::new(rng.gen_range(-4..=4), rng.gen_range(1..=3)).unwrap()).collect();
        f.add_term(ExpVec::new(e), &coords);
    }
    Poly::from_sparse(Basis::X, f)
}

fn derivation_naturality(m: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for n in 1..=m {
        for _ in 0..10 {
            let f = random_x_poly(n, rng, 3, 4);
            let g = random_x_poly(n, rng, 3, 4);
            for op in [Operator::D, Operator::Delta] {
                let lhs = apply_operator(op, &(&f * &g));
                let rhs = &(&apply_operator(op, &f) * &g) + &(&f * &apply_operator(op, &g));
                ensure!(lhs == rhs, "{op:?} is not a derivation on f = {f}, g = {g}");
                let a = to_y(&apply_operator(op, &f)).unwrap();
                let b = apply_operator(op, &to_y(&f).unwrap());
                ensure!(a == b, "{op:?} does not commute with the basis change on f = {f}");
            }
            ensure!(to_x(&to_y(&f).unwrap()).unwrap() == f, "round trip fails on f = {f}");
            count += 1;
        }
    }
    Ok(format!("n = 1..{m}, {count} random pairs"))
}

fn basis_rank(m: usize) -> Outcome {
    for n in 2..=m.max(2) {
        let b = lattice::basis_sn(n).unwrap();
        ensure!(b.iter().all(lattice::in_vn), "a basis vector for n = {n} is not in V_n");
        let r = lattice::basis_sn_rank(n).unwrap();
        ensure!(r == lattice::vn_dimension(n), "rank {r} != n - phi(n) = {} for n = {n}", lattice::vn_dimension(n));
    }
    Ok(format!("n = 2..{}", m.max(2)))
}

fn generators_in_lattice(m: usize) -> Outcome {
    for n in 2..=m.max(2) {
        for (g, v) in lattice::generators_tn(n) {
            ensure!(v.is_nonnegative() && lattice::in_vn(&v), "{g} is not in V_n for n = {n}");
        }
    }
    Ok(format!("n = 2..{}", m.max(2)))
}

fn block_identity(m: usize) -> Outcome {
    let mut count = 0;
    for n in 2..=m {
        for p in 2..=n {
            for q in p + 1..=n {
                if gcd(p, q) != 1 || n % (p * q) != 0 {
                    continue;
                }
                let npq = n / (p * q);
                for i in 0..npq {
                    let mut lhs = ExpVec::zeros(n);
                    for j in 0..q {
                        lhs.add_scaled(&lattice::generator_v(n, p, (i + npq * j) as i64).unwrap(), 1);
                    }
                    let mut rhs = ExpVec::zeros(n);
                    for j in 0..p {
                        rhs.add_scaled(&lattice::generator_v(n, q, (i + npq * j) as i64).unwrap(), 1);
                    }
                    ensure!(lhs == rhs, "block identity fails for n = {n}, p = {p}, q = {q}, i = {i}");
                    count += 1;
                }
            }
        }
    }
    Ok(format!("n = 2..{m}, {count} block identities"))
}

/// Degree bound used when enumerating Vₙ ∩ Z≥0ⁿ at order n.
pub fn decomposition_degree(n: usize) -> usize {
    match n {
        0..=12 => 8,
        13..=18 => 6,
        _ => 4,
    }
}

fn decomposition(m: usize) -> Outcome {
    let mut count = 0;
    for n in 2..=m {
        if prime_factors(n).len() > 2 {
            continue;
        }
        for alpha in lattice::enumerate_vn_nonneg(n, decomposition_degree(n)).unwrap() {
            let d = lattice::decompose(&alpha, n).map_err(|e| format!("decompose({alpha}) at n = {n}: {e}"))?;
            ensure!(d.reconstruct() == alpha, "decomposition of {alpha} does not reconstruct at n = {n}");
            let oracle = lattice::monoid_member_oracle(&alpha, n, u64::MAX).unwrap();
            ensure!(matches!(oracle, OracleResult::Member(_)), "oracle disagrees on {alpha} at n = {n}: {oracle:?}");
            count += 1;
        }
    }
    Ok(format!("n = 2..{m} with at most two primes, {count} exponent vectors"))
}

fn gap(m: usize) -> Outcome {
    let ns: Vec<usize> = (2..=m).filter(|&n| prime_factors(n).len() >= 3).collect();
    for &n in &ns {
        let w = invariant::gap_witness(n).map_err(|e| e.to_string())?;
        ensure!(w.confirmed(), "gap witness {} at n = {n} not confirmed: {:?}", w.alpha, w.oracle);
    }
    if ns.is_empty() {
        return Ok(format!("no n <= {m} has three prime factors"));
    }
    Ok(format!("n in {ns:?}"))
}

fn factorization(m: usize, basis: Basis, limits: &Limits) -> Outcome {
    let mut count = 0;
    for n in 2..=m {
        for p in divisors(n).into_iter().filter(|&p| p >= 2) {
            let r = circulant::verify_factorization(n, p, basis, limits).map_err(|e| e.to_string())?;
            ensure!(
                r.holds(),
                "factorization fails for n = {n}, p = {p}: first mismatch at {}",
                r.first_mismatch.unwrap().0
            );
            count += 1;
        }
    }
    Ok(format!("n = 2..{m}, {count} (n, p) pairs"))
}

fn block_monomials(m: usize, limits: &Limits) -> Outcome {
    let mut count = 0;
    for n in 2..=m {
        for p in divisors(n).into_iter().filter(|&p| p >= 2) {
            for s in BlockSpec::all(n, p).unwrap() {
                ensure!(
                    circulant::verify_monomial_identity(&s, limits).map_err(|e| e.to_string())?,
                    "block identity fails for {s:?}"
                );
                count += 1;
            }
        }
    }
    Ok(format!("n = 2..{m}, {count} blocks"))
}

fn express_round_trip(m: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for n in 2..=m {
        if prime_factors(n).len() > 2 {
            continue;
        }
        for _ in 0..5 {
            let f = random_invariant(n, rng, 10, 3).unwrap();
            let e = invariant::express_in_generators(&f).map_err(|e| e.to_string())?;
            ensure!(e.evaluate_y() == f, "generator expression of {f} does not evaluate back");
            count += 1;
        }
    }
    Ok(format!("n = 2..{m}, {count} random invariants"))
}

fn sl_invariance(m: usize, limits: &Limits, rng: &mut ChaCha8Rng) -> Outcome {
    for n in 1..=m.min(8) {
        let det = circulant::circulant_det_with(n, limits).map_err(|e| e.to_string())?;
        ensure!(invariant::is_sl_invariant(&det).unwrap(), "circulant determinant of order {n} is not SL-invariant");
    }
    let primes: Vec<usize> = (2..=m.min(13)).filter(|&n| factorize(n).len() == 1 && factorize(n)[0].1 == 1).collect();
    for &n in &primes {
        for k in 0..40 {
            let f =
                if k % 2 == 0 { random_invariant(n, rng, 5, 3) } else { random_non_invariant(n, rng, 5, 3) }.unwrap();
            let sl = invariant::is_sl_invariant(&f).unwrap();
            let d = invariant::is_invariant(&f).invariant();
            ensure!(sl == d, "SL-invariance ({sl}) and D-invariance ({d}) disagree on {f}");
            ensure!(d == (k % 2 == 0), "generated input {f} has the wrong invariance");
        }
    }
    Ok(format!("determinants n = 1..{}, primes {primes:?} with 40 inputs each", m.min(8)))
}

fn kernel_generation(m: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut count = 0;
    for n in (6..=m).step_by(6) {
        let ring = GenRing::new(n, 2, 3).unwrap();
        for _ in 0..30 {
            let f = ideal::random_ideal_element(ring, rng, 10, 6);
            ensure!(
                matches!(ideal::kernel_membership(&f, true), ideal::KernelResult::InKernel(Some(_))),
                "ideal element {f} not certified at n = {n}"
            );
            let g = ideal::random_non_element(ring, rng, 10, 6);
            ensure!(!ideal::kernel_membership(&g, false).in_kernel(), "non-element {g} reported in kernel at n = {n}");
            count += 2;
        }
    }
    if count == 0 {
        return Ok(format!("no multiple of 6 up to {m}"));
    }
    Ok(format!("(p, q) = (2, 3), n = 6..{m} step 6, {count} inputs"))
}

fn rho_injective(m: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let mut pairs = Vec::new();
    for n in 2..=m {
        let f = factorize(n);
        if f.len() == 1 {
            let p = f[0].0;
            let r = ideal::kernel_rho_trivial(n, p, 10, rng).map_err(|e| e.to_string())?;
            ensure!(r.holds(), "ker rho is not trivial for n = {n}, p = {p}: {r:?}");
            pairs.push((n, p));
        }
    }
    Ok(format!("{} prime-power orders up to {m}", pairs.len()))
}
