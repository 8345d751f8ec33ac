//! Circulant determinants and their block factorization.
//!
//! The p×p circulant determinant in u₀..u_{p−1} is the product of its
//! eigenvalues Σⱼ ωʲᵏ uⱼ (ω a primitive p-th root of unity), which is how
//! every determinant here is computed. Multiplying by one linear factor at a
//! time keeps intermediate expansions as small as the final one.

use std::sync::Arc;

use rayon::prelude::*;

use crate::cyclotomic::{self, CycElement, CycField};
use crate::error::{Error, Result};
use crate::lattice::GeneratorId;
use crate::multipoly::{self, to_x, to_y, Basis, ExpVec, Poly, SparsePoly};

/// Size guards for expansions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest n for which x-space products are expanded.
    pub max_x_n: usize,
    /// Largest n for y-space identity checks.
    pub max_y_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_x_n: 16, max_y_n: 30 }
    }
}

impl Limits {
    /// Both guards set to `n`.
    pub fn uniform(n: usize) -> Self {
        Limits { max_x_n: n, max_y_n: n }
    }

    pub fn check(&self, n: usize, basis: Basis) -> Result<()> {
        let limit = match basis {
            Basis::X => self.max_x_n,
            Basis::Y => self.max_y_n,
        };
        if n > limit {
            return Err(Error::ExpansionTooLarge { n, limit });
        }
        Ok(())
    }
}

/// Identifies the block determinant Θₚ(y⁽ᵖ⁾ᵢ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    pub n: usize,
    pub p: usize,
    pub i: usize,
}

impl BlockSpec {
    pub fn new(n: usize, p: usize, i: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidOrder(0));
        }
        if p < 2 || !n.is_multiple_of(p) {
            return Err(Error::NotADivisor { n, p });
        }
        if i >= n / p {
            return Err(Error::IndexOutOfRange { name: format!("block {i}"), pos: i, limit: n / p });
        }
        Ok(BlockSpec { n, p, i })
    }

    /// All blocks (n, p, i) for 0 ≤ i < n/p.
    pub fn all(n: usize, p: usize) -> Result<Vec<BlockSpec>> {
        BlockSpec::new(n, p, 0)?;
        Ok((0..n / p).map(|i| BlockSpec { n, p, i }).collect())
    }

    /// The exponent vector whose y-monomial this block determinant equals.
    pub fn generator(&self) -> GeneratorId {
        GeneratorId { p: self.p, i: self.i }
    }
}

/// Π_k Σ_j ζₙ^{(n/p)jk} forms[j]: the circulant determinant of `forms`.
fn circulant_of_forms(field: &Arc<CycField>, forms: &[SparsePoly]) -> SparsePoly {
    let n = field.order();
    let p = forms.len();
    let step = (n / p) as i64;
    let nvars = forms[0].nvars();
    let mut acc = SparsePoly::one(field.clone(), nvars);
    for k in 0..p as i64 {
        let mut factor = SparsePoly::zero(field.clone(), nvars);
        for (j, u) in forms.iter().enumerate() {
            factor = factor.add(&u.scale(&field.zeta_coords(step * j as i64 * k)));
        }
        acc = acc.mul(&factor);
    }
    acc
}

fn x_vars(field: &Arc<CycField>, n: usize) -> Vec<SparsePoly> {
    (0..n).map(|j| SparsePoly::var(field.clone(), n, j)).collect()
}

/// Θₙ(x), the determinant of the circulant matrix with first row x₀..x_{n−1}.
pub fn circulant_det(n: usize) -> Result<Poly> {
    circulant_det_with(n, &Limits::default())
}

pub fn circulant_det_with(n: usize, limits: &Limits) -> Result<Poly> {
    let field = cyclotomic::field(n)?;
    limits.check(n, Basis::X)?;
    let det = circulant_of_forms(&field, &x_vars(&field, n));
    let f = Poly::from_sparse(Basis::X, det);
    assert!(f.has_integer_coeffs(), "circulant determinant has integer coefficients");
    Ok(f)
}

/// Θₙ in y-space: the same eigenvalue product with each xⱼ first rewritten in y.
pub fn circulant_det_y(n: usize, limits: &Limits) -> Result<Poly> {
    let field = cyclotomic::field(n)?;
    limits.check(n, Basis::Y)?;
    let forms = linear_forms_to_y(&x_vars(&field, n))?;
    Ok(Poly::from_sparse(Basis::Y, circulant_of_forms(&field, &forms)))
}

fn linear_forms_to_y(forms: &[SparsePoly]) -> Result<Vec<SparsePoly>> {
    forms.iter().map(|u| Ok(to_y(&Poly::from_sparse(Basis::X, u.clone()))?.into_sparse())).collect()
}

fn block_forms(field: &Arc<CycField>, spec: &BlockSpec) -> Vec<SparsePoly> {
    let BlockSpec { n, p, i } = *spec;
    (0..p)
        .map(|j| {
            let mut form = SparsePoly::zero(field.clone(), n);
            for l in 0..n / p {
                let m = j + p * l;
                form.add_term(ExpVec::unit(n, m), &field.zeta_coords((i * m) as i64));
            }
            form
        })
        .collect()
}

/// The block variables y⁽ᵖ⁾ᵢⱼ = Σₗ ζ^{i(j+pl)} x_{j+pl}, j = 0..p−1.
pub fn block_vars(spec: &BlockSpec) -> Result<Vec<Poly>> {
    let field = cyclotomic::field(spec.n)?;
    Ok(block_forms(&field, spec).into_iter().map(|u| Poly::from_sparse(Basis::X, u)).collect())
}

/// Θₚ(y⁽ᵖ⁾ᵢ) expanded in x-space.
pub fn theta_block(spec: &BlockSpec, limits: &Limits) -> Result<Poly> {
    let field = cyclotomic::field(spec.n)?;
    limits.check(spec.n, Basis::X)?;
    Ok(Poly::from_sparse(Basis::X, circulant_of_forms(&field, &block_forms(&field, spec))))
}

/// Θₚ(y⁽ᵖ⁾ᵢ) in y-space: the block variables are rewritten in y before the
/// determinant is taken.
pub fn theta_block_y(spec: &BlockSpec, limits: &Limits) -> Result<Poly> {
    let field = cyclotomic::field(spec.n)?;
    limits.check(spec.n, Basis::Y)?;
    let forms = linear_forms_to_y(&block_forms(&field, spec))?;
    Ok(Poly::from_sparse(Basis::Y, circulant_of_forms(&field, &forms)))
}

/// Outcome of comparing Θₙ with the product of its block determinants.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub n: usize,
    pub p: usize,
    pub basis: Basis,
    pub blocks: usize,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    /// First differing term in canonical order: exponent, lhs and rhs coefficients.
    pub first_mismatch: Option<(ExpVec, CycElement, CycElement)>,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Checks Θₙ = Π_{i<n/p} Θₚ(y⁽ᵖ⁾ᵢ) by exact term-map comparison in the given basis.
pub fn verify_factorization(n: usize, p: usize, basis: Basis, limits: &Limits) -> Result<FactorizationReport> {
    let specs = BlockSpec::all(n, p)?;
    let (lhs, blocks) = match basis {
        Basis::X => {
            let blocks: Result<Vec<Poly>> = specs.par_iter().map(|s| theta_block(s, limits)).collect();
            (circulant_det_with(n, limits)?, blocks?)
        }
        Basis::Y => {
            let blocks: Result<Vec<Poly>> = specs.par_iter().map(|s| theta_block_y(s, limits)).collect();
            (circulant_det_y(n, limits)?, blocks?)
        }
    };
    let mut rhs = Poly::one(n, basis)?;
    for b in &blocks {
        rhs = &rhs * b;
    }
    Ok(FactorizationReport {
        n,
        p,
        basis,
        blocks: blocks.len(),
        lhs_terms: lhs.len(),
        rhs_terms: rhs.len(),
        first_mismatch: lhs.first_difference(&rhs),
    })
}

/// The y-monomial y^{v⁽ᵖ⁾ᵢ} with coefficient 1.
pub fn block_monomial(spec: &BlockSpec) -> Result<Poly> {
    let v = spec.generator().vector(spec.n);
    Poly::monomial(Basis::Y, v, &CycElement::one(spec.n)?)
}

/// Checks that Θₚ(y⁽ᵖ⁾ᵢ) is the single y-monomial y^{v⁽ᵖ⁾ᵢ}.
///
/// The comparison is made in x-space, against the image of the monomial
/// under the y→x substitution; the two basis changes are mutually inverse,
/// so this is equivalent to comparing after `to_y` and avoids substituting
/// into a large x-space expansion.
pub fn verify_monomial_identity(spec: &BlockSpec, limits: &Limits) -> Result<bool> {
    let lhs = theta_block(spec, limits)?;
    let rhs = to_x(&block_monomial(spec)?)?;
    Ok(lhs == rhs)
}

/// `to_y(theta_block(spec))` computed literally. Only practical for small
/// blocks; see [`verify_monomial_identity`].
pub fn theta_block_to_y(spec: &BlockSpec, limits: &Limits) -> Result<Poly> {
    multipoly::to_y(&theta_block(spec, limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::divisors;
    use crate::parse::parse_poly;
    use crate::rational::Rational;

    fn px(s: &str, n: usize) -> Poly {
        parse_poly(s, n, Basis::X).unwrap()
    }

    /// det of C with C[r][c] = x_{(c − r) mod n}, by the Leibniz formula.
    fn leibniz_circulant(n: usize) -> Poly {
        let field = cyclotomic::field(n).unwrap();
        let mut out = SparsePoly::zero(field.clone(), n);
        let mut perm: Vec<usize> = (0..n).collect();
        permutations(&mut perm, 0, &mut |perm| {
            let mut inversions = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            let mut e = vec![0i64; n];
            for (r, &c) in perm.iter().enumerate() {
                e[(c + n - r) % n] += 1;
            }
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            out.add_term(ExpVec::new(e), &field.rational_coords(Rational::from_i64(sign)));
        });
        Poly::from_sparse(Basis::X, out)
    }

    fn permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k == v.len() {
            f(v);
            return;
        }
        for j in k..v.len() {
            v.swap(k, j);
            permutations(v, k + 1, f);
            v.swap(k, j);
        }
    }

    #[test]
    fn circulant_det_examples() {
        assert_eq!(circulant_det(1).unwrap(), px("x0", 1));
        assert_eq!(circulant_det(2).unwrap(), px("x0^2 - x1^2", 2));
        assert_eq!(circulant_det(3).unwrap(), px("x0^3 + x1^3 + x2^3 - 3*x0*x1*x2", 3));
    }

    #[test]
    fn circulant_det_matches_leibniz() {
        for n in 1..=5 {
            assert_eq!(circulant_det(n).unwrap(), leibniz_circulant(n), "n = {n}");
        }
    }

    #[test]
    fn circulant_det_integer_and_homogeneous() {
        for n in 1..=10 {
            let f = circulant_det(n).unwrap();
            assert!(f.has_integer_coeffs() && f.is_homogeneous());
            assert_eq!(f.total_degree(), Some(n as i64));
        }
    }

    #[test]
    fn block_var_examples() {
        let s = BlockSpec::new(4, 2, 0).unwrap();
        assert_eq!(block_vars(&s).unwrap(), vec![px("x0 + x2", 4), px("x1 + x3", 4)]);
        let s = BlockSpec::new(4, 2, 1).unwrap();
        assert_eq!(block_vars(&s).unwrap(), vec![px("x0 - x2", 4), px("zeta*x1 + zeta^3*x3", 4)]);
        let s = BlockSpec::new(5, 5, 0).unwrap();
        let xs: Vec<Poly> = (0..5).map(|j| Poly::var(5, Basis::X, j).unwrap()).collect();
        assert_eq!(block_vars(&s).unwrap(), xs);
        assert_eq!(BlockSpec::new(6, 4, 0), Err(Error::NotADivisor { n: 6, p: 4 }));
        assert!(matches!(BlockSpec::new(6, 2, 3), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn theta_block_examples() {
        let l = Limits::default();
        let t = theta_block(&BlockSpec::new(4, 2, 0).unwrap(), &l).unwrap();
        assert_eq!(t, px("(x0 + x2)^2 - (x1 + x3)^2", 4));
        let t = theta_block(&BlockSpec::new(4, 2, 1).unwrap(), &l).unwrap();
        assert_eq!(t, px("(x0 - x2)^2 + (x1 - x3)^2", 4));
        for p in [2, 3, 5, 7] {
            assert_eq!(theta_block(&BlockSpec::new(p, p, 0).unwrap(), &l).unwrap(), circulant_det(p).unwrap());
        }
    }

    #[test]
    fn theta_block_homogeneous_of_degree_p() {
        let l = Limits::default();
        for n in 2..=10 {
            for p in divisors(n).into_iter().filter(|&p| p >= 2) {
                for s in BlockSpec::all(n, p).unwrap() {
                    let t = theta_block(&s, &l).unwrap();
                    assert!(t.is_homogeneous());
                    assert_eq!(t.total_degree(), Some(p as i64));
                }
            }
        }
    }

    #[test]
    fn factorization_examples() {
        let l = Limits::default();
        for (n, p) in [(4, 2), (6, 3), (6, 2), (6, 6), (8, 2), (9, 3)] {
            for basis in [Basis::X, Basis::Y] {
                let r = verify_factorization(n, p, basis, &l).unwrap();
                assert!(r.holds(), "n={n} p={p} {basis:?}");
                assert_eq!(r.lhs_terms, r.rhs_terms);
            }
        }
        assert!(matches!(verify_factorization(6, 4, Basis::X, &l), Err(Error::NotADivisor { .. })));
        assert_eq!(
            verify_factorization(18, 2, Basis::X, &l).unwrap_err(),
            Error::ExpansionTooLarge { n: 18, limit: 16 }
        );
        assert!(verify_factorization(18, 2, Basis::X, &Limits::uniform(5)).is_err());
    }

    #[test]
    fn y_side_is_a_single_monomial() {
        let l = Limits::default();
        let d = circulant_det_y(6, &l).unwrap();
        assert_eq!(d, parse_poly("y0*y1*y2*y3*y4*y5", 6, Basis::Y).unwrap());
        let t = theta_block_y(&BlockSpec::new(6, 3, 1).unwrap(), &l).unwrap();
        assert_eq!(t, parse_poly("y1*y3*y5", 6, Basis::Y).unwrap());
        assert!(circulant_det_y(31, &l).is_err());
    }

    #[test]
    fn monomial_identity_examples() {
        let l = Limits::default();
        let y = |s: &str, n| parse_poly(s, n, Basis::Y).unwrap();
        assert_eq!(theta_block_to_y(&BlockSpec::new(6, 2, 0).unwrap(), &l).unwrap(), y("y0*y3", 6));
        assert_eq!(theta_block_to_y(&BlockSpec::new(6, 3, 1).unwrap(), &l).unwrap(), y("y1*y3*y5", 6));
        assert_eq!(theta_block_to_y(&BlockSpec::new(2, 2, 0).unwrap(), &l).unwrap(), y("y0*y1", 2));
        for n in 2..=8 {
            for p in divisors(n).into_iter().filter(|&p| p >= 2) {
                for s in BlockSpec::all(n, p).unwrap() {
                    assert!(verify_monomial_identity(&s, &l).unwrap(), "{s:?}");
                    assert_eq!(theta_block_to_y(&s, &l).unwrap(), block_monomial(&s).unwrap(), "{s:?}");
                }
            }
        }
    }
}
