//! Exact computations in the invariant ring of the Frobenius operators on
//! circulant determinants.
//!
//! Everything here is exact: coefficients live in the cyclotomic field
//! Q(ζₙ) with rational coordinates, so identities are checked by comparing
//! term maps rather than by evaluating at sample points.

pub mod circulant;
pub mod cyclotomic;
pub mod error;
pub mod ideal;
pub mod invariant;
pub mod lattice;
pub mod linalg;
pub mod multipoly;
pub mod parse;
pub mod rational;
pub mod verify;

pub use cyclotomic::{cyc_arith, cyclotomic_poly, zeta_power, CycElement, CycOp};
pub use error::{Error, Result};
pub use multipoly::{
    apply_operator, poly_arith, to_x, to_y, Basis, ExpVec, Operand, Operator, Poly, PolyOp, SparsePoly,
};
pub use parse::{parse_poly, print_poly};
pub use rational::Rational;
