use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid order n = {0}: must be a positive integer")]
    InvalidOrder(usize),
    #[error("order mismatch: Q(zeta_{left}) vs Q(zeta_{right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("division by zero")]
    DivisionByZero,
    #[error("basis mismatch: expected {expected} basis, found {found}")]
    BasisMismatch { expected: &'static str, found: &'static str },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("variable {name} out of range at position {pos} (only {limit} variables)")]
    IndexOutOfRange { name: String, pos: usize, limit: usize },
    #[error("{p} is not a divisor >= 2 of {n}")]
    NotADivisor { n: usize, p: usize },
    #[error("{p} and {q} are not coprime")]
    NotCoprime { p: usize, q: usize },
    #[error("n = {n} has {count} distinct prime factors; at most two are supported")]
    TooManyPrimeFactors { n: usize, count: usize },
    #[error("n = {n} has {count} distinct prime factors; at least three are required")]
    TooFewPrimeFactors { n: usize, count: usize },
    #[error("exponent vector {0} is not in V_n")]
    NotInLattice(String),
    #[error("exponent vector {0} has a negative entry")]
    NegativeEntry(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("polynomial is not invariant: {witness}")]
    NotInvariant { witness: String },
    #[error("expansion too large: n = {n} exceeds the limit {limit}")]
    ExpansionTooLarge { n: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
