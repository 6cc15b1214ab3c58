use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero polynomial is not a valid input here")]
    ZeroPolynomial,

    #[error("polynomial has degree zero")]
    DegreeZero,

    #[error("polynomial is identically zero modulo {p}")]
    IdenticallyZeroModP { p: u64 },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("representative-root lengths are inconsistent: {0}")]
    InconsistentLengths(String),

    #[error("k = {k} is outside the closed-form regime (k must be at least {k0})")]
    RegimeViolation { k: u32, k0: u32 },

    #[error("division by the zero rational function")]
    DivisionByZero,

    #[error("denominator vanishes at t = 0, no power series expansion exists")]
    PoleAtZero,

    #[error("enumeration of {p}^{k} residues exceeds the budget of {budget}")]
    BudgetExceeded { p: u64, k: u32, budget: u64 },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{name}` at position {pos}, only `x` is allowed")]
    Variable { pos: usize, name: String },
}
