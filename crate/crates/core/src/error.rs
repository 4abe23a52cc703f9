use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("attempted to invert zero")]
    ZeroInverse,

    #[error("block length {n} is not coprime to the characteristic {p}")]
    NotCoprime { n: usize, p: u32 },

    #[error("m = {m} is not a square root of 1 modulo {n}")]
    NotInvolution { m: i64, n: usize },

    #[error("triplet (n={n}, p={p}, m={m}) is not good: no t with n | p^t + m")]
    NotGood { n: usize, p: u32, m: i64 },

    #[error("triplet (n={n}, p={p}, m={m}) needs odd t={t}; the isotropic ideals are all trivial")]
    OddExponent { n: usize, p: u32, m: i64, t: u32 },

    #[error("order of {p} modulo {n} is {order} (odd): no nontrivial sigma_m-isotropic ideals")]
    OddOrder { n: usize, p: u32, order: u32 },

    #[error("polynomial division is not exact")]
    InexactDivision,

    #[error("moduli are not pairwise coprime")]
    NonCoprimeModuli,

    #[error("coefficient does not lie in the expected subfield")]
    NotInSubfield,

    #[error("no factor with index {0}")]
    UnknownFactor(usize),

    #[error("factor {0} has no Frobenius-conjugate partner")]
    UnpairedFactor(usize),

    #[error("invalid h selection: {0}")]
    InvalidSelection(String),

    #[error("construction invariant violated: {0}")]
    Invariant(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("enumeration needs {required} elements, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}
