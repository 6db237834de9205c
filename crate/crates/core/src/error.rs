use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    IncompatibleFields,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("field of order {p}^{k} is too large for table-driven arithmetic")]
    FieldTooLarge { p: u32, k: usize },
    #[error("no built-in modulus for GF({p}^{k})")]
    NoBuiltinModulus { p: u32, k: usize },
    #[error("GF({p}^{from}) does not embed into GF({p}^{to})")]
    NoEmbedding { p: u32, from: usize, to: usize },
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("binomial C({a}, {b}) requested with b > a")]
    BinomialOutOfRange { a: u64, b: u64 },
    #[error("path index {index} out of range for truncation bound {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("truncation bounds differ: {0} vs {1}")]
    BoundMismatch(usize, usize),
    #[error("coalgebra endomorphism is not invertible (lambda_1 = 0)")]
    NotInvertible,
    #[error("invalid table: {0}")]
    InvalidTable(String),
    #[error("{0} is not a power of {1}")]
    NotPowerOfP(usize, u32),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("constructed table failed verification:\n{0}")]
    VerificationFailed(String),
    #[error("integer overflow while expanding Witt polynomials")]
    Overflow,
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("table file: {0}")]
    Format(String),
}
