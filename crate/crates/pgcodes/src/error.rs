use alloc::string::String;
use thiserror::Error;

/// Errors raised by the algebraic, geometric and construction layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("inverse of zero in GF({q})")]
    ZeroInverse { q: u32 },
    #[error("operands live in different fields: GF({left}) and GF({right})")]
    FieldMismatch { left: u32, right: u32 },
    #[error("no modulus table entry for GF({p}^{m})")]
    UnsupportedField { p: u32, m: u32 },
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("GF({small}) is not a subfield of GF({big})")]
    NotSubfield { small: u32, big: u32 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error("enumeration budget exceeded: {needed} items requested, budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("bilinear form is degenerate")]
    DegenerateForm,
    #[error("subspace is not a generator of the quadric")]
    NotGenerator,
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cardinality mismatch for {what}: expected {expected}, found {found}")]
    Cardinality {
        what: String,
        expected: String,
        found: String,
    },
    #[error("no valid seed found: {0}")]
    NoSeed(String),
}

pub type Result<T> = core::result::Result<T, Error>;
