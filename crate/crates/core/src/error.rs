use num_bigint::{BigInt, BigUint};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} lies outside [0, 1)")]
    OutOfUnitInterval { value: String },
    #[error("{value} lies outside (0, 1)")]
    OutOfOpenUnitInterval { value: String },
    #[error("partial quotient a_{index} = {value} is negative")]
    NegativeTerm { index: usize, value: BigInt },
    #[error("partial quotient a_{index} = {value} is not positive in a simple continued fraction")]
    NonSimpleTerm { index: usize, value: BigInt },
    #[error("expected a_0 = 0, found {0}")]
    NonzeroLeadingTerm(BigInt),
    #[error("expected an even number of terms after a_0, found {0}")]
    OddLength(usize),
    #[error("the zero sequence has no simple continued fraction of this form")]
    ZeroSequence,
    #[error("degenerate index (0, 0)")]
    DegenerateIndex,
    #[error("n must be at least 1")]
    ZeroOrder,
    #[error("gcd(m,n) must be 1 (n = {n}, m = {m})")]
    NotCoprime { n: BigUint, m: BigUint },
    #[error("m must satisfy 0 < m < n, or (n, m) = (1, 0) (n = {n}, m = {m})")]
    InvariantOutOfRange { n: BigUint, m: BigUint },
    #[error("enumeration would produce {predicted} items, above the cap of {cap}")]
    CapExceeded { predicted: BigUint, cap: u64 },
    #[error("no factorization: {t} does not divide both m = {m} and n = {n}")]
    NoFactorization { n: BigUint, m: BigUint, t: BigUint },
    #[error("tensor factorization needs index (-1, 1)")]
    IndexNotMainCase,
    #[error("depth {depth} exceeds the {available} available terms")]
    DepthExceedsTerms { depth: usize, available: usize },
    #[error("sequence length {0} is too large to expand densely")]
    TooLong(BigUint),
}

pub type Result<T> = std::result::Result<T, Error>;
