use num_bigint::{BigInt, BigUint};
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be a positive integer, got {0}")]
    NonPositive(BigInt),

    #[error("{divisor} is not a divisor of {n}")]
    NotADivisor { divisor: BigUint, n: BigUint },

    #[error("divisor count {actual} exceeds the oracle cap of {cap}")]
    CapExceeded { cap: u64, actual: BigUint },

    #[error("vertex index {index} out of range for a graph with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },

    #[error("invalid range [{lo}, {hi}]: need 1 <= lo <= hi")]
    InvalidRange { lo: u64, hi: u64 },
}
