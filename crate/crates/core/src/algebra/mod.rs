//! Finite fields, their characters, and the Galois ring `GR(4, m)`.

pub mod arith;
mod characters;
mod field;
mod galois_ring;
mod unity;

pub use characters::{jacobi_sum, AdditiveCharacter, MultiplicativeCharacter};
pub use field::{Field, FqElement, MAX_FIELD_ORDER};
pub use galois_ring::{GaloisRing, GrElement, MAX_GALOIS_RING_DEGREE};
pub use unity::root_of_unity;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} {value} exceeds the supported maximum {max}")]
    TooLarge { what: &'static str, value: u64, max: u64 },
    #[error("multiplicative character evaluated at zero")]
    ZeroArgument,
    #[error("Gauss sum requires nontrivial characters")]
    TrivialCharacter,
}

/// Builds `F_q` from a prime power `q`.
pub fn field_for_order(q: u64) -> Result<Field, AlgebraError> {
    let (p, m) = arith::prime_power(q).ok_or(AlgebraError::NotPrimePower(q))?;
    Field::new(p, m)
}
