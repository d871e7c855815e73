//! Latin squares, mutually orthogonal families, and Hadamard matrices.

mod hadamard;
mod latin;

pub use hadamard::{
    hadamard_paley, hadamard_sylvester, is_hadamard, real_mub_hadamard_criterion, HadamardMatrix,
    MAX_PALEY_PRIME, MAX_SYLVESTER_EXPONENT,
};
pub use latin::{
    is_mutually_orthogonal, mols_check, mols_for_order, mols_lower_bound, mols_macneish, mols_prime_power,
    LatinSquare, MAX_MOLS_ORDER,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CombinatoricsError {
    #[error("squares have different orders")]
    OrderMismatch,
    #[error("grid is not a Latin square over 1..=d")]
    NotLatin,
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("empty family")]
    EmptyFamily,
    #[error("input family is not mutually orthogonal")]
    NotMutuallyOrthogonal,
    #[error("matrix is not Hadamard (needs ±1 entries and H·Hᵀ = d·I)")]
    NotHadamard,
    #[error("Paley construction needs a prime q ≡ 3 (mod 4) with q <= {max}, got {0}", max = MAX_PALEY_PRIME)]
    BadOrder(u64),
    #[error("{value} exceeds the supported maximum {max}")]
    TooLarge { value: u64, max: u64 },
}
