//! Unit vectors, orthonormal bases and collections, the coherence `γ`,
//! Welch bounds, realification and tensor products.

mod bounds;
mod collection;
mod gamma;
mod transform;
mod vector;
mod welch;

pub use bounds::{complex_mub_lower_bound, delta_bound, real_mub_upper_bound, CapRule, RealMubCap};
pub use collection::{BasisCollection, OrthonormalBasis};
pub use gamma::{gamma, gamma_with, witness_value, DesignFlags, GammaReport, Verdict, WelchEntry, Witness};
pub use transform::{realify_collection, realify_collection_with, realify_vector, tensor_collections};
pub use vector::{inner, Components, FieldTag, Tolerance, UnitVector};
pub use welch::{design_bound, welch_bound, welch_collection_sum, WelchBound, WelchSum};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum BasesError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cannot mix real and complex vectors")]
    FieldMismatch,
    #[error("vector has norm {norm}, expected 1")]
    NotUnit { norm: f64 },
    #[error("vectors {i} and {j} violate orthonormality (|inner| = {value})")]
    NotOrthonormal { i: usize, j: usize, value: f64 },
    #[error("γ needs at least two bases")]
    SingleBasis,
    #[error("Welch sum needs more than d = {dim} vectors, got {count}")]
    TooFewVectors { count: usize, dim: usize },
    #[error("{0}")]
    BadParameters(String),
    #[error("collection is already real")]
    AlreadyReal,
    #[error("{0}")]
    BadRange(String),
}
