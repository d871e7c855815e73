//! Constructions of mutually unbiased bases (MUB) and approximate MUBs over
//! `C^d` and `R^d`, the complex-to-real doubling map, and numerical
//! certificates comparing measured coherence against Welch-type bounds.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: finite fields, additive/multiplicative characters, Gauss and
//!   Jacobi sums, the Galois ring `GR(4, m)`.
//! - [`combinatorics`]: Latin squares, MOLS, Hadamard matrices.
//! - [`elliptic`]: `E(F_p)` group structure, its characters, and the
//!   function space `Σ_m` with its character sums.
//! - [`bases`]: vectors, bases, collections, γ, Welch bounds, realification,
//!   tensor products and closed-form bound calculators.
//! - [`constructions`]: builders for every family, keyed by [`ConstructionSpec`].
//! - [`io`]: the `amub-bundle/1` file format and the text/JSON reports.

pub mod algebra;
pub mod bases;
pub mod combinatorics;
pub mod constructions;
pub mod elliptic;
pub mod io;

pub use bases::{
    gamma, inner, realify_collection, realify_vector, tensor_collections, welch_bound,
    welch_collection_sum, BasisCollection, FieldTag, GammaReport, OrthonormalBasis, Tolerance,
    UnitVector, Verdict,
};
pub use constructions::ConstructionSpec;

use thiserror::Error;

/// Crate-level error for operations spanning several modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] algebra::AlgebraError),
    #[error(transparent)]
    Combinatorics(#[from] combinatorics::CombinatoricsError),
    #[error(transparent)]
    Elliptic(#[from] elliptic::EllipticError),
    #[error(transparent)]
    Bases(#[from] bases::BasesError),
    #[error(transparent)]
    Construction(#[from] constructions::ConstructionError),
    #[error(transparent)]
    Io(#[from] io::IoError),
}
