//! Builders for every family, plus [`ConstructionSpec`], the serializable
//! recipe recorded in bundles so a collection can be regenerated exactly.

mod builders;

pub use builders::{
    amub_elliptic, amub_gauss, amub_jacobi, mub_prime_power, real_amub_from_complex, real_pair_from_hadamard,
    standard_basis, MAX_EC_BASES, MAX_MUB_ORDER,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::AlgebraError;
use crate::bases::{BasesError, BasisCollection, FieldTag};
use crate::combinatorics::{hadamard_paley, hadamard_sylvester, CombinatoricsError, HadamardMatrix};
use crate::elliptic::EllipticError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConstructionError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{what} = {value} exceeds the supported maximum {max}")]
    TooLarge { what: &'static str, value: u64, max: u64 },
    #[error("{what} = {value} is below the minimum {min}")]
    TooSmall { what: &'static str, value: u64, min: u64 },
    #[error("realification needs a complex construction")]
    NotComplex,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Combinatorics(#[from] CombinatoricsError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
    #[error(transparent)]
    Bases(#[from] BasesError),
}

/// Source of the Hadamard matrix in a `hadamard-pair` construction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum HadamardSource {
    Sylvester { k: u32 },
    Paley { q: u64 },
}

impl HadamardSource {
    pub fn matrix(&self) -> Result<HadamardMatrix, CombinatoricsError> {
        match *self {
            HadamardSource::Sylvester { k } => hadamard_sylvester(k),
            HadamardSource::Paley { q } => hadamard_paley(q),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "id", content = "params", rename_all = "kebab-case")]
pub enum ConstructionSpec {
    Standard { d: usize, field: FieldTag },
    MubPp { q: u64 },
    AmubGauss { q: u64 },
    AmubJacobi { q: u64 },
    AmubEc { p: u64, a: u64, b: u64, m: u64 },
    Realify { inner: Box<ConstructionSpec> },
    HadamardPair { source: HadamardSource },
    Tensor { left: Box<ConstructionSpec>, right: Box<ConstructionSpec> },
}

impl ConstructionSpec {
    /// The stable identifier written to bundles.
    pub fn id(&self) -> &'static str {
        match self {
            ConstructionSpec::Standard { .. } => "standard",
            ConstructionSpec::MubPp { .. } => "mub-pp",
            ConstructionSpec::AmubGauss { .. } => "amub-gauss",
            ConstructionSpec::AmubJacobi { .. } => "amub-jacobi",
            ConstructionSpec::AmubEc { .. } => "amub-ec",
            ConstructionSpec::Realify { .. } => "realify",
            ConstructionSpec::HadamardPair { .. } => "hadamard-pair",
            ConstructionSpec::Tensor { .. } => "tensor",
        }
    }

    pub fn build(&self) -> Result<BasisCollection, ConstructionError> {
        match self {
            ConstructionSpec::Standard { d, field } => {
                if *d == 0 {
                    return Err(ConstructionError::TooSmall { what: "d", value: 0, min: 1 });
                }
                Ok(BasisCollection::new(vec![standard_basis(*d, *field)], Some(self.clone()))?)
            }
            ConstructionSpec::MubPp { q } => mub_prime_power(*q),
            ConstructionSpec::AmubGauss { q } => amub_gauss(*q),
            ConstructionSpec::AmubJacobi { q } => amub_jacobi(*q),
            ConstructionSpec::AmubEc { p, a, b, m } => amub_elliptic(*p, *a as i64, *b as i64, *m),
            ConstructionSpec::Realify { inner } => real_amub_from_complex(inner),
            ConstructionSpec::HadamardPair { source } => {
                let coll = real_pair_from_hadamard(&source.matrix()?)?;
                Ok(coll.with_provenance(Some(self.clone())))
            }
            ConstructionSpec::Tensor { left, right } => {
                Ok(crate::bases::tensor_collections(&left.build()?, &right.build()?)?)
            }
        }
    }
}
