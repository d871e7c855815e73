use crate::constructions::ConstructionSpec;

use super::vector::{inner_unchecked, Components, FieldTag, Tolerance, UnitVector};
use super::BasesError;

/// `d` unit vectors in `F^d` with `(a_i, a_j) = δ_ij`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrthonormalBasis {
    tag: FieldTag,
    dim: usize,
    vectors: Vec<UnitVector>,
}

impl OrthonormalBasis {
    pub fn new(vectors: Vec<UnitVector>, tol: Tolerance) -> Result<Self, BasesError> {
        let first = vectors
            .first()
            .ok_or_else(|| BasesError::BadParameters("a basis needs at least one vector".into()))?;
        let (tag, dim) = (first.tag(), first.dim());
        for v in &vectors {
            if v.tag() != tag {
                return Err(BasesError::FieldMismatch);
            }
            if v.dim() != dim {
                return Err(BasesError::DimensionMismatch { left: dim, right: v.dim() });
            }
        }
        if vectors.len() != dim {
            return Err(BasesError::DimensionMismatch { left: dim, right: vectors.len() });
        }
        let tau = tol.at(dim);
        for (i, a) in vectors.iter().enumerate() {
            for (j, b) in vectors.iter().enumerate().skip(i) {
                let ip = inner_unchecked(a.components(), b.components());
                let target = if i == j { 1.0 } else { 0.0 };
                if (ip - target).norm() > tau {
                    return Err(BasesError::NotOrthonormal { i, j, value: ip.norm() });
                }
            }
        }
        Ok(OrthonormalBasis { tag, dim, vectors })
    }

    /// `B* = {e_1, …, e_d}`.
    pub fn standard(tag: FieldTag, d: usize) -> Self {
        assert!(d >= 1, "dimension must be positive");
        let vectors = (0..d).map(|i| UnitVector::basis_vector(tag, d, i)).collect();
        OrthonormalBasis { tag, dim: d, vectors }
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[UnitVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &UnitVector {
        &self.vectors[i]
    }

    pub(crate) fn components(&self, i: usize) -> &Components {
        self.vectors[i].components()
    }
}

/// `n ≥ 1` orthonormal bases sharing field and dimension, with the
/// construction that produced them when known.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisCollection {
    tag: FieldTag,
    dim: usize,
    bases: Vec<OrthonormalBasis>,
    provenance: Option<ConstructionSpec>,
}

impl BasisCollection {
    pub fn new(bases: Vec<OrthonormalBasis>, provenance: Option<ConstructionSpec>) -> Result<Self, BasesError> {
        let first = bases
            .first()
            .ok_or_else(|| BasesError::BadParameters("a collection needs at least one basis".into()))?;
        let (tag, dim) = (first.tag, first.dim);
        for b in &bases {
            if b.tag != tag {
                return Err(BasesError::FieldMismatch);
            }
            if b.dim != dim {
                return Err(BasesError::DimensionMismatch { left: dim, right: b.dim });
            }
        }
        Ok(BasisCollection { tag, dim, bases, provenance })
    }

    pub fn tag(&self) -> FieldTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of bases.
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn bases(&self) -> &[OrthonormalBasis] {
        &self.bases
    }

    pub fn basis(&self, i: usize) -> &OrthonormalBasis {
        &self.bases[i]
    }

    pub fn provenance(&self) -> Option<&ConstructionSpec> {
        self.provenance.as_ref()
    }

    pub fn with_provenance(mut self, spec: Option<ConstructionSpec>) -> Self {
        self.provenance = spec;
        self
    }

    /// All `n·d` vectors, basis by basis.
    pub fn vectors(&self) -> impl Iterator<Item = &UnitVector> {
        self.bases.iter().flat_map(|b| b.vectors.iter())
    }
}
