//! Complex-to-real doubling and tensor products of collections.

use num_complex::Complex64;

use crate::constructions::ConstructionSpec;

use super::collection::{BasisCollection, OrthonormalBasis};
use super::vector::{Components, FieldTag, Tolerance, UnitVector};
use super::BasesError;

/// Maps `v ∈ C^d` to `v⁽¹⁾ = (Re v_1, Im v_1, …)` and
/// `v⁽²⁾ = (-Im v_1, Re v_1, …)` in `R^{2d}`.
pub fn realify_vector(v: &UnitVector) -> Result<(UnitVector, UnitVector), BasesError> {
    let Components::Complex(c) = v.components() else {
        return Err(BasesError::AlreadyReal);
    };
    let first = c.iter().flat_map(|z| [z.re, z.im]).collect();
    let second = c.iter().flat_map(|z| [-z.im, z.re]).collect();
    // (v,v) = (v⁽¹⁾,v⁽¹⁾) = (v⁽²⁾,v⁽²⁾), so the unit check cannot fail beyond
    // the input's own rounding.
    let tol = Tolerance::Absolute(f64::INFINITY);
    Ok((
        UnitVector::new(Components::Real(first), tol)?,
        UnitVector::new(Components::Real(second), tol)?,
    ))
}

/// Realifies each basis; basis `B` becomes `{a_1⁽¹⁾, a_1⁽²⁾, a_2⁽¹⁾, …}`.
pub fn realify_collection(coll: &BasisCollection) -> Result<BasisCollection, BasesError> {
    realify_collection_with(coll, Tolerance::default())
}

pub fn realify_collection_with(coll: &BasisCollection, tol: Tolerance) -> Result<BasisCollection, BasesError> {
    if coll.tag() != FieldTag::C {
        return Err(BasesError::AlreadyReal);
    }
    let bases = coll
        .bases()
        .iter()
        .map(|b| {
            let mut out = Vec::with_capacity(2 * b.dim());
            for v in b.vectors() {
                let (v1, v2) = realify_vector(v)?;
                out.push(v1);
                out.push(v2);
            }
            OrthonormalBasis::new(out, tol)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let provenance = coll.provenance().map(|s| ConstructionSpec::Realify { inner: Box::new(s.clone()) });
    BasisCollection::new(bases, provenance)
}

fn kron(a: &Components, b: &Components) -> Components {
    match (a, b) {
        (Components::Complex(x), Components::Complex(y)) => {
            Components::Complex(x.iter().flat_map(|&p| y.iter().map(move |&q| p * q)).collect::<Vec<Complex64>>())
        }
        (Components::Real(x), Components::Real(y)) => {
            Components::Real(x.iter().flat_map(|&p| y.iter().map(move |&q| p * q)).collect())
        }
        _ => unreachable!("field tags checked by caller"),
    }
}

/// Basis `k` of the result is `{x ⊗ y : x ∈ left[k], y ∈ right[k]}` with
/// `x ⊗ y` at index `i·d_2 + j`, for `k < min(n_1, n_2)`.
pub fn tensor_collections(left: &BasisCollection, right: &BasisCollection) -> Result<BasisCollection, BasesError> {
    if left.tag() != right.tag() {
        return Err(BasesError::FieldMismatch);
    }
    let n = left.len().min(right.len());
    let tol = Tolerance::default();
    let bases = (0..n)
        .map(|k| {
            let vectors = left
                .basis(k)
                .vectors()
                .iter()
                .flat_map(|x| {
                    right
                        .basis(k)
                        .vectors()
                        .iter()
                        .map(move |y| UnitVector::new(kron(x.components(), y.components()), tol))
                })
                .collect::<Result<Vec<_>, _>>()?;
            OrthonormalBasis::new(vectors, tol)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let provenance = match (left.provenance(), right.provenance()) {
        (Some(l), Some(r)) => Some(ConstructionSpec::Tensor { left: Box::new(l.clone()), right: Box::new(r.clone()) }),
        _ => None,
    };
    BasisCollection::new(bases, provenance)
}
