use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::BasesError;

/// Scalar field of the ambient space.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldTag {
    C,
    R,
}

impl fmt::Display for FieldTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FieldTag::C => "C",
            FieldTag::R => "R",
        })
    }
}

/// Numerical tolerance for unit, orthonormality and equality checks.
///
/// The default scales with dimension as `1e-9·max(1, √d)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub enum Tolerance {
    #[default]
    Scaled,
    Absolute(f64),
}

impl Tolerance {
    pub const BASE: f64 = 1e-9;

    pub fn at(&self, d: usize) -> f64 {
        match *self {
            Tolerance::Scaled => Self::BASE * (d as f64).sqrt().max(1.0),
            Tolerance::Absolute(t) => t,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Components {
    Complex(Vec<Complex64>),
    Real(Vec<f64>),
}

impl Components {
    pub fn len(&self) -> usize {
        match self {
            Components::Complex(c) => c.len(),
            Components::Real(r) => r.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn tag(&self) -> FieldTag {
        match self {
            Components::Complex(_) => FieldTag::C,
            Components::Real(_) => FieldTag::R,
        }
    }

    /// Component `i` as a complex number.
    pub fn get(&self, i: usize) -> Complex64 {
        match self {
            Components::Complex(c) => c[i],
            Components::Real(r) => Complex64::new(r[i], 0.0),
        }
    }

    fn norm_sqr(&self) -> f64 {
        match self {
            Components::Complex(c) => c.iter().map(|z| z.norm_sqr()).sum(),
            Components::Real(r) => r.iter().map(|x| x * x).sum(),
        }
    }
}

/// A vector of norm one in `C^d` or `R^d`.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitVector {
    comps: Components,
}

impl UnitVector {
    pub fn new(comps: Components, tol: Tolerance) -> Result<Self, BasesError> {
        let d = comps.len();
        if d == 0 {
            return Err(BasesError::BadParameters("vectors need at least one component".into()));
        }
        let norm = comps.norm_sqr().sqrt();
        if (norm - 1.0).abs() > tol.at(d) {
            return Err(BasesError::NotUnit { norm });
        }
        Ok(UnitVector { comps })
    }

    pub fn complex(comps: Vec<Complex64>, tol: Tolerance) -> Result<Self, BasesError> {
        Self::new(Components::Complex(comps), tol)
    }

    pub fn real(comps: Vec<f64>, tol: Tolerance) -> Result<Self, BasesError> {
        Self::new(Components::Real(comps), tol)
    }

    /// `e_i` in dimension `d`.
    pub fn basis_vector(tag: FieldTag, d: usize, i: usize) -> Self {
        let comps = match tag {
            FieldTag::C => {
                let mut v = vec![Complex64::new(0.0, 0.0); d];
                v[i] = Complex64::new(1.0, 0.0);
                Components::Complex(v)
            }
            FieldTag::R => {
                let mut v = vec![0.0; d];
                v[i] = 1.0;
                Components::Real(v)
            }
        };
        UnitVector { comps }
    }

    pub fn tag(&self) -> FieldTag {
        self.comps.tag()
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &Components {
        &self.comps
    }

    pub fn into_components(self) -> Components {
        self.comps
    }
}

/// `(u, v) = Σ u_i·conj(v_i)`; the imaginary part is zero for real vectors.
pub fn inner(u: &UnitVector, v: &UnitVector) -> Result<Complex64, BasesError> {
    if u.tag() != v.tag() {
        return Err(BasesError::FieldMismatch);
    }
    if u.dim() != v.dim() {
        return Err(BasesError::DimensionMismatch { left: u.dim(), right: v.dim() });
    }
    Ok(inner_unchecked(&u.comps, &v.comps))
}

pub(crate) fn inner_unchecked(u: &Components, v: &Components) -> Complex64 {
    match (u, v) {
        (Components::Complex(a), Components::Complex(b)) => {
            a.iter().zip(b).map(|(x, y)| x * y.conj()).sum()
        }
        (Components::Real(a), Components::Real(b)) => {
            Complex64::new(a.iter().zip(b).map(|(x, y)| x * y).sum(), 0.0)
        }
        _ => unreachable!("field tags checked by caller"),
    }
}
