//! Elliptic curves `y^2 = x^3 + ax + b` over prime fields, their point
//! groups and characters, and the function spaces `Σ_m`.

mod curve;
mod functions;
mod group;

pub use curve::{Curve, CurvePoint, MAX_CURVE_PRIME};
pub use functions::{curve_char_sum, function_eval, sigma_m, CurveFunction, MAX_SIGMA_SIZE};
pub use group::{CurveCharacter, CurveGroup};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EllipticError {
    #[error("curve needs a prime 5 <= p <= {max}, got {0}", max = MAX_CURVE_PRIME)]
    BadPrime(u64),
    #[error("y^2 = x^3 + {a}x + {b} is singular over F_{p}")]
    SingularCurve { p: u64, a: u64, b: u64 },
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("degree bound m = {m} outside 2..=d-1 (d = {d})")]
    BadDegreeRange { m: u64, d: u64 },
    #[error("character sum |S| = {modulus} exceeds 2·Deg(f)·√p = {bound}")]
    BoundViolated { modulus: f64, bound: f64 },
    #[error("sum over a constant function and the trivial character")]
    TrivialSum,
    #[error("{what} exceeds {max}")]
    TooLarge { what: &'static str, max: u64 },
}
