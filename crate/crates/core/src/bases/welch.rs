use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::vector::{inner_unchecked, FieldTag, Tolerance, UnitVector};
use super::BasesError;

/// `W_F(d, n; t)`, a lower bound on `γ^{2t}`, kept exactly and as a float.
#[derive(Clone, Debug, PartialEq)]
pub struct WelchBound {
    pub exact: BigRational,
    pub value: f64,
}

fn int(n: u64) -> BigInt {
    BigInt::from(n)
}

fn ratio(num: BigInt, den: BigInt) -> BigRational {
    BigRational::new(num, den)
}

fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Right-hand side of the Welch inequality for a set of unit vectors:
/// `1/C(d+t-1, t)` over `C`, `(2t-1)!!/(d(d+2)⋯(d+2t-2))` over `R`.
pub fn design_bound(d: u64, t: u32, tag: FieldTag) -> BigRational {
    match tag {
        FieldTag::C => {
            // C(d+t-1, t) = Π_{k=1..t} (d+k-1)/k
            let mut binom = BigRational::one();
            for k in 1..=t as u64 {
                binom *= ratio(int(d + k - 1), int(k));
            }
            binom.recip()
        }
        FieldTag::R => {
            let mut num = BigInt::one();
            let mut den = BigInt::one();
            for k in 0..t as u64 {
                num *= int(2 * k + 1);
                den *= int(d + 2 * k);
            }
            ratio(num, den)
        }
    }
}

pub fn welch_bound(d: u64, n: u64, t: u32, tag: FieldTag) -> Result<WelchBound, BasesError> {
    if d < 2 || n < 2 || t < 1 {
        return Err(BasesError::BadParameters(format!(
            "Welch bound needs d >= 2, n >= 2, t >= 1 (got d={d}, n={n}, t={t})"
        )));
    }
    let exact = ratio(int(n), int(n - 1)) * design_bound(d, t, tag) - ratio(BigInt::one(), int(d * (n - 1)));
    let value = to_f64(&exact);
    Ok(WelchBound { exact, value })
}

/// Both sides of the Welch inequality for a finite vector set.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WelchSum {
    /// `(1/N²)·Σ_{u,v} |(u,v)|^{2t}` over ordered pairs.
    pub lhs: f64,
    pub rhs: f64,
    /// Equality within tolerance, i.e. a spherical `t`-design.
    pub design: bool,
}

pub fn welch_collection_sum(vectors: &[UnitVector], t: u32, tol: Tolerance) -> Result<WelchSum, BasesError> {
    let Some(first) = vectors.first() else {
        return Err(BasesError::TooFewVectors { count: 0, dim: 0 });
    };
    let (tag, d) = (first.tag(), first.dim());
    for v in vectors {
        if v.tag() != tag {
            return Err(BasesError::FieldMismatch);
        }
        if v.dim() != d {
            return Err(BasesError::DimensionMismatch { left: d, right: v.dim() });
        }
    }
    if vectors.len() <= d {
        return Err(BasesError::TooFewVectors { count: vectors.len(), dim: d });
    }
    if t < 1 {
        return Err(BasesError::BadParameters("t must be at least 1".into()));
    }
    let n = vectors.len();
    let mut total = 0.0;
    for (i, u) in vectors.iter().enumerate() {
        total += norm_pow(inner_unchecked(u.components(), u.components()).norm(), t);
        for v in &vectors[i + 1..] {
            total += 2.0 * norm_pow(inner_unchecked(u.components(), v.components()).norm(), t);
        }
    }
    let lhs = total / (n * n) as f64;
    let rhs = to_f64(&design_bound(d as u64, t, tag));
    Ok(WelchSum { lhs, rhs, design: (lhs - rhs).abs() <= tol.at(d) })
}

/// `x^{2t}`.
pub(crate) fn norm_pow(x: f64, t: u32) -> f64 {
    (x * x).powi(t as i32)
}
