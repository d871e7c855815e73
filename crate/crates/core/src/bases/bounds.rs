//! Closed-form bounds on the number of (real) MUBs.

use serde::{Deserialize, Serialize};

use crate::algebra::arith::{factorize, gcd, is_square, isqrt};

use super::BasesError;

/// Which rule produced a real-MUB cap.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CapRule {
    DimensionTwo,
    NotDivisibleByFour,
    FourTimesNonSquare,
    FourTimesOddSquare,
    HalfPlusOne,
}

impl std::fmt::Display for CapRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            CapRule::DimensionTwo => "d = 2",
            CapRule::NotDivisibleByFour => "4 does not divide d",
            CapRule::FourTimesNonSquare => "d = 4m with m not a square",
            CapRule::FourTimesOddSquare => "d = 4m^2 with m odd",
            CapRule::HalfPlusOne => "d/2 + 1",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealMubCap {
    pub cap: u64,
    pub rule: CapRule,
}

/// Upper bound on the number of real MUBs in `R^d`.
///
/// # Panics
/// If `d < 2`.
pub fn real_mub_upper_bound(d: u64) -> RealMubCap {
    assert!(d >= 2, "real MUB bound needs d >= 2");
    let (cap, rule) = if d == 2 {
        (2, CapRule::DimensionTwo)
    } else if d % 4 != 0 {
        (1, CapRule::NotDivisibleByFour)
    } else if !is_square(d / 4) {
        (2, CapRule::FourTimesNonSquare)
    } else if isqrt(d / 4) % 2 == 1 {
        (3, CapRule::FourTimesOddSquare)
    } else {
        (d / 2 + 1, CapRule::HalfPlusOne)
    };
    RealMubCap { cap, rule }
}

/// `Δ(m, n) = max_{1 ≤ l ≤ n-2} gcd(4m, l)`.
pub fn delta_bound(m: u64, n: u64) -> Result<u64, BasesError> {
    if m < 1 || n < 3 {
        return Err(BasesError::BadRange(format!("Δ(m, n) needs m >= 1 and n >= 3, got m={m}, n={n}")));
    }
    Ok((1..=n - 2).map(|l| gcd(4 * m, l)).max().expect("n >= 3"))
}

/// `min_i (p_i^{e_i} + 1)` over the prime-power factors of `d`: the number of
/// complex MUBs reachable by tensoring prime-power families.
pub fn complex_mub_lower_bound(d: u64) -> u64 {
    assert!(d >= 2, "complex MUB bound needs d >= 2");
    factorize(d).into_iter().map(|(p, e)| p.pow(e) + 1).min().expect("d >= 2")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps() {
        let cap = |d| real_mub_upper_bound(d).cap;
        assert_eq!(cap(2), 2);
        assert_eq!(cap(6), 1);
        assert_eq!(cap(12), 2);
        assert_eq!(cap(36), 3);
        assert_eq!(cap(16), 9);
        assert_eq!(cap(4), 3);
        assert_eq!(cap(3), 1);
        assert_eq!(real_mub_upper_bound(64).rule, CapRule::HalfPlusOne);
        assert_eq!(real_mub_upper_bound(100).rule, CapRule::FourTimesOddSquare);
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_bound(5, 6).unwrap(), 4);
        assert_eq!(delta_bound(1, 3).unwrap(), 1);
        assert_eq!(delta_bound(3, 8).unwrap(), 6);
        assert!(delta_bound(0, 5).is_err());
        assert!(delta_bound(2, 2).is_err());
    }

    #[test]
    fn complex_lower_bound() {
        assert_eq!(complex_mub_lower_bound(6), 3);
        assert_eq!(complex_mub_lower_bound(9), 10);
        assert_eq!(complex_mub_lower_bound(12), 4);
    }
}
