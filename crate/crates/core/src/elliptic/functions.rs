use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::algebra::root_of_unity;

use super::curve::{Curve, CurvePoint};
use super::group::{CurveCharacter, CurveGroup};
use super::EllipticError;

/// Upper limit on `|Σ_m| = p^{m-1}` for enumeration.
pub const MAX_SIGMA_SIZE: u64 = 1 << 22;

/// `f = u(x) + v(x)·y` on the curve. Coefficients are stored low degree
/// first, reduced mod `p`, with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveFunction {
    u: Vec<u64>,
    v: Vec<u64>,
}

fn trimmed(mut c: Vec<u64>) -> Vec<u64> {
    while c.last() == Some(&0) {
        c.pop();
    }
    c
}

fn horner(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

impl CurveFunction {
    pub fn new(u: Vec<u64>, v: Vec<u64>, p: u64) -> Self {
        CurveFunction {
            u: trimmed(u.into_iter().map(|c| c % p).collect()),
            v: trimmed(v.into_iter().map(|c| c % p).collect()),
        }
    }

    pub fn zero() -> Self {
        CurveFunction { u: Vec::new(), v: Vec::new() }
    }

    pub fn u(&self) -> &[u64] {
        &self.u
    }

    pub fn v(&self) -> &[u64] {
        &self.v
    }

    /// `max{2·deg u, 3 + 2·deg v}` over the nonzero parts; `0` for `f = 0`.
    pub fn deg(&self) -> u64 {
        let du = (self.u.len() as u64).checked_sub(1).map_or(0, |d| 2 * d);
        let dv = (self.v.len() as u64).checked_sub(1).map_or(0, |d| 3 + 2 * d);
        du.max(dv)
    }

    pub fn is_constant(&self) -> bool {
        self.v.is_empty() && self.u.len() <= 1
    }

    pub fn in_sigma(&self, m: u64) -> bool {
        self.u.first().copied().unwrap_or(0) == 0 && self.deg() <= m
    }

    /// `u(A) + v(A)·B mod p`, and `0` at infinity.
    pub fn eval(&self, pt: CurvePoint, p: u64) -> u64 {
        match pt {
            CurvePoint::Infinity => 0,
            CurvePoint::Affine { x, y } => (horner(&self.u, x, p) + horner(&self.v, x, p) * y) % p,
        }
    }
}

/// `Σ_m` in its canonical order: coefficient tuples
/// `(u_1..u_{⌊m/2⌋}, v_0..v_{⌊(m-3)/2⌋})` ascending lexicographically.
pub fn sigma_m(curve: &Curve, m: u64) -> Result<Vec<CurveFunction>, EllipticError> {
    let d = curve.points().len() as u64;
    if m < 2 || m >= d {
        return Err(EllipticError::BadDegreeRange { m, d });
    }
    let p = curve.p();
    let nu = (m / 2) as usize;
    let nv = if m >= 3 { ((m - 3) / 2 + 1) as usize } else { 0 };
    let digits = (nu + nv) as u32;
    let size = p
        .checked_pow(digits)
        .filter(|&s| s <= MAX_SIGMA_SIZE)
        .ok_or(EllipticError::TooLarge { what: "|Σ_m|", max: MAX_SIGMA_SIZE })?;

    let mut out = Vec::with_capacity(size as usize);
    let mut tuple = vec![0u64; digits as usize];
    for _ in 0..size {
        let mut u = Vec::with_capacity(nu + 1);
        u.push(0);
        u.extend_from_slice(&tuple[..nu]);
        out.push(CurveFunction::new(u, tuple[nu..].to_vec(), p));
        for slot in tuple.iter_mut().rev() {
            *slot += 1;
            if *slot < p {
                break;
            }
            *slot = 0;
        }
    }
    Ok(out)
}

/// Evaluates `f` at a point of `curve`.
pub fn function_eval(curve: &Curve, f: &CurveFunction, pt: CurvePoint) -> Result<u64, EllipticError> {
    if !curve.contains(pt) {
        return Err(EllipticError::PointNotOnCurve);
    }
    Ok(f.eval(pt, curve.p()))
}

/// `S_E(f, χ) = Σ_P ζ_p^{f(P)}·χ(P)`, with the Weil-type bound
/// `|S| ≤ 2·Deg(f)·√p` checked on the result.
pub fn curve_char_sum(
    group: &CurveGroup,
    f: &CurveFunction,
    chi: CurveCharacter,
) -> Result<Complex64, EllipticError> {
    if f.is_constant() && chi.is_trivial() {
        return Err(EllipticError::TrivialSum);
    }
    let p = group.curve().p();
    let n = group.character_modulus();
    let s: Complex64 = group
        .points()
        .iter()
        .enumerate()
        .map(|(idx, &pt)| {
            let k = group.character_exponent(chi, idx);
            root_of_unity((f.eval(pt, p) * n + k * p) as i64, p * n)
        })
        .sum();
    let bound = 2.0 * f.deg() as f64 * (p as f64).sqrt();
    let slack = 1e-9 * group.order() as f64;
    if s.norm() > bound + slack {
        return Err(EllipticError::BoundViolated { modulus: s.norm(), bound });
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e5() -> Curve {
        Curve::new(5, 1, 1).unwrap()
    }

    #[test]
    fn deg_cases() {
        assert_eq!(CurveFunction::zero().deg(), 0);
        assert_eq!(CurveFunction::new(vec![0, 1], vec![], 5).deg(), 2);
        assert_eq!(CurveFunction::new(vec![0, 1], vec![1], 5).deg(), 3);
        assert_eq!(CurveFunction::new(vec![0, 0, 1], vec![0, 1], 5).deg(), 5);
        assert_eq!(CurveFunction::new(vec![0, 5], vec![10], 5), CurveFunction::zero());
    }

    #[test]
    fn sigma_sizes_and_order() {
        let s2 = sigma_m(&e5(), 2).unwrap();
        let expect: Vec<CurveFunction> = (0..5).map(|c| CurveFunction::new(vec![0, c], vec![], 5)).collect();
        assert_eq!(s2, expect);

        let s3 = sigma_m(&e5(), 3).unwrap();
        assert_eq!(s3.len(), 25);
        assert_eq!(s3[1], CurveFunction::new(vec![0], vec![1], 5));
        assert_eq!(s3[5], CurveFunction::new(vec![0, 1], vec![], 5));
        assert!(s3.iter().all(|f| f.in_sigma(3)));

        for (p, a, b) in [(7, 2, 3), (11, 1, 6), (13, 2, 5)] {
            let c = Curve::new(p, a, b).unwrap();
            for m in 2..=5u64 {
                let s = sigma_m(&c, m).unwrap();
                assert_eq!(s.len() as u64, p.pow(m as u32 - 1), "p={p} m={m}");
                assert!(s.iter().all(|f| f.in_sigma(m)));
                let distinct: std::collections::HashSet<_> = s.iter().collect();
                assert_eq!(distinct.len(), s.len());
            }
        }
    }

    #[test]
    fn sigma_range_guard() {
        assert_eq!(sigma_m(&e5(), 1), Err(EllipticError::BadDegreeRange { m: 1, d: 9 }));
        assert_eq!(sigma_m(&e5(), 9), Err(EllipticError::BadDegreeRange { m: 9, d: 9 }));
        assert!(sigma_m(&e5(), 8).is_ok());
    }

    #[test]
    fn evaluation_examples() {
        let c = e5();
        let x = CurveFunction::new(vec![0, 1], vec![], 5);
        let x_plus_y = CurveFunction::new(vec![0, 1], vec![1], 5);
        assert_eq!(function_eval(&c, &x, CurvePoint::Infinity).unwrap(), 0);
        let pt = CurvePoint::Affine { x: 2, y: 1 };
        assert_eq!(function_eval(&c, &x, pt).unwrap(), 2);
        assert_eq!(function_eval(&c, &x_plus_y, pt).unwrap(), 3);
        assert_eq!(
            function_eval(&c, &x, CurvePoint::Affine { x: 1, y: 0 }),
            Err(EllipticError::PointNotOnCurve)
        );
    }

    #[test]
    fn constant_function_sums_vanish() {
        let g = CurveGroup::new(e5());
        for chi in g.characters().filter(|c| !c.is_trivial()) {
            let s = curve_char_sum(&g, &CurveFunction::zero(), chi).unwrap();
            assert!(s.norm() < 1e-9);
        }
        let trivial = CurveCharacter { s1: 0, s2: 0 };
        assert_eq!(curve_char_sum(&g, &CurveFunction::zero(), trivial), Err(EllipticError::TrivialSum));
    }

    #[test]
    fn bound_holds_exhaustively_on_small_curves() {
        for p in [5i64, 7, 11, 13] {
            for a in 0..p {
                for b in 0..p {
                    let Ok(c) = Curve::new(p as u64, a, b) else { continue };
                    let g = CurveGroup::new(c);
                    for m in (2..=3).filter(|&m| m < g.order() as u64) {
                        for f in sigma_m(&c, m).unwrap() {
                            for chi in g.characters() {
                                if f.is_constant() && chi.is_trivial() {
                                    continue;
                                }
                                curve_char_sum(&g, &f, chi).unwrap();
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn sum_matches_direct_evaluation() {
        let c = e5();
        let g = CurveGroup::new(c);
        let f = CurveFunction::new(vec![0, 1], vec![], 5);
        for chi in g.characters() {
            let direct: Complex64 = g
                .points()
                .iter()
                .map(|&pt| {
                    let fp = f.eval(pt, 5) as f64;
                    Complex64::from_polar(1.0, std::f64::consts::TAU * fp / 5.0)
                        * g.character_eval(chi, pt).unwrap()
                })
                .sum();
            let s = curve_char_sum(&g, &f, chi).unwrap();
            assert!((s - direct).norm() < 1e-10);
            assert!(s.norm() <= 4.0 * 5f64.sqrt() + 1e-9);
        }
    }
}
