use serde::{Deserialize, Serialize};

use crate::algebra::arith::{inv_mod_prime, is_prime};

use super::EllipticError;

pub const MAX_CURVE_PRIME: u64 = 10_000;

/// `y^2 = x^3 + a·x + b` over `F_p`, `p ≥ 5`, nonsingular.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Curve {
    p: u64,
    a: u64,
    b: u64,
}

/// Affine points sort before the point at infinity, so deriving `Ord`
/// yields the canonical point order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CurvePoint {
    Affine { x: u64, y: u64 },
    Infinity,
}

impl Curve {
    pub fn new(p: u64, a: i64, b: i64) -> Result<Self, EllipticError> {
        if !(5..=MAX_CURVE_PRIME).contains(&p) || !is_prime(p) {
            return Err(EllipticError::BadPrime(p));
        }
        let a = a.rem_euclid(p as i64) as u64;
        let b = b.rem_euclid(p as i64) as u64;
        let disc = (4 * (a * a % p * a % p) + 27 * (b * b % p)) % p;
        if disc == 0 {
            return Err(EllipticError::SingularCurve { p, a, b });
        }
        Ok(Curve { p, a, b })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// `g(x) = x^3 + a·x + b mod p`.
    pub fn rhs(&self, x: u64) -> u64 {
        let p = self.p;
        (x * x % p * x + self.a * x + self.b) % p
    }

    pub fn contains(&self, pt: CurvePoint) -> bool {
        match pt {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => x < self.p && y < self.p && y * y % self.p == self.rhs(x),
        }
    }

    pub fn neg(&self, pt: CurvePoint) -> CurvePoint {
        match pt {
            CurvePoint::Infinity => pt,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x, y: (self.p - y) % self.p },
        }
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, lhs: CurvePoint, rhs: CurvePoint) -> CurvePoint {
        let p = self.p;
        let (x1, y1, x2, y2) = match (lhs, rhs) {
            (CurvePoint::Infinity, q) | (q, CurvePoint::Infinity) => return q,
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => {
                (x1, y1, x2, y2)
            }
        };
        let slope = if x1 == x2 {
            if (y1 + y2) % p == 0 {
                return CurvePoint::Infinity;
            }
            (3 * x1 % p * x1 + self.a) % p * inv_mod_prime(2 * y1 % p, p) % p
        } else {
            (y2 + p - y1) % p * inv_mod_prime((x2 + p - x1) % p, p) % p
        };
        let x3 = (slope * slope % p + 2 * p - x1 - x2) % p;
        let y3 = (slope * ((x1 + p - x3) % p) % p + p - y1) % p;
        CurvePoint::Affine { x: x3, y: y3 }
    }

    pub fn mul(&self, mut k: u64, pt: CurvePoint) -> CurvePoint {
        let mut acc = CurvePoint::Infinity;
        let mut base = pt;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(acc, base);
            }
            base = self.add(base, base);
            k >>= 1;
        }
        acc
    }

    /// Every `F_p`-point, affine points by `(x, y)` ascending, `∞` last.
    pub fn points(&self) -> Vec<CurvePoint> {
        let p = self.p;
        let mut roots: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
        for y in 0..p {
            roots[(y * y % p) as usize].push(y);
        }
        let mut pts: Vec<CurvePoint> = (0..p)
            .flat_map(|x| {
                roots[self.rhs(x) as usize]
                    .iter()
                    .map(move |&y| CurvePoint::Affine { x, y })
            })
            .collect();
        pts.push(CurvePoint::Infinity);
        pts
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discriminant_checks() {
        assert!(Curve::new(5, 1, 1).is_ok());
        assert_eq!(
            Curve::new(5, 0, 0),
            Err(EllipticError::SingularCurve { p: 5, a: 0, b: 0 })
        );
        // 4·8 + 27·9 = 275 ≡ 2 (mod 7)
        assert!(Curve::new(7, 2, 3).is_ok());
        assert_eq!(Curve::new(4, 1, 1), Err(EllipticError::BadPrime(4)));
        assert_eq!(Curve::new(3, 1, 1), Err(EllipticError::BadPrime(3)));
        assert_eq!(Curve::new(10_007, 1, 1), Err(EllipticError::BadPrime(10_007)));
    }

    #[test]
    fn small_curve_points_by_hand() {
        let c = Curve::new(5, 1, 1).unwrap();
        let pts = c.points();
        // x = 0, 2, 3, 4 each give two points, x = 1 none, plus ∞
        assert_eq!(pts.len(), 9);
        let xs: Vec<u64> = pts
            .iter()
            .filter_map(|p| match p {
                CurvePoint::Affine { x, .. } => Some(*x),
                CurvePoint::Infinity => None,
            })
            .collect();
        assert_eq!(xs, vec![0, 0, 2, 2, 3, 3, 4, 4]);
        assert_eq!(*pts.last().unwrap(), CurvePoint::Infinity);
        assert!(pts.windows(2).all(|w| w[0] < w[1]));
        assert!(pts.iter().all(|&p| c.contains(p)));
    }

    #[test]
    fn group_axioms_exhaustive() {
        for (p, a, b) in [(5, 1, 1), (7, 2, 3), (11, 1, 6), (13, 2, 5)] {
            let c = Curve::new(p, a, b).unwrap();
            let pts = c.points();
            for &x in &pts {
                assert_eq!(c.add(x, CurvePoint::Infinity), x);
                assert_eq!(c.add(x, c.neg(x)), CurvePoint::Infinity);
                for &y in &pts {
                    let s = c.add(x, y);
                    assert!(c.contains(s));
                    assert_eq!(s, c.add(y, x));
                    for &z in pts.iter().step_by(3) {
                        assert_eq!(c.add(s, z), c.add(x, c.add(y, z)));
                    }
                }
            }
        }
    }
}
