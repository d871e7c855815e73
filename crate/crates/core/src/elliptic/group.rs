//! Abelian group structure of `E(F_p)` and its character group.
//!
//! The group is written as `Z/n1 × Z/n2` with `n1 | n2`. `n2` is the
//! exponent (largest point order), `g2` the first point of that order, and
//! `g1` the first point of order `n1` whose cyclic subgroup meets `<g2>`
//! trivially. Every point then has unique coordinates `(e1, e2)`.

use num_complex::Complex64;

use crate::algebra::arith::divisors;
use crate::algebra::root_of_unity;

use super::curve::{Curve, CurvePoint};
use super::EllipticError;

/// `χ(P) = ζ_{n1}^{s1·e1} · ζ_{n2}^{s2·e2}` for `P` with coordinates `(e1, e2)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveCharacter {
    pub s1: u64,
    pub s2: u64,
}

impl CurveCharacter {
    pub fn is_trivial(&self) -> bool {
        self.s1 == 0 && self.s2 == 0
    }
}

#[derive(Clone, Debug)]
pub struct CurveGroup {
    curve: Curve,
    points: Vec<CurvePoint>,
    n1: u64,
    n2: u64,
    g1: CurvePoint,
    g2: CurvePoint,
    coords: Vec<(u64, u64)>,
}

impl CurveGroup {
    pub fn new(curve: Curve) -> Self {
        let points = curve.points();
        let d = points.len() as u64;
        let divs = divisors(d);
        let order_of = |pt: CurvePoint| -> u64 {
            *divs
                .iter()
                .find(|&&k| curve.mul(k, pt) == CurvePoint::Infinity)
                .expect("Lagrange: point order divides the group order")
        };

        let orders: Vec<u64> = points.iter().map(|&pt| order_of(pt)).collect();
        let n2 = *orders.iter().max().unwrap();
        let n1 = d / n2;
        assert_eq!(n1 * n2, d);
        assert_eq!(n2 % n1, 0, "invariant factors must divide");
        let g2 = points[orders.iter().position(|&o| o == n2).unwrap()];

        let index = |pt: &CurvePoint| points.binary_search(pt).expect("point on curve");
        let mut in_g2 = vec![false; points.len()];
        let mut cur = CurvePoint::Infinity;
        for _ in 0..n2 {
            in_g2[index(&cur)] = true;
            cur = curve.add(cur, g2);
        }

        let g1 = if n1 == 1 {
            CurvePoint::Infinity
        } else {
            points
                .iter()
                .zip(&orders)
                .filter(|(_, &o)| o == n1)
                .map(|(&pt, _)| pt)
                .find(|&pt| {
                    let mut m = pt;
                    (1..n1).all(|_| {
                        let fresh = !in_g2[index(&m)];
                        m = curve.add(m, pt);
                        fresh
                    })
                })
                .expect("a cyclic summand of maximal order has a complement")
        };

        let mut coords = vec![(u64::MAX, u64::MAX); points.len()];
        let mut row = CurvePoint::Infinity;
        for e1 in 0..n1 {
            let mut pt = row;
            for e2 in 0..n2 {
                let slot = &mut coords[index(&pt)];
                assert_eq!(slot.0, u64::MAX, "coordinate map is not injective");
                *slot = (e1, e2);
                pt = curve.add(pt, g2);
            }
            row = curve.add(row, g1);
        }

        CurveGroup { curve, points, n1, n2, g1, g2, coords }
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    /// Canonically ordered points.
    pub fn points(&self) -> &[CurvePoint] {
        &self.points
    }

    pub fn order(&self) -> usize {
        self.points.len()
    }

    /// Invariant factors `(n1, n2)`, `n1 | n2`.
    pub fn structure(&self) -> (u64, u64) {
        (self.n1, self.n2)
    }

    pub fn generators(&self) -> (CurvePoint, CurvePoint) {
        (self.g1, self.g2)
    }

    pub fn index_of(&self, pt: CurvePoint) -> Result<usize, EllipticError> {
        self.points.binary_search(&pt).map_err(|_| EllipticError::PointNotOnCurve)
    }

    /// `(e1, e2)` with `pt = e1·g1 + e2·g2`.
    pub fn coordinates(&self, pt: CurvePoint) -> Result<(u64, u64), EllipticError> {
        Ok(self.coords[self.index_of(pt)?])
    }

    /// All `d` characters, `s1` major, `s2` minor.
    pub fn characters(&self) -> impl Iterator<Item = CurveCharacter> + '_ {
        (0..self.n1).flat_map(move |s1| (0..self.n2).map(move |s2| CurveCharacter { s1, s2 }))
    }

    /// Exponent `k` with `χ(P) = ζ_{n2}^k`, for the point at index `idx`.
    pub(crate) fn character_exponent(&self, chi: CurveCharacter, idx: usize) -> u64 {
        let (e1, e2) = self.coords[idx];
        let lift = self.n2 / self.n1;
        ((chi.s1 % self.n1) * e1 % self.n1 * lift + (chi.s2 % self.n2) * e2) % self.n2
    }

    /// Order of the root of unity returned by [`Self::character_exponent`].
    pub(crate) fn character_modulus(&self) -> u64 {
        self.n2
    }

    pub fn character_eval(&self, chi: CurveCharacter, pt: CurvePoint) -> Result<Complex64, EllipticError> {
        let idx = self.index_of(pt)?;
        Ok(root_of_unity(self.character_exponent(chi, idx) as i64, self.n2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_curves(p: u64) -> impl Iterator<Item = Curve> {
        (0..p as i64).flat_map(move |a| (0..p as i64).filter_map(move |b| Curve::new(p, a, b).ok()))
    }

    #[test]
    fn order_of_small_curve() {
        let g = CurveGroup::new(Curve::new(5, 1, 1).unwrap());
        assert_eq!(g.order(), 9);
        let (n1, n2) = g.structure();
        assert_eq!(n1 * n2, 9);
    }

    #[test]
    fn hasse_window_and_coordinate_bijection() {
        for p in [5u64, 7, 11, 13] {
            for c in all_curves(p) {
                let g = CurveGroup::new(c);
                let d = g.order() as f64;
                let pf = p as f64;
                assert!((d - pf - 1.0).abs() <= 2.0 * pf.sqrt(), "p={p} d={d}");
                let (g1, g2) = g.generators();
                let (n1, n2) = g.structure();
                assert_eq!(n2 % n1, 0);
                let mut seen = std::collections::HashSet::new();
                for &pt in g.points() {
                    let (e1, e2) = g.coordinates(pt).unwrap();
                    assert!(e1 < n1 && e2 < n2);
                    assert!(seen.insert((e1, e2)));
                    let rebuilt = c.add(c.mul(e1, g1), c.mul(e2, g2));
                    assert_eq!(rebuilt, pt);
                }
            }
        }
    }

    #[test]
    fn character_orthogonality_and_homomorphism() {
        let g = CurveGroup::new(Curve::new(5, 1, 1).unwrap());
        let chars: Vec<CurveCharacter> = g.characters().collect();
        assert_eq!(chars.len(), 9);
        let d = g.order() as f64;
        for &a in &chars {
            assert_eq!(g.character_eval(a, CurvePoint::Infinity).unwrap(), Complex64::new(1.0, 0.0));
            for &b in &chars {
                let s: Complex64 = g
                    .points()
                    .iter()
                    .map(|&pt| g.character_eval(a, pt).unwrap() * g.character_eval(b, pt).unwrap().conj())
                    .sum();
                let expect = if a == b { d } else { 0.0 };
                assert!((s - expect).norm() <= 1e-9 * d);
            }
            let c = g.curve();
            for &x in g.points() {
                for &y in g.points() {
                    let lhs = g.character_eval(a, c.add(x, y)).unwrap();
                    let rhs = g.character_eval(a, x).unwrap() * g.character_eval(a, y).unwrap();
                    assert!((lhs - rhs).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn trivial_character_is_one() {
        let g = CurveGroup::new(Curve::new(7, 2, 3).unwrap());
        let trivial = CurveCharacter { s1: 0, s2: 0 };
        for &pt in g.points() {
            assert_eq!(g.character_eval(trivial, pt).unwrap(), Complex64::new(1.0, 0.0));
        }
        assert_eq!(
            g.character_eval(trivial, CurvePoint::Affine { x: 1, y: 1 }),
            Err(EllipticError::PointNotOnCurve)
        );
    }

    #[test]
    fn non_cyclic_groups_are_handled() {
        // some curve over a small field has n1 > 1
        let found = [5u64, 7, 11, 13]
            .into_iter()
            .flat_map(all_curves)
            .map(CurveGroup::new)
            .find(|g| g.structure().0 > 1);
        let g = found.expect("a non-cyclic E(F_p) exists for p <= 13");
        assert_eq!(g.characters().count(), g.order());
    }
}
