use num_complex::Complex64;
use proptest::prelude::*;

use amub_core::algebra::{field_for_order, Field};
use amub_core::bases::{inner, realify_vector, welch_bound, Components, OrthonormalBasis, UnitVector};
use amub_core::combinatorics::{hadamard_paley, hadamard_sylvester, is_mutually_orthogonal, mols_prime_power};
use amub_core::elliptic::{Curve, CurveGroup, CurvePoint};
use amub_core::io::Bundle;
use amub_core::{gamma, realify_collection, BasisCollection, ConstructionSpec, FieldTag, Tolerance};

const ORDERS: &[u64] = &[2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32];

fn field_and_elems() -> impl Strategy<Value = (u64, u32, u32, u32)> {
    prop::sample::select(ORDERS).prop_flat_map(|q| {
        let q32 = q as u32;
        (Just(q), 0..q32, 0..q32, 0..q32)
    })
}

fn unit_complex(d: usize) -> impl Strategy<Value = Vec<Complex64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), d)
        .prop_filter("non-zero", |v| v.iter().any(|&(a, b)| a.abs() + b.abs() > 1e-3))
        .prop_map(|v| {
            let z: Vec<Complex64> = v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect();
            let n = z.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
            z.into_iter().map(|c| c / n).collect()
        })
}

/// Gram–Schmidt on the columns of a random complex matrix.
fn random_unitary(d: usize, seed: &[(f64, f64)]) -> Vec<Vec<Complex64>> {
    let mut cols: Vec<Vec<Complex64>> = (0..d)
        .map(|j| (0..d).map(|i| Complex64::new(seed[j * d + i].0, seed[j * d + i].1)).collect())
        .collect();
    for j in 0..d {
        for k in 0..j {
            let proj: Complex64 = (0..d).map(|i| cols[j][i] * cols[k][i].conj()).sum();
            let ck = cols[k].clone();
            for (x, c) in cols[j].iter_mut().zip(&ck) {
                *x -= proj * c;
            }
        }
        let n = cols[j].iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
        cols[j].iter_mut().for_each(|c| *c /= n);
    }
    cols
}

fn apply(u: &[Vec<Complex64>], coll: &BasisCollection) -> BasisCollection {
    let d = coll.dim();
    let tol = Tolerance::Absolute(1e-8);
    let bases = coll
        .bases()
        .iter()
        .map(|b| {
            let vs = b
                .vectors()
                .iter()
                .map(|v| {
                    let x: Vec<Complex64> =
                        (0..d).map(|i| (0..d).map(|k| u[k][i] * v.components().get(k)).sum()).collect();
                    UnitVector::complex(x, tol).unwrap()
                })
                .collect();
            OrthonormalBasis::new(vs, tol).unwrap()
        })
        .collect();
    BasisCollection::new(bases, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((q, a, b, c) in field_and_elems()) {
        let f = field_for_order(q).unwrap();
        let (a, b, c) = (f.element(a), f.element(b), f.element(c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.trace(f.add(a, b)), (f.trace(a) + f.trace(b)) % f.characteristic());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            prop_assert_eq!(f.exp(f.dlog(a).unwrap() as u64), a);
        }
    }

    #[test]
    fn characters_are_homomorphisms((q, a, x, y) in field_and_elems()) {
        let f = field_for_order(q).unwrap();
        let (a, x, y) = (f.element(a), f.element(x), f.element(y));
        let lhs = f.additive_character(a, f.add(x, y));
        let rhs = f.additive_character(a, x) * f.additive_character(a, y);
        prop_assert!((lhs - rhs).norm() < 1e-12);
        if !x.is_zero() && !y.is_zero() {
            let j = a.index();
            let lhs = f.multiplicative_character(j, f.mul(x, y)).unwrap();
            let rhs = f.multiplicative_character(j, x).unwrap() * f.multiplicative_character(j, y).unwrap();
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }
    }

    #[test]
    fn welch_t1_is_one_over_d(d in 2u64..2000, n in 2u64..2000) {
        for tag in [FieldTag::C, FieldTag::R] {
            let w = welch_bound(d, n, 1, tag).unwrap();
            prop_assert_eq!(w.exact, num_rational::BigRational::new(1.into(), d.into()));
        }
    }

    #[test]
    fn realification_identity((v, u) in (1usize..9).prop_flat_map(|d| (unit_complex(d), unit_complex(d)))) {
        let tol = Tolerance::Absolute(1e-9);
        let v = UnitVector::complex(v, tol).unwrap();
        let u = UnitVector::complex(u, tol).unwrap();
        let c = inner(&v, &u).unwrap();
        let (v1, v2) = realify_vector(&v).unwrap();
        let (u1, u2) = realify_vector(&u).unwrap();
        let r = |a: &UnitVector, b: &UnitVector| inner(a, b).unwrap().re;
        prop_assert!((r(&v1, &u1).powi(2) + r(&v1, &u2).powi(2) - c.norm_sqr()).abs() < 1e-12);
        prop_assert!((r(&v1, &u1) - c.re).abs() < 1e-12);
        prop_assert!((r(&v1, &u2) - c.im).abs() < 1e-12);
        prop_assert!((r(&v2, &u2) - r(&v1, &u1)).abs() < 1e-12);
        prop_assert!((r(&v2, &u1) + r(&v1, &u2)).abs() < 1e-12);
        prop_assert!(r(&v1, &v2).abs() < 1e-12);
        for (a, b) in [(&v1, &u1), (&v1, &u2), (&v2, &u1), (&v2, &u2)] {
            prop_assert!(r(a, b).abs() <= c.norm() + 1e-12);
        }
    }

    #[test]
    fn gamma_is_unitarily_invariant(
        spec in prop::sample::select(vec![
            ConstructionSpec::MubPp { q: 3 },
            ConstructionSpec::MubPp { q: 4 },
            ConstructionSpec::AmubGauss { q: 5 },
            ConstructionSpec::AmubJacobi { q: 5 },
        ]),
        seed in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 16),
    ) {
        let coll = spec.build().unwrap();
        let d = coll.dim();
        prop_assume!(seed.len() >= d * d);
        let u = random_unitary(d, &seed);
        let rotated = apply(&u, &coll);
        let g0 = gamma(&coll).unwrap().gamma;
        let g1 = gamma(&rotated).unwrap().gamma;
        prop_assert!((g0 - g1).abs() < 1e-9, "{} vs {}", g0, g1);
    }

    #[test]
    fn curve_group_law(p in prop::sample::select(vec![5u64, 7, 11, 13, 17, 19, 23]), a in 0i64..23, b in 0i64..23,
                       i in 0usize..1000, j in 0usize..1000, k in 0usize..1000) {
        let Ok(curve) = Curve::new(p, a, b) else { return Ok(()) };
        let pts = curve.points();
        let (x, y, z) = (pts[i % pts.len()], pts[j % pts.len()], pts[k % pts.len()]);
        prop_assert_eq!(curve.add(curve.add(x, y), z), curve.add(x, curve.add(y, z)));
        prop_assert_eq!(curve.add(x, y), curve.add(y, x));
        prop_assert_eq!(curve.add(x, curve.neg(x)), CurvePoint::Infinity);
        prop_assert!(curve.contains(curve.add(x, y)));
        prop_assert_eq!(curve.mul(pts.len() as u64, x), CurvePoint::Infinity);
    }

    #[test]
    fn bundle_round_trip(spec in prop::sample::select(vec![
        ConstructionSpec::MubPp { q: 5 },
        ConstructionSpec::AmubGauss { q: 7 },
        ConstructionSpec::AmubJacobi { q: 8 },
        ConstructionSpec::AmubEc { p: 7, a: 1, b: 3, m: 2 },
        ConstructionSpec::Realify { inner: Box::new(ConstructionSpec::MubPp { q: 3 }) },
    ])) {
        let coll = spec.build().unwrap();
        let bundle = Bundle::certified(&coll, Tolerance::default()).unwrap();
        let text = bundle.to_json();
        let back = Bundle::from_json(&text).unwrap();
        prop_assert_eq!(&back, &bundle);
        prop_assert_eq!(back.to_json(), text.clone());
        let again = Bundle::certified(&spec.build().unwrap(), Tolerance::default()).unwrap();
        prop_assert_eq!(again.to_json(), text);
    }
}

#[test]
fn character_orthogonality_and_gauss_sums() {
    for q in [3u64, 4, 5, 7, 8, 9, 16, 25, 27, 49, 64, 81] {
        let f: Field = field_for_order(q).unwrap();
        let tol = 1e-9 * q as f64;
        for a in f.elements() {
            for b in f.elements().filter(|&b| b != a) {
                let s: Complex64 =
                    f.elements().map(|x| f.additive_character(a, x) * f.additive_character(b, x).conj()).sum();
                assert!(s.norm() < tol, "q={q}");
            }
        }
        for j in 0..(q - 1) as u32 {
            for k in 0..(q - 1) as u32 {
                let s: Complex64 = f
                    .nonzero_elements()
                    .map(|x| f.multiplicative_character(j, x).unwrap() * f.multiplicative_character(k, x).unwrap().conj())
                    .sum();
                let expect = if j == k { (q - 1) as f64 } else { 0.0 };
                assert!((s - expect).norm() < tol, "q={q} j={j} k={k}");
            }
        }
        for j in 1..(q - 1) as u32 {
            for a in f.nonzero_elements() {
                let g = f.gauss_sum(j, a).unwrap();
                assert!((g.norm() - (q as f64).sqrt()).abs() < 1e-9 * (q as f64).sqrt());
            }
        }
    }
}

#[test]
fn field_construction_is_deterministic() {
    for q in ORDERS {
        let (a, b) = (field_for_order(*q).unwrap(), field_for_order(*q).unwrap());
        assert_eq!(a.modulus(), b.modulus());
        assert_eq!(a.generator(), b.generator());
        assert!(a.elements().zip(b.elements()).all(|(x, y)| x == y));
    }
}

#[test]
fn exhaustive_small_curve_groups() {
    for p in [5u64, 7, 11, 13] {
        for a in 0..p as i64 {
            for b in 0..p as i64 {
                let Ok(curve) = Curve::new(p, a, b) else { continue };
                let g = CurveGroup::new(curve);
                let pts = g.points().to_vec();
                for &x in &pts {
                    for &y in &pts {
                        assert_eq!(curve.add(x, curve.neg(x)), CurvePoint::Infinity);
                        for &z in pts.iter().step_by(3) {
                            assert_eq!(curve.add(curve.add(x, y), z), curve.add(x, curve.add(y, z)));
                        }
                    }
                }
                let (g1, g2) = g.generators();
                for &pt in &pts {
                    let (e1, e2) = g.coordinates(pt).unwrap();
                    assert_eq!(curve.add(curve.mul(e1, g1), curve.mul(e2, g2)), pt);
                }
                assert_eq!(g.characters().count(), g.order());
            }
        }
    }
}

#[test]
fn every_construction_respects_welch() {
    let specs = [
        ConstructionSpec::MubPp { q: 7 },
        ConstructionSpec::AmubGauss { q: 9 },
        ConstructionSpec::AmubJacobi { q: 9 },
        ConstructionSpec::AmubEc { p: 11, a: 1, b: 1, m: 2 },
        ConstructionSpec::Realify { inner: Box::new(ConstructionSpec::AmubGauss { q: 7 }) },
    ];
    for spec in specs {
        let coll = spec.build().unwrap();
        let rep = gamma(&coll).unwrap();
        for e in &rep.welch {
            assert!(e.slack >= -rep.tolerance, "{spec:?}: {e:?}");
        }
    }
}

#[test]
fn realified_gamma_never_grows() {
    for spec in [ConstructionSpec::MubPp { q: 5 }, ConstructionSpec::AmubJacobi { q: 7 }, ConstructionSpec::AmubGauss { q: 8 }] {
        let coll = spec.build().unwrap();
        let real = realify_collection(&coll).unwrap();
        assert_eq!((real.dim(), real.len()), (2 * coll.dim(), coll.len()));
        assert!(gamma(&real).unwrap().gamma <= gamma(&coll).unwrap().gamma + 1e-12);
    }
}

#[test]
fn tensor_of_small_mubs() {
    let spec = ConstructionSpec::Tensor {
        left: Box::new(ConstructionSpec::MubPp { q: 2 }),
        right: Box::new(ConstructionSpec::MubPp { q: 3 }),
    };
    let coll = spec.build().unwrap();
    assert_eq!((coll.dim(), coll.len()), (6, 3));
    let rep = gamma(&coll).unwrap();
    assert!((rep.gamma - 1.0 / 6f64.sqrt()).abs() < 1e-12);
    assert!(rep.is_mub());
}

#[test]
fn combinatorial_families() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        let fam = mols_prime_power(q).unwrap();
        assert_eq!(fam.len() as u64, q - 1);
        assert!(is_mutually_orthogonal(&fam));
    }
    for k in 0..=6 {
        assert_eq!(hadamard_sylvester(k).unwrap().order(), 1 << k);
    }
    for q in [3u64, 7, 11, 19, 23] {
        assert_eq!(hadamard_paley(q).unwrap().order() as u64, q + 1);
    }
}

#[test]
fn components_get_matches_storage() {
    let c = Components::Real(vec![0.6, 0.8]);
    assert_eq!(c.get(1), Complex64::new(0.8, 0.0));
}
