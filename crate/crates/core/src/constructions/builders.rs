use rayon::prelude::*;

use crate::algebra::{arith, root_of_unity, Field, GaloisRing};
use crate::bases::{realify_collection, BasisCollection, FieldTag, OrthonormalBasis, Tolerance, UnitVector};
use crate::combinatorics::HadamardMatrix;
use crate::elliptic::{sigma_m, Curve, CurveGroup};

use super::{ConstructionError, ConstructionSpec};

pub const MAX_MUB_ORDER: u64 = 256;
/// Cap on `p^{m-1}`, the number of bases of an elliptic-curve family.
pub const MAX_EC_BASES: u64 = 2048;

pub fn standard_basis(d: usize, tag: FieldTag) -> OrthonormalBasis {
    OrthonormalBasis::standard(tag, d)
}

/// Phase vectors `scale·ζ_n^{k_x}` validated into a basis.
fn phase_basis(rows: Vec<Vec<i64>>, n: u64, scale: f64) -> Result<OrthonormalBasis, ConstructionError> {
    let tol = Tolerance::default();
    let vectors = rows
        .into_iter()
        .map(|row| UnitVector::complex(row.into_iter().map(|k| root_of_unity(k, n) * scale).collect(), tol))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(OrthonormalBasis::new(vectors, tol)?)
}

fn collect_bases(
    count: usize,
    make: impl Fn(usize) -> Result<OrthonormalBasis, ConstructionError> + Sync + Send,
) -> Result<Vec<OrthonormalBasis>, ConstructionError> {
    (0..count).into_par_iter().map(make).collect()
}

fn field_of_order(q: u64) -> Result<Field, ConstructionError> {
    let (p, m) = arith::prime_power(q).ok_or(ConstructionError::NotPrimePower(q))?;
    Ok(Field::new(p, m)?)
}

/// `q + 1` mutually unbiased bases of `C^q`, `B*` last.
///
/// Odd `q`: `B_a = {(ζ_p^{Tr(a x² + b x)})_x / √q : b}`. Even `q = 2^m`:
/// `B_a = {(i^{tr((a + 2b) x)})_{x ∈ T} / √q : b ∈ T}` over the Teichmüller
/// set `T` of `GR(4, m)`.
pub fn mub_prime_power(q: u64) -> Result<BasisCollection, ConstructionError> {
    let (p, m) = arith::prime_power(q).ok_or(ConstructionError::NotPrimePower(q))?;
    if q > MAX_MUB_ORDER {
        return Err(ConstructionError::TooLarge { what: "q", value: q, max: MAX_MUB_ORDER });
    }
    let d = q as usize;
    let scale = 1.0 / (q as f64).sqrt();
    let mut bases = if p == 2 {
        let ring = GaloisRing::new(m)?;
        let t = ring.teichmuller();
        collect_bases(d, |a| {
            let rows = t
                .iter()
                .map(|b| {
                    let c = ring.add(&t[a], &ring.double(b));
                    t.iter().map(|x| ring.trace(&ring.mul(&c, x)) as i64).collect()
                })
                .collect();
            phase_basis(rows, 4, scale)
        })?
    } else {
        let f = Field::new(p, m)?;
        let f = &f;
        collect_bases(d, |a| {
            let a = f.element(a as u32);
            let rows = f
                .elements()
                .map(|b| {
                    f.elements()
                        .map(|x| {
                            let ax2 = f.mul(a, f.mul(x, x));
                            f.trace(f.add(ax2, f.mul(b, x))) as i64
                        })
                        .collect()
                })
                .collect();
            phase_basis(rows, p, scale)
        })?
    };
    bases.push(standard_basis(d, FieldTag::C));
    Ok(BasisCollection::new(bases, Some(ConstructionSpec::MubPp { q }))?)
}

/// Gauss-sum family in `C^{q-1}`: `B_λ = {(λ(x)χ(x))_{x ∈ F_q*} / √(q-1) : χ}`
/// for every additive `λ`, then `B*`.
pub fn amub_gauss(q: u64) -> Result<BasisCollection, ConstructionError> {
    let f = field_of_order(q)?;
    if q < 3 {
        return Err(ConstructionError::TooSmall { what: "q", value: q, min: 3 });
    }
    let p = f.characteristic() as i64;
    let d = (q - 1) as usize;
    let n = p as u64 * (q - 1);
    let scale = 1.0 / (d as f64).sqrt();
    let f = &f;
    let mut bases = collect_bases(q as usize, |a| {
        let a = f.element(a as u32);
        let rows = (0..d as i64)
            .map(|j| {
                f.nonzero_elements()
                    .map(|x| {
                        let add = f.trace(f.mul(a, x)) as i64;
                        let mult = j * f.dlog(x).expect("nonzero") as i64;
                        add * d as i64 + mult * p
                    })
                    .collect()
            })
            .collect();
        phase_basis(rows, n, scale)
    })?;
    bases.push(standard_basis(d, FieldTag::C));
    Ok(BasisCollection::new(bases, Some(ConstructionSpec::AmubGauss { q }))?)
}

/// Jacobi-sum family in `C^{q-1}`: for every multiplicative `χ` the basis
/// `{(χ(x)χ'(1-x))_{x ≠ 0,1} ‖ 1) / √(q-1) : χ'}`, then `B*`.
pub fn amub_jacobi(q: u64) -> Result<BasisCollection, ConstructionError> {
    let f = field_of_order(q)?;
    if q < 4 {
        return Err(ConstructionError::TooSmall { what: "q", value: q, min: 4 });
    }
    let d = (q - 1) as usize;
    let order = q - 1;
    let scale = 1.0 / (d as f64).sqrt();
    let f = &f;
    let coords: Vec<(i64, i64)> = (2..q as u32)
        .map(|i| {
            let x = f.element(i);
            let one_minus = f.sub(f.one(), x);
            (f.dlog(x).expect("x ≠ 0") as i64, f.dlog(one_minus).expect("x ≠ 1") as i64)
        })
        .collect();
    let coords = &coords;
    let mut bases = collect_bases(d, |j| {
        let rows = (0..d as i64)
            .map(|k| {
                let mut row: Vec<i64> = coords.iter().map(|&(lx, l1x)| j as i64 * lx + k * l1x).collect();
                row.push(0);
                row
            })
            .collect();
        phase_basis(rows, order, scale)
    })?;
    bases.push(standard_basis(d, FieldTag::C));
    Ok(BasisCollection::new(bases, Some(ConstructionSpec::AmubJacobi { q }))?)
}

/// Elliptic-curve family: one basis `B_f = {(ζ_p^{f(P)}χ(P))_P / √d : χ}`
/// for each `f ∈ Σ_m`, over the points of `E(F_p)` in canonical order.
pub fn amub_elliptic(p: u64, a: i64, b: i64, m: u64) -> Result<BasisCollection, ConstructionError> {
    let curve = Curve::new(p, a, b)?;
    let group = CurveGroup::new(curve);
    let d = group.order();
    if m < 2 || m >= d as u64 {
        return Err(crate::elliptic::EllipticError::BadDegreeRange { m, d: d as u64 }.into());
    }
    let count = p.checked_pow((m - 1) as u32).unwrap_or(u64::MAX);
    if count > MAX_EC_BASES {
        return Err(ConstructionError::TooLarge { what: "p^(m-1)", value: count, max: MAX_EC_BASES });
    }
    let functions = sigma_m(&curve, m)?;
    let (_, n2) = group.structure();
    let modulus = p * n2;
    let scale = 1.0 / (d as f64).sqrt();
    let chars: Vec<_> = group.characters().collect();
    let (group, chars, functions) = (&group, &chars, &functions);
    let bases = collect_bases(functions.len(), |fi| {
        let f = &functions[fi];
        let fvals: Vec<u64> = group.points().iter().map(|&pt| f.eval(pt, p)).collect();
        let rows = chars
            .iter()
            .map(|&chi| {
                (0..d)
                    .map(|idx| (fvals[idx] * n2 + group.character_exponent(chi, idx) * p) as i64)
                    .collect()
            })
            .collect();
        phase_basis(rows, modulus, scale)
    })?;
    let spec = ConstructionSpec::AmubEc { p, a: curve.a(), b: curve.b(), m };
    Ok(BasisCollection::new(bases, Some(spec))?)
}

/// Builds a complex family and applies the doubling map to it.
pub fn real_amub_from_complex(spec: &ConstructionSpec) -> Result<BasisCollection, ConstructionError> {
    let inner = spec.build()?;
    if inner.tag() != FieldTag::C {
        return Err(ConstructionError::NotComplex);
    }
    Ok(realify_collection(&inner)?)
}

/// `{B*, rows of H/√d}` in `R^d`.
pub fn real_pair_from_hadamard(h: &HadamardMatrix) -> Result<BasisCollection, ConstructionError> {
    let d = h.order();
    let scale = 1.0 / (d as f64).sqrt();
    let tol = Tolerance::default();
    let vectors = h
        .rows()
        .map(|row| UnitVector::real(row.iter().map(|&e| e as f64 * scale).collect(), tol))
        .collect::<Result<Vec<_>, _>>()?;
    let bases = vec![standard_basis(d, FieldTag::R), OrthonormalBasis::new(vectors, tol)?];
    Ok(BasisCollection::new(bases, None)?)
}
