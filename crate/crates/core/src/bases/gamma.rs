//! The coherence `γ` of a basis collection and its certificate.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::collection::{BasisCollection, OrthonormalBasis};
use super::vector::{inner_unchecked, FieldTag, Tolerance};
use super::welch::{design_bound, norm_pow, welch_bound};
use super::BasesError;

/// Moduli this close to the maximum count as ties when picking the witness.
const TIE_EPS: f64 = 1e-12;

/// Vector pair `(basis_a, vector_a)`, `(basis_b, vector_b)` attaining `γ`,
/// with `basis_a < basis_b`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Witness {
    pub basis_a: usize,
    pub vector_a: usize,
    pub basis_b: usize,
    pub vector_b: usize,
}

/// One row of the Welch table: `γ^{2t} ≥ bound`, `slack = γ^{2t} - bound`,
/// `tight` when the slack vanishes within tolerance.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WelchEntry {
    pub t: u32,
    pub bound: f64,
    pub gamma_pow: f64,
    pub slack: f64,
    pub tight: bool,
}

/// Equality in the Welch inequality for the full set of `n·d` vectors.
/// Any union of orthonormal bases is a 1-design; the 2-design flag is the
/// informative one.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignFlags {
    pub spherical_1_design: bool,
    pub spherical_2_design: bool,
}

/// `Mub` when every cross pair has modulus `1/√d`; `Amub` reports the
/// measured `γ` and `c = γ·√d`; `Plain` when some cross pair is parallel.
#[derive(Copy, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Verdict {
    Mub,
    Amub { gamma: f64, c: f64 },
    Plain,
}

impl Verdict {
    pub fn classify(gamma: f64, min_cross: f64, d: usize, tau: f64) -> Verdict {
        let target = 1.0 / (d as f64).sqrt();
        if (gamma - target).abs() <= tau && (min_cross - target).abs() <= tau {
            Verdict::Mub
        } else if gamma < 1.0 - tau {
            Verdict::Amub { gamma, c: gamma * (d as f64).sqrt() }
        } else {
            Verdict::Plain
        }
    }

    /// Same variant, and for `Amub` the same `γ` within `tau`.
    pub fn matches(&self, other: &Verdict, tau: f64) -> bool {
        match (self, other) {
            (Verdict::Mub, Verdict::Mub) | (Verdict::Plain, Verdict::Plain) => true,
            (Verdict::Amub { gamma: a, .. }, Verdict::Amub { gamma: b, .. }) => (a - b).abs() <= tau,
            _ => false,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Mub => write!(f, "MUB"),
            Verdict::Amub { gamma, c } => write!(f, "AMUB(gamma={gamma:.7}, c={c:.4})"),
            Verdict::Plain => write!(f, "plain"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GammaReport {
    pub field: FieldTag,
    pub dimension: usize,
    pub basis_count: usize,
    pub gamma: f64,
    pub witness: Witness,
    /// Smallest cross-basis modulus.
    pub min_cross: f64,
    pub tolerance: f64,
    pub welch: Vec<WelchEntry>,
    pub design: DesignFlags,
    pub verdict: Verdict,
}

impl GammaReport {
    pub fn is_mub(&self) -> bool {
        self.verdict == Verdict::Mub
    }
}

#[derive(Copy, Clone, Debug)]
struct PairScan {
    max: f64,
    min: f64,
    s1: f64,
    s2: f64,
}

fn scan_pair(a: &OrthonormalBasis, b: &OrthonormalBasis) -> PairScan {
    let d = a.dim();
    let mut acc = PairScan { max: 0.0, min: f64::INFINITY, s1: 0.0, s2: 0.0 };
    for x in 0..d {
        for y in 0..d {
            let m2 = inner_unchecked(a.components(x), b.components(y)).norm_sqr();
            let m = m2.sqrt();
            acc.max = acc.max.max(m);
            acc.min = acc.min.min(m);
            acc.s1 += m2;
            acc.s2 += m2 * m2;
        }
    }
    acc
}

/// Modulus of the inner product named by `w`.
pub fn witness_value(coll: &BasisCollection, w: &Witness) -> Result<f64, BasesError> {
    let n = coll.len();
    let d = coll.dim();
    if w.basis_a >= n || w.basis_b >= n || w.vector_a >= d || w.vector_b >= d {
        return Err(BasesError::BadParameters(format!("witness {w:?} out of range")));
    }
    let a = coll.basis(w.basis_a).components(w.vector_a);
    let b = coll.basis(w.basis_b).components(w.vector_b);
    Ok(inner_unchecked(a, b).norm())
}

pub fn gamma(coll: &BasisCollection) -> Result<GammaReport, BasesError> {
    gamma_with(coll, Tolerance::default())
}

pub fn gamma_with(coll: &BasisCollection, tol: Tolerance) -> Result<GammaReport, BasesError> {
    let n = coll.len();
    if n < 2 {
        return Err(BasesError::SingleBasis);
    }
    let d = coll.dim();
    let tau = tol.at(d);
    let bases = coll.bases();

    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let scans: Vec<PairScan> = pairs.par_iter().map(|&(i, j)| scan_pair(&bases[i], &bases[j])).collect();

    let gmax = scans.iter().map(|s| s.max).fold(0.0, f64::max);
    let gmin = scans.iter().map(|s| s.min).fold(f64::INFINITY, f64::min);
    let (s1, s2) = scans.iter().fold((0.0, 0.0), |(a, b), s| (a + s.s1, b + s.s2));

    let witness = pairs
        .iter()
        .zip(&scans)
        .filter(|(_, s)| s.max >= gmax - TIE_EPS)
        .find_map(|(&(i, j), _)| {
            (0..d)
                .flat_map(|x| (0..d).map(move |y| (x, y)))
                .find(|&(x, y)| {
                    inner_unchecked(bases[i].components(x), bases[j].components(y)).norm() >= gmax - TIE_EPS
                })
                .map(|(x, y)| Witness { basis_a: i, vector_a: x, basis_b: j, vector_b: y })
        })
        .expect("the maximum is attained by some pair");

    let welch = [1u32, 2]
        .iter()
        .map(|&t| {
            let bound = welch_bound(d.max(2) as u64, n as u64, t, coll.tag())
                .map(|w| w.value)
                .unwrap_or(f64::NAN);
            let gamma_pow = norm_pow(gmax, t);
            let slack = gamma_pow - bound;
            WelchEntry { t, bound, gamma_pow, slack, tight: slack.abs() <= tau }
        })
        .collect();

    // Within a basis the moduli are exactly 1 (diagonal) and 0, so only the
    // cross pairs enter the power sums.
    let total = (n * d) as f64;
    let design_flag = |t: u32, cross: f64| {
        let lhs = (total + 2.0 * cross) / (total * total);
        let rhs = design_bound(d as u64, t, coll.tag());
        let rhs = num_traits::ToPrimitive::to_f64(&rhs).unwrap_or(f64::NAN);
        (lhs - rhs).abs() <= tau
    };
    let design = DesignFlags {
        spherical_1_design: design_flag(1, s1),
        spherical_2_design: design_flag(2, s2),
    };

    Ok(GammaReport {
        field: coll.tag(),
        dimension: d,
        basis_count: n,
        gamma: gmax,
        witness,
        min_cross: gmin,
        tolerance: tau,
        welch,
        design,
        verdict: Verdict::classify(gmax, gmin, d, tau),
    })
}
