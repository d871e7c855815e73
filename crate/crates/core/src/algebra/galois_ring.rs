//! The Galois ring `GR(4, m) = Z_4[x] / (H(x))`.
//!
//! `H` is the Hensel lift of the `F_{2^m}` modulus, computed with Graeffe's
//! root-squaring step `H(x^2) = ±(e(x)^2 - o(x)^2)` where `e`/`o` are the even
//! and odd parts of the binary modulus. Teichmüller representatives are
//! obtained as `τ(y) = y^{2^m}`: squaring kills the `2b` part of `y = t + 2b`
//! and fixes `t`.

use super::field::Field;
use super::AlgebraError;

pub const MAX_GALOIS_RING_DEGREE: u32 = 12;

/// Coefficients mod 4, low-to-high, length `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GrElement(Vec<u8>);

impl GrElement {
    pub fn coefficients(&self) -> &[u8] {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct GaloisRing {
    m: u32,
    modulus: Vec<u8>,
    /// `teichmuller[i]` lifts the `F_{2^m}` element with canonical index `i`.
    teichmuller: Vec<GrElement>,
}

impl GaloisRing {
    pub fn new(m: u32) -> Result<Self, AlgebraError> {
        if m == 0 || m > MAX_GALOIS_RING_DEGREE {
            return Err(AlgebraError::TooLarge {
                what: "Galois ring degree",
                value: m as u64,
                max: MAX_GALOIS_RING_DEGREE as u64,
            });
        }
        let base = Field::new(2, m)?;
        let modulus = hensel_lift(base.modulus());
        let mut ring = GaloisRing { m, modulus, teichmuller: Vec::new() };
        ring.teichmuller = base
            .elements()
            .map(|x| {
                let lifted: Vec<u8> = base.coefficients(x).iter().map(|&c| c as u8).collect();
                ring.teichmuller_lift(&GrElement(lifted))
            })
            .collect();
        Ok(ring)
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// The Teichmüller set, ordered by the canonical index of its residues.
    pub fn teichmuller(&self) -> &[GrElement] {
        &self.teichmuller
    }

    pub fn zero(&self) -> GrElement {
        GrElement(vec![0; self.m as usize])
    }

    pub fn one(&self) -> GrElement {
        let mut v = vec![0; self.m as usize];
        v[0] = 1;
        GrElement(v)
    }

    /// Element with base-4 index `idx` (coefficient `i` is digit `i`).
    pub fn element(&self, mut idx: u64) -> GrElement {
        let mut v = vec![0u8; self.m as usize];
        for c in v.iter_mut() {
            *c = (idx % 4) as u8;
            idx /= 4;
        }
        GrElement(v)
    }

    pub fn size(&self) -> u64 {
        4u64.pow(self.m)
    }

    pub fn add(&self, x: &GrElement, y: &GrElement) -> GrElement {
        GrElement(x.0.iter().zip(&y.0).map(|(a, b)| (a + b) % 4).collect())
    }

    pub fn sub(&self, x: &GrElement, y: &GrElement) -> GrElement {
        GrElement(x.0.iter().zip(&y.0).map(|(a, b)| (a + 4 - b) % 4).collect())
    }

    pub fn double(&self, x: &GrElement) -> GrElement {
        GrElement(x.0.iter().map(|a| (2 * a) % 4).collect())
    }

    pub fn mul(&self, x: &GrElement, y: &GrElement) -> GrElement {
        let m = self.m as usize;
        let mut prod = vec![0u8; 2 * m];
        for (i, &a) in x.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.0.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % 4;
            }
        }
        // reduce with the monic modulus from the top down
        for k in (m..2 * m).rev() {
            let lead = prod[k];
            if lead == 0 {
                continue;
            }
            for (i, &c) in self.modulus.iter().enumerate() {
                let idx = k - m + i;
                prod[idx] = (prod[idx] + 4 * 4 - lead * c % 4) % 4;
            }
        }
        prod.truncate(m);
        GrElement(prod)
    }

    pub fn pow(&self, x: &GrElement, mut e: u64) -> GrElement {
        let mut acc = self.one();
        let mut base = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `τ(y) = y^{2^m}`, the Teichmüller representative of `y mod 2`.
    pub fn teichmuller_lift(&self, y: &GrElement) -> GrElement {
        let mut t = y.clone();
        for _ in 0..self.m {
            t = self.mul(&t, &t);
        }
        t
    }

    /// Unique `(a, b)` in `T × T` with `y = a + 2b`.
    pub fn decompose(&self, y: &GrElement) -> (GrElement, GrElement) {
        let a = self.teichmuller_lift(y);
        let diff = self.sub(y, &a);
        debug_assert!(diff.0.iter().all(|c| c % 2 == 0));
        let half = GrElement(diff.0.iter().map(|c| c / 2).collect());
        (a, self.teichmuller_lift(&half))
    }

    /// Frobenius `φ(a + 2b) = a^2 + 2b^2`.
    pub fn frobenius(&self, y: &GrElement) -> GrElement {
        let (a, b) = self.decompose(y);
        self.add(&self.mul(&a, &a), &self.double(&self.mul(&b, &b)))
    }

    /// Trace `GR(4, m) → Z_4`, the sum of the `m` Frobenius iterates.
    pub fn trace(&self, y: &GrElement) -> u8 {
        let mut acc = self.zero();
        let mut cur = y.clone();
        for _ in 0..self.m {
            acc = self.add(&acc, &cur);
            cur = self.frobenius(&cur);
        }
        debug_assert!(acc.0[1..].iter().all(|&c| c == 0), "trace left Z_4");
        acc.0[0]
    }
}

fn hensel_lift(binary_modulus: &[u32]) -> Vec<u8> {
    let deg = binary_modulus.len() - 1;
    let mut even = vec![0i32; deg + 1];
    let mut odd = vec![0i32; deg + 1];
    for (i, &c) in binary_modulus.iter().enumerate() {
        if i % 2 == 0 {
            even[i] = c as i32;
        } else {
            odd[i] = c as i32;
        }
    }
    let mut sq = vec![0i32; 2 * deg + 1];
    for i in 0..=deg {
        for j in 0..=deg {
            sq[i + j] += even[i] * even[j] - odd[i] * odd[j];
        }
    }
    let sign = if deg % 2 == 0 { 1 } else { -1 };
    (0..=deg)
        .map(|k| (sign * sq[2 * k]).rem_euclid(4) as u8)
        .collect()
}
