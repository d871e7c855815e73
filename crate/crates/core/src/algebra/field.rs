//! Finite fields `F_{p^m}` with table-driven arithmetic.
//!
//! Elements are identified with their canonical index `Σ c_i p^i`, where
//! `(c_0, …, c_{m-1})` are the coefficients of the residue polynomial modulo
//! the field's defining polynomial. Every construction in this crate indexes
//! vector coordinates by that order, so it is part of the output format.

use num_complex::Complex64;
use serde::Serialize;

use super::arith::{factorize, is_prime};
use super::unity::root_of_unity;
use super::AlgebraError;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// An element of a [`Field`], stored as its canonical index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FqElement(pub(crate) u32);

impl FqElement {
    pub fn index(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, coefficients low-to-high, length `m + 1`.
    modulus: Vec<u32>,
    generator: FqElement,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u32>,
}

impl Field {
    /// Builds `F_{p^m}` with the lexicographically smallest monic irreducible
    /// modulus and the smallest primitive element.
    pub fn new(p: u64, m: u32) -> Result<Self, AlgebraError> {
        if !is_prime(p) {
            return Err(AlgebraError::NotPrime(p));
        }
        if m == 0 {
            return Err(AlgebraError::TooLarge { what: "extension degree", value: 0, max: 0 });
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_ORDER)
            .ok_or(AlgebraError::TooLarge {
                what: "field order",
                value: p.saturating_pow(m),
                max: MAX_FIELD_ORDER,
            })?;
        let (p, q) = (p as u32, q as u32);
        let modulus = smallest_irreducible(p, m)
            .expect("an irreducible polynomial of every degree exists over F_p");

        let mut field = Field {
            p,
            m,
            q,
            modulus,
            generator: FqElement(0),
            exp: Vec::new(),
            log: Vec::new(),
            trace: Vec::new(),
        };
        field.generator = field
            .find_generator()
            .expect("the multiplicative group of a finite field is cyclic");
        field.build_tables();
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> FqElement {
        self.generator
    }

    pub fn zero(&self) -> FqElement {
        FqElement(0)
    }

    pub fn one(&self) -> FqElement {
        FqElement(1)
    }

    /// Element with canonical index `idx`.
    pub fn element(&self, idx: u32) -> FqElement {
        assert!(idx < self.q, "index {idx} outside F_{}", self.q);
        FqElement(idx)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> {
        (0..self.q).map(FqElement)
    }

    /// Nonzero elements in canonical order.
    pub fn nonzero_elements(&self) -> impl Iterator<Item = FqElement> {
        (1..self.q).map(FqElement)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> FqElement {
        FqElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn coefficients(&self, x: FqElement) -> Vec<u32> {
        decode(x.0, self.p, self.m as usize)
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> FqElement {
        assert!(coeffs.len() <= self.m as usize);
        FqElement(encode(coeffs, self.p))
    }

    pub fn add(&self, x: FqElement, y: FqElement) -> FqElement {
        if self.p == 2 {
            return FqElement(x.0 ^ y.0);
        }
        let (p, mut a, mut b) = (self.p, x.0, y.0);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        FqElement(out)
    }

    pub fn neg(&self, x: FqElement) -> FqElement {
        if self.p == 2 {
            return x;
        }
        let (p, mut a) = (self.p, x.0);
        let (mut out, mut place) = (0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        FqElement(out)
    }

    pub fn sub(&self, x: FqElement, y: FqElement) -> FqElement {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: FqElement, y: FqElement) -> FqElement {
        if x.0 == 0 || y.0 == 0 {
            return FqElement(0);
        }
        let n = self.q - 1;
        let k = (self.log[x.0 as usize] + self.log[y.0 as usize]) % n;
        FqElement(self.exp[k as usize])
    }

    pub fn pow(&self, x: FqElement, e: u64) -> FqElement {
        if e == 0 {
            return FqElement(1);
        }
        if x.0 == 0 {
            return FqElement(0);
        }
        let n = (self.q - 1) as u64;
        let k = (self.log[x.0 as usize] as u64 * (e % n)) % n;
        FqElement(self.exp[k as usize])
    }

    pub fn inv(&self, x: FqElement) -> Result<FqElement, AlgebraError> {
        if x.0 == 0 {
            return Err(AlgebraError::ZeroArgument);
        }
        let n = self.q - 1;
        Ok(FqElement(self.exp[((n - self.log[x.0 as usize]) % n) as usize]))
    }

    /// Discrete logarithm to base [`Field::generator`].
    pub fn dlog(&self, x: FqElement) -> Result<u32, AlgebraError> {
        if x.0 == 0 {
            return Err(AlgebraError::ZeroArgument);
        }
        Ok(self.log[x.0 as usize])
    }

    /// `generator^k`.
    pub fn exp(&self, k: u64) -> FqElement {
        FqElement(self.exp[(k % (self.q as u64 - 1)) as usize])
    }

    /// Absolute trace `F_q → F_p`, returned as an integer in `0..p`.
    pub fn trace(&self, x: FqElement) -> u32 {
        self.trace[x.0 as usize]
    }

    /// `λ_a(x) = ζ_p^{Tr(a·x)}`.
    pub fn additive_character(&self, a: FqElement, x: FqElement) -> Complex64 {
        root_of_unity(self.trace(self.mul(a, x)) as i64, self.p as u64)
    }

    /// `χ_j(x) = ζ_{q-1}^{j·dlog(x)}` for `x ≠ 0`.
    pub fn multiplicative_character(&self, j: u32, x: FqElement) -> Result<Complex64, AlgebraError> {
        let n = (self.q - 1) as u64;
        let k = (j as u64 % n) * self.dlog(x)? as u64 % n;
        Ok(root_of_unity(k as i64, n))
    }

    /// `G(χ_j, λ_a) = Σ_{x ∈ F_q*} χ_j(x) λ_a(x)` for nontrivial characters.
    pub fn gauss_sum(&self, j: u32, a: FqElement) -> Result<Complex64, AlgebraError> {
        if j % (self.q - 1) == 0 || a.is_zero() {
            return Err(AlgebraError::TrivialCharacter);
        }
        let mut acc = Complex64::new(0.0, 0.0);
        for x in self.nonzero_elements() {
            acc += self.multiplicative_character(j, x)? * self.additive_character(a, x);
        }
        Ok(acc)
    }

    /// Multiplication straight from the polynomial representation; used
    /// before the log tables exist and as an independent check on them.
    pub(crate) fn poly_mul(&self, x: FqElement, y: FqElement) -> FqElement {
        let a = self.coefficients(x);
        let b = self.coefficients(y);
        FqElement(encode(&mulmod(&a, &b, &self.modulus, self.p), self.p))
    }

    fn poly_pow(&self, x: FqElement, mut e: u64) -> FqElement {
        let mut acc = FqElement(1);
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.poly_mul(acc, base);
            }
            base = self.poly_mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn find_generator(&self) -> Option<FqElement> {
        let n = (self.q - 1) as u64;
        let prime_factors: Vec<u64> = factorize(n).into_iter().map(|(r, _)| r).collect();
        (1..self.q).map(FqElement).find(|&g| {
            prime_factors.iter().all(|&r| self.poly_pow(g, n / r) != FqElement(1))
        })
    }

    fn build_tables(&mut self) {
        let q = self.q as usize;
        let n = q - 1;
        let mut exp = vec![0u32; n];
        let mut log = vec![u32::MAX; q];
        let mut cur = FqElement(1);
        for (k, slot) in exp.iter_mut().enumerate() {
            *slot = cur.0;
            assert_eq!(log[cur.0 as usize], u32::MAX, "generator order below q-1");
            log[cur.0 as usize] = k as u32;
            cur = self.poly_mul(cur, self.generator);
        }
        assert_eq!(cur, FqElement(1), "generator order is not q-1");
        self.exp = exp;
        self.log = log;

        let p = self.p as u64;
        let mut trace = vec![0u32; q];
        #[allow(clippy::needless_range_loop)]
        for x in 1..q {
            let mut acc = FqElement(0);
            let mut frob = 1u64;
            for _ in 0..self.m {
                acc = self.add(acc, self.pow(FqElement(x as u32), frob));
                frob *= p;
            }
            assert!(acc.0 < self.p, "trace left the prime subfield");
            trace[x] = acc.0;
        }
        self.trace = trace;
    }
}

fn decode(mut idx: u32, p: u32, m: usize) -> Vec<u32> {
    let mut out = vec![0; m];
    for c in out.iter_mut() {
        *c = idx % p;
        idx /= p;
    }
    out
}

fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0, |acc, &c| acc * p + c % p)
}

fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Remainder of `a` modulo the monic polynomial `f` over `F_p`.
fn poly_rem(a: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let df = f.len() - 1;
    while r.len() > df {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - df;
        for (i, &c) in f.iter().enumerate() {
            let t = (lead as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

fn mulmod(a: &[u32], b: &[u32], f: &[u32], p: u32) -> Vec<u32> {
    let m = f.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
    let mut r = poly_rem(&prod, f, p);
    r.resize(m, 0);
    r
}

/// Monic polynomials of degree `k`, coefficients low-to-high.
fn monic_of_degree(p: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(k as u32);
    (0..count).map(move |n| {
        let mut c = decode(n as u32, p, k);
        c.push(1);
        c
    })
}

/// Trial division against every monic polynomial of degree `1..=deg/2`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    (1..=deg / 2).all(|k| monic_of_degree(p, k).all(|g| !poly_rem(f, &g, p).is_empty()))
}

/// Smallest monic irreducible of degree `m` when the coefficient tuple
/// `(c_0, …, c_{m-1})` is compared lexicographically, `c_0` first.
fn smallest_irreducible(p: u32, m: u32) -> Option<Vec<u32>> {
    let m = m as usize;
    let count = (p as u64).pow(m as u32);
    (0..count).find_map(|n| {
        // most significant digit of n is c_0
        let mut c: Vec<u32> = decode(n as u32, p, m).into_iter().rev().collect();
        c.push(1);
        is_irreducible(&c, p).then_some(c)
    })
}
