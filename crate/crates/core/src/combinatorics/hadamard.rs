use serde::{Deserialize, Serialize};

use crate::algebra::arith::{is_prime, is_square, isqrt, legendre};

use super::CombinatoricsError;

pub const MAX_SYLVESTER_EXPONENT: u32 = 14;
pub const MAX_PALEY_PRIME: u64 = 4095;

/// A `±1` matrix with `H·Hᵀ = d·I`, checked in integer arithmetic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HadamardMatrix {
    order: usize,
    entries: Vec<i8>,
}

impl HadamardMatrix {
    pub fn new(order: usize, entries: Vec<i8>) -> Result<Self, CombinatoricsError> {
        if order == 0 || entries.len() != order * order || !is_hadamard(order, &entries) {
            return Err(CombinatoricsError::NotHadamard);
        }
        Ok(Self { order, entries })
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self, CombinatoricsError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(CombinatoricsError::NotHadamard);
        }
        Self::new(order, rows.concat())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> i8 {
        self.entries[row * self.order + col]
    }

    pub fn row(&self, row: usize) -> &[i8] {
        &self.entries[row * self.order..(row + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i8]> {
        self.entries.chunks(self.order)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &HadamardMatrix) -> HadamardMatrix {
        let (a, b) = (self.order, other.order);
        let d = a * b;
        let mut entries = vec![0i8; d * d];
        for i1 in 0..a {
            for j1 in 0..a {
                let s = self.get(i1, j1);
                for i2 in 0..b {
                    for j2 in 0..b {
                        entries[(i1 * b + i2) * d + j1 * b + j2] = s * other.get(i2, j2);
                    }
                }
            }
        }
        HadamardMatrix { order: d, entries }
    }

    /// Permutes rows; `perm[i]` is the source row of output row `i`.
    pub fn permute_rows(&self, perm: &[usize]) -> HadamardMatrix {
        assert_eq!(perm.len(), self.order);
        let entries = perm.iter().flat_map(|&r| self.row(r).iter().copied()).collect();
        HadamardMatrix { order: self.order, entries }
    }
}

/// `H·Hᵀ = d·I` with every entry in `{±1}`.
pub fn is_hadamard(order: usize, entries: &[i8]) -> bool {
    if entries.iter().any(|&e| e != 1 && e != -1) {
        return false;
    }
    let row = |i: usize| &entries[i * order..(i + 1) * order];
    (0..order).all(|i| {
        (i..order).all(|j| {
            let dot: i64 = row(i).iter().zip(row(j)).map(|(&a, &b)| (a * b) as i64).sum();
            dot == if i == j { order as i64 } else { 0 }
        })
    })
}

/// `k`-fold tensor power of `H_2 = [[1, 1], [1, -1]]`.
pub fn hadamard_sylvester(k: u32) -> Result<HadamardMatrix, CombinatoricsError> {
    if k > MAX_SYLVESTER_EXPONENT {
        return Err(CombinatoricsError::TooLarge { value: k as u64, max: MAX_SYLVESTER_EXPONENT as u64 });
    }
    let h2 = HadamardMatrix { order: 2, entries: vec![1, 1, 1, -1] };
    let mut h = HadamardMatrix { order: 1, entries: vec![1] };
    for _ in 0..k {
        h = h.kron(&h2);
    }
    Ok(h)
}

/// Paley type-I matrix of order `q + 1` for a prime `q ≡ 3 (mod 4)`.
pub fn hadamard_paley(q: u64) -> Result<HadamardMatrix, CombinatoricsError> {
    if !is_prime(q) || q % 4 != 3 || q > MAX_PALEY_PRIME {
        return Err(CombinatoricsError::BadOrder(q));
    }
    let n = q as usize + 1;
    let mut entries = vec![0i8; n * n];
    for i in 0..n {
        for j in 0..n {
            let s = match (i, j) {
                (0, 0) => 0,
                (0, _) => 1,
                (_, 0) => -1,
                _ => legendre((j as u64 + q - i as u64) % q, q),
            };
            entries[i * n + j] = s + if i == j { 1 } else { 0 };
        }
    }
    HadamardMatrix::new(n, entries)
}

/// Criterion for a real MUB `{B*, H_1/√d, …, H_{n-1}/√d}`: every
/// `H_i·H_jᵀ/√d` (`i < j`) must itself be a Hadamard matrix.
pub fn real_mub_hadamard_criterion(matrices: &[HadamardMatrix]) -> Result<bool, CombinatoricsError> {
    let Some(first) = matrices.first() else {
        return Err(CombinatoricsError::EmptyFamily);
    };
    let d = first.order;
    if matrices.iter().any(|h| h.order != d) {
        return Err(CombinatoricsError::OrderMismatch);
    }
    if matrices.len() == 1 {
        return Ok(true);
    }
    if !is_square(d as u64) {
        return Ok(false);
    }
    let s = isqrt(d as u64) as i64;
    for (i, hi) in matrices.iter().enumerate() {
        for hj in &matrices[i + 1..] {
            let mut scaled = Vec::with_capacity(d * d);
            for r in 0..d {
                for c in 0..d {
                    let dot: i64 = hi.row(r).iter().zip(hj.row(c)).map(|(&a, &b)| (a * b) as i64).sum();
                    if dot != s && dot != -s {
                        return Ok(false);
                    }
                    scaled.push((dot / s) as i8);
                }
            }
            if !is_hadamard(d, &scaled) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sylvester_small_orders() {
        assert_eq!(hadamard_sylvester(0).unwrap().rows().next().unwrap(), &[1]);
        let h2 = hadamard_sylvester(1).unwrap();
        assert_eq!(h2, HadamardMatrix::from_rows(&[vec![1, 1], vec![1, -1]]).unwrap());
        for k in 0..=6 {
            let h = hadamard_sylvester(k).unwrap();
            assert_eq!(h.order(), 1 << k);
            assert!(is_hadamard(h.order(), &h.entries));
        }
        assert!(matches!(hadamard_sylvester(15), Err(CombinatoricsError::TooLarge { .. })));
    }

    #[test]
    fn paley_orders() {
        let h4 = hadamard_paley(3).unwrap();
        assert_eq!(h4.order(), 4);
        let h12 = hadamard_paley(11).unwrap();
        assert_eq!(h12.order(), 12);
        for q in [7, 19, 23, 43] {
            assert_eq!(hadamard_paley(q).unwrap().order(), q as usize + 1);
        }
        assert_eq!(hadamard_paley(5), Err(CombinatoricsError::BadOrder(5)));
        assert_eq!(hadamard_paley(15), Err(CombinatoricsError::BadOrder(15)));
    }

    #[test]
    fn rejects_non_hadamard() {
        assert_eq!(
            HadamardMatrix::from_rows(&[vec![1, 1], vec![1, 1]]),
            Err(CombinatoricsError::NotHadamard)
        );
        assert_eq!(
            HadamardMatrix::from_rows(&[vec![1, 0], vec![0, 1]]),
            Err(CombinatoricsError::NotHadamard)
        );
    }

    #[test]
    fn criterion_basic_cases() {
        let h4 = hadamard_sylvester(2).unwrap();
        assert!(real_mub_hadamard_criterion(std::slice::from_ref(&h4)).unwrap());
        // H·Hᵀ/2 = 2I has entries 0 and 2
        assert!(!real_mub_hadamard_criterion(&[h4.clone(), h4.clone()]).unwrap());
        let h2 = hadamard_sylvester(1).unwrap();
        assert_eq!(real_mub_hadamard_criterion(&[h4, h2]), Err(CombinatoricsError::OrderMismatch));
        assert_eq!(real_mub_hadamard_criterion(&[]), Err(CombinatoricsError::EmptyFamily));
        // order 12 is not a square
        let h12 = hadamard_paley(11).unwrap();
        assert!(!real_mub_hadamard_criterion(&[h12.clone(), h12]).unwrap());
    }

    #[test]
    fn row_permuted_sylvester_never_qualifies() {
        // H·(PH)ᵀ = d·Pᵀ, so the scaled product has entries 0 and 4.
        let h16 = hadamard_sylvester(4).unwrap();
        let perm: Vec<usize> = (0..16).map(|i| (i * 5 + 3) % 16).collect();
        let permuted = h16.permute_rows(&perm);
        assert!(!real_mub_hadamard_criterion(&[h16, permuted]).unwrap());
    }
}
