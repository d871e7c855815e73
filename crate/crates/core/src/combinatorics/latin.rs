use serde::{Deserialize, Serialize};

use crate::algebra::{arith, field_for_order};

use super::CombinatoricsError;

/// A Latin square over the symbols `1..=order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatinSquare {
    order: usize,
    /// Row-major grid.
    grid: Vec<u32>,
}

impl LatinSquare {
    pub fn new(order: usize, grid: Vec<u32>) -> Result<Self, CombinatoricsError> {
        if order == 0 || grid.len() != order * order {
            return Err(CombinatoricsError::NotLatin);
        }
        let sq = LatinSquare { order, grid };
        if !sq.rows_and_columns_are_permutations() {
            return Err(CombinatoricsError::NotLatin);
        }
        Ok(sq)
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self, CombinatoricsError> {
        let order = rows.len();
        if rows.iter().any(|r| r.len() != order) {
            return Err(CombinatoricsError::NotLatin);
        }
        Self::new(order, rows.concat())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        self.grid[row * self.order + col]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.grid.chunks(self.order)
    }

    fn rows_and_columns_are_permutations(&self) -> bool {
        let n = self.order;
        let line_ok = |cell: &dyn Fn(usize) -> u32| {
            let mut seen = vec![false; n + 1];
            (0..n).all(|k| {
                let v = cell(k) as usize;
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
                true
            })
        };
        (0..n).all(|r| line_ok(&|c| self.get(r, c))) && (0..n).all(|c| line_ok(&|r| self.get(r, c)))
    }
}

/// True iff superimposing the two squares yields every ordered symbol pair.
pub fn mols_check(a: &LatinSquare, b: &LatinSquare) -> Result<bool, CombinatoricsError> {
    if a.order != b.order {
        return Err(CombinatoricsError::OrderMismatch);
    }
    let d = a.order;
    let mut seen = vec![false; d * d];
    for (&x, &y) in a.grid.iter().zip(&b.grid) {
        let slot = (x as usize - 1) * d + (y as usize - 1);
        if seen[slot] {
            return Ok(false);
        }
        seen[slot] = true;
    }
    Ok(true)
}

/// All-pairs orthogonality of a family.
pub fn is_mutually_orthogonal(family: &[LatinSquare]) -> bool {
    family.iter().enumerate().all(|(i, a)| {
        family[i + 1..]
            .iter()
            .all(|b| mols_check(a, b).unwrap_or(false))
    })
}

/// The `q - 1` squares `L_a(i, j) = a·i + j` over `F_q`, `a ≠ 0`.
pub fn mols_prime_power(q: u64) -> Result<Vec<LatinSquare>, CombinatoricsError> {
    let field = field_for_order(q).map_err(|_| CombinatoricsError::NotPrimePower(q))?;
    let d = q as usize;
    let squares = field
        .nonzero_elements()
        .map(|a| {
            let grid = (0..d)
                .flat_map(|i| {
                    let ai = field.mul(a, field.element(i as u32));
                    let field = &field;
                    (0..d).map(move |j| field.add(ai, field.element(j as u32)).index() + 1)
                })
                .collect();
            LatinSquare::new(d, grid).expect("field squares are Latin")
        })
        .collect();
    Ok(squares)
}

/// MacNeish product of two MOLS families; the result has
/// `min(|family_a|, |family_b|)` members of order `d_a·d_b`.
pub fn mols_macneish(
    family_a: &[LatinSquare],
    family_b: &[LatinSquare],
) -> Result<Vec<LatinSquare>, CombinatoricsError> {
    if family_a.is_empty() || family_b.is_empty() {
        return Err(CombinatoricsError::EmptyFamily);
    }
    if !is_mutually_orthogonal(family_a) || !is_mutually_orthogonal(family_b) {
        return Err(CombinatoricsError::NotMutuallyOrthogonal);
    }
    let (da, db) = (family_a[0].order, family_b[0].order);
    if family_a.iter().any(|s| s.order != da) || family_b.iter().any(|s| s.order != db) {
        return Err(CombinatoricsError::OrderMismatch);
    }
    let d = da * db;
    let product = family_a
        .iter()
        .zip(family_b)
        .map(|(la, lb)| {
            let mut grid = vec![0u32; d * d];
            for i1 in 0..da {
                for i2 in 0..db {
                    for j1 in 0..da {
                        for j2 in 0..db {
                            let (e1, e2) = (la.get(i1, j1), lb.get(i2, j2));
                            let row = i1 * db + i2;
                            let col = j1 * db + j2;
                            grid[row * d + col] = (e1 - 1) * db as u32 + e2;
                        }
                    }
                }
            }
            LatinSquare::new(d, grid).expect("product of Latin squares is Latin")
        })
        .collect();
    Ok(product)
}

pub const MAX_MOLS_ORDER: u64 = 64;

/// MOLS of order `d` from the MacNeish product of the prime-power families
/// of its factors: `min_i (p_i^{e_i} - 1)` squares.
pub fn mols_for_order(d: u64) -> Result<Vec<LatinSquare>, CombinatoricsError> {
    if d > MAX_MOLS_ORDER {
        return Err(CombinatoricsError::TooLarge { value: d, max: MAX_MOLS_ORDER });
    }
    if d < 2 {
        return Err(CombinatoricsError::EmptyFamily);
    }
    let mut family: Option<Vec<LatinSquare>> = None;
    for (p, e) in arith::factorize(d) {
        let next = mols_prime_power(p.pow(e))?;
        family = Some(match family {
            None => next,
            Some(prev) => mols_macneish(&prev, &next)?,
        });
    }
    Ok(family.expect("d >= 2 has a prime factor"))
}

/// MacNeish lower bound on the number of MOLS of order `d ≥ 2`, with the
/// known exceptions for `d ≡ 2 (mod 4)`.
pub fn mols_lower_bound(d: u64) -> u64 {
    assert!(d >= 2, "MOLS bound needs d >= 2");
    let macneish = arith::factorize(d)
        .into_iter()
        .map(|(p, e)| p.pow(e) - 1)
        .min()
        .expect("d >= 2 has a prime factor");
    match d {
        2 | 6 => 1,
        _ if d % 4 == 2 => macneish.max(2),
        _ => macneish,
    }
}
