use num_complex::Complex64;

use super::field::{Field, FqElement};
use super::AlgebraError;

/// `λ_a(x) = ζ_p^{Tr(a·x)}`.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct AdditiveCharacter {
    pub a: FqElement,
}

impl AdditiveCharacter {
    pub fn new(a: FqElement) -> Self {
        Self { a }
    }

    pub fn is_trivial(&self) -> bool {
        self.a.is_zero()
    }

    pub fn eval(&self, field: &Field, x: FqElement) -> Complex64 {
        field.additive_character(self.a, x)
    }

    /// Every additive character, indexed by `a` in canonical order.
    pub fn all(field: &Field) -> impl Iterator<Item = Self> + '_ {
        field.elements().map(Self::new)
    }
}

/// `χ_j(g^k) = ζ_{q-1}^{j·k}`; undefined at zero.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativeCharacter {
    pub j: u32,
}

impl MultiplicativeCharacter {
    pub fn new(j: u32) -> Self {
        Self { j }
    }

    pub fn is_trivial(&self, field: &Field) -> bool {
        self.j % (field.order() - 1) == 0
    }

    pub fn eval(&self, field: &Field, x: FqElement) -> Result<Complex64, AlgebraError> {
        field.multiplicative_character(self.j, x)
    }

    /// `j = 0, …, q-2`.
    pub fn all(field: &Field) -> impl Iterator<Item = Self> {
        (0..field.order() - 1).map(Self::new)
    }
}

/// Jacobi sum `Σ_{x ∈ F_q \ {0,1}} χ_j(x) χ_k(1-x)`.
pub fn jacobi_sum(field: &Field, j: u32, k: u32) -> Complex64 {
    let one = field.one();
    field
        .nonzero_elements()
        .filter(|&x| x != one)
        .map(|x| {
            let y = field.sub(one, x);
            field.multiplicative_character(j, x).unwrap()
                * field.multiplicative_character(k, y).unwrap()
        })
        .sum()
}
