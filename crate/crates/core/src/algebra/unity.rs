use num_complex::Complex64;
use std::f64::consts::TAU;

/// `exp(2πi·k/n)` with `k` reduced modulo `n` before the angle is formed.
///
/// Multiples of a quarter turn are returned exactly (±1, ±i) so that
/// Hadamard-type and Galois-ring vectors carry no rounding at all.
pub fn root_of_unity(k: i64, n: u64) -> Complex64 {
    assert!(n > 0, "root of unity of order zero");
    let n_i = n as i64;
    let k = k.rem_euclid(n_i) as u64;
    if (4 * k) % n == 0 {
        return match 4 * k / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let angle = TAU * (k as f64) / (n as f64);
    Complex64::new(angle.cos(), angle.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(root_of_unity(0, 5), Complex64::new(1.0, 0.0));
        assert_eq!(root_of_unity(1, 4), Complex64::new(0.0, 1.0));
        assert_eq!(root_of_unity(2, 4), Complex64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(-1, 4), Complex64::new(0.0, -1.0));
        assert_eq!(root_of_unity(3, 6), Complex64::new(-1.0, 0.0));
    }

    #[test]
    fn unit_modulus() {
        for n in 1..40u64 {
            for k in 0..n as i64 {
                assert!((root_of_unity(k, n).norm() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn power_closure() {
        let z = root_of_unity(1, 7);
        let mut acc = Complex64::new(1.0, 0.0);
        for k in 0..7 {
            assert!((acc - root_of_unity(k, 7)).norm() < 1e-14);
            acc *= z;
        }
    }
}
