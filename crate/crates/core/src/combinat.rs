//! Small combinatorial helpers shared by the closed-form modules.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient with the convention used throughout: zero whenever
/// `k < 0`, `n < 0` or `n < k`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `(-1)^e` as a small integer.
pub fn sign_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Mathematical modulus: result always in `[0, m)`.
pub fn modulo(a: i64, m: i64) -> i64 {
    a.rem_euclid(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
        assert_eq!(binomial(60, 30), "118264581564861424".parse::<BigInt>().unwrap());
    }

    #[test]
    fn modulo_is_nonnegative() {
        assert_eq!(modulo(-2, 5), 3);
        assert_eq!(modulo(7, 5), 2);
        assert_eq!(sign_pow(-3), -1);
    }
}
