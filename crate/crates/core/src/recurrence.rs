//! Ground truth: `F_{n,k}` built by iterating the defining recurrence up
//! from the seed block (`n >= 1`) or down from it (`n <= 0`).

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{check_k, Result};
use crate::poly::IntPoly;

/// Memoized `F_{n,k}` for one fixed `k`.
///
/// Seeded with `F_1 = 1` and `F_0 = ... = F_{-(k-2)} = 0`; entries are filled
/// sequentially outward from the seed block on demand.
#[derive(Debug, Clone)]
pub struct SequenceCache {
    k: u32,
    /// `up[i] = F_{i+1}`
    up: Vec<IntPoly>,
    /// `down[i] = F_{-i}`
    down: Vec<IntPoly>,
}

impl SequenceCache {
    pub fn new(k: u32) -> Result<Self> {
        check_k(k)?;
        Ok(Self {
            k,
            up: vec![IntPoly::one()],
            down: vec![IntPoly::zero(); k as usize - 1],
        })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `F_{n,k}` for any integer `n`.
    pub fn get(&mut self, n: i64) -> &IntPoly {
        if n >= 1 {
            self.poly_up(n)
        } else {
            self.poly_down(n)
        }
    }

    /// `F_n = x^{k-1} F_{n-1} + x^{k-2} F_{n-2} + ... + F_{n-k}` for `n >= 1`.
    pub fn poly_up(&mut self, n: i64) -> &IntPoly {
        assert!(n >= 1, "poly_up needs n >= 1");
        let k = self.k as i64;
        let one = BigInt::one();
        while (self.up.len() as i64) < n {
            let m = self.up.len() as i64 + 1;
            let mut next = IntPoly::zero();
            for j in 1..=k {
                next.add_scaled_assign(self.cached(m - j), &one, (k - j) as u32);
            }
            self.up.push(next);
        }
        &self.up[n as usize - 1]
    }

    /// `F_n = F_{n+k} - sum_{j=1}^{k-1} x^j F_{n+j}` for `n <= 0`.
    pub fn poly_down(&mut self, n: i64) -> &IntPoly {
        assert!(n <= 0, "poly_down needs n <= 0");
        let k = self.k as i64;
        let minus_one = -BigInt::one();
        while (self.down.len() as i64) <= -n {
            let m = -(self.down.len() as i64);
            let mut next = self.cached(m + k).clone();
            for j in 1..k {
                next.add_scaled_assign(self.cached(m + j), &minus_one, j as u32);
            }
            self.down.push(next);
        }
        &self.down[(-n) as usize]
    }

    /// `F_{n,k}(1)`, which is the k-generalized Fibonacci number with index
    /// `n + k - 2`.
    pub fn number_at_one(&mut self, n: i64) -> BigInt {
        self.get(n).terms().map(|(_, c)| c).sum()
    }

    /// The k-generalized Fibonacci number `F_{m,k}` (initial values
    /// `F_0 = ... = F_{k-2} = 0`, `F_{k-1} = 1`).
    pub fn fib_number(&mut self, m: i64) -> BigInt {
        let k = self.k as i64;
        self.number_at_one(m - k + 2)
    }

    fn cached(&self, n: i64) -> &IntPoly {
        if n >= 1 {
            &self.up[n as usize - 1]
        } else {
            &self.down[(-n) as usize]
        }
    }
}

/// One-shot `F_{n,k}`.
pub fn poly(n: i64, k: u32) -> Result<IntPoly> {
    let mut cache = SequenceCache::new(k)?;
    Ok(cache.get(n).clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn upward_examples() {
        let mut c = SequenceCache::new(3).unwrap();
        assert_eq!(c.poly_up(3), &p("x+x^4"));
        assert_eq!(c.poly_up(10), &p("1+16x^3+45x^6+50x^9+28x^12+8x^15+x^18"));
        for k in 2..9 {
            assert_eq!(poly(2, k).unwrap(), IntPoly::monomial(1, k - 1));
        }
    }

    #[test]
    fn downward_examples() {
        assert_eq!(poly(-12, 4).unwrap(), p("-x^9-4x^5-3x"));
        assert!(poly(-10, 4).unwrap().is_zero());
        assert_eq!(poly(-9, 5).unwrap(), p("1+x^5"));
        assert_eq!(poly(-4, 3).unwrap(), IntPoly::zero());
        assert_eq!(poly(-3, 3).unwrap(), p("-x"));
    }

    #[test]
    fn numbers_at_one() {
        let mut c = SequenceCache::new(3).unwrap();
        assert_eq!(c.number_at_one(-17), BigInt::from(0));
        assert!(!c.get(-17).is_zero());
        assert_eq!(c.fib_number(-16), BigInt::from(0));
        assert_eq!(c.number_at_one(5), BigInt::from(7));
        let mut c2 = SequenceCache::new(2).unwrap();
        assert_eq!(c2.number_at_one(1), BigInt::from(1));
        // ordinary Fibonacci numbers
        assert_eq!(c2.fib_number(10), BigInt::from(55));
        assert_eq!(c2.fib_number(-10), BigInt::from(-55));
    }

    #[test]
    fn random_access_is_consistent() {
        let mut a = SequenceCache::new(4).unwrap();
        let mut b = SequenceCache::new(4).unwrap();
        let far = a.get(-40).clone();
        for n in (-40..=0).rev() {
            b.get(n);
        }
        assert_eq!(b.get(-40), &far);
    }
}
