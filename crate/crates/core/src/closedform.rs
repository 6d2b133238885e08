//! Closed-form sums for `n <= 0`, the generating-function expansion, and the
//! elementary symmetric polynomials of the roots of `P_{n,k}(xi)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::{binomial, sign_pow};
use crate::error::{check_k, Error, Result};
use crate::index::profile;
use crate::poly::IntPoly;
use crate::triangle::{coeff_neg, coeff_pos};

/// `F_{n,k}` for `n <= 0` as the sum over `j_1 + 2j_2 + ... + k j_k = |n|+1-k`
/// of `(-1)^{J-j_k} J!/(j_1!...j_k!) x^{|n|+1-k(1+j_k)}`, `J = sum j_i`.
///
/// Terms are grouped by `j_k` and `J' = J - j_k`: the inner sum over
/// `j_1..j_{k-1}` is `binom(J, j_k)` times the coefficient of `t^rest` in
/// `(t + ... + t^{k-1})^{J'}`.
pub fn multinomial_neg(n: i64, k: u32) -> Result<IntPoly> {
    check_k(k)?;
    assert!(n <= 0, "multinomial_neg needs n <= 0");
    let total = -n + 1 - k as i64;
    if total < 0 {
        return Ok(IntPoly::zero());
    }
    let t = total as usize;
    let kk = k as usize;
    // w[a][b]: coefficient of t^b in (t + ... + t^{k-1})^a
    let mut w = vec![vec![BigInt::zero(); t + 1]; t + 1];
    w[0][0] = BigInt::one();
    for a in 1..=t {
        for b in a..=t {
            let mut acc = BigInt::zero();
            for i in 1..kk.min(b + 1) {
                acc += &w[a - 1][b - i];
            }
            w[a][b] = acc;
        }
    }
    let mut out = IntPoly::zero();
    for jk in 0..=t / kk {
        let rest = t - kk * jk;
        let mut coeff = BigInt::zero();
        for (jp, row) in w.iter().enumerate().take(rest + 1) {
            if row[rest].is_zero() {
                continue;
            }
            let term = binomial((jp + jk) as i64, jk as i64) * &row[rest];
            if jp % 2 == 0 {
                coeff += term;
            } else {
                coeff -= term;
            }
        }
        out.add_scaled_assign(&IntPoly::one(), &coeff, rest as u32);
    }
    Ok(out)
}

/// [`multinomial_neg`] by enumerating every `(j_1, ..., j_k)` one at a
/// time. Exponential; for small cross-checks.
pub fn multinomial_neg_enumerated(n: i64, k: u32) -> Result<IntPoly> {
    check_k(k)?;
    assert!(n <= 0, "multinomial_neg needs n <= 0");
    let total = -n + 1 - k as i64;
    if total < 0 {
        return Ok(IntPoly::zero());
    }
    let total = total as u64;
    let mut fact = vec![BigInt::one()];
    for i in 1..=total as usize {
        let next = &fact[i - 1] * i;
        fact.push(next);
    }
    let mut out = IntPoly::zero();
    let kk = k as u64;
    for jk in 0..=total / kk {
        let rest = total - kk * jk;
        let mut coeff = BigInt::zero();
        // parts 1..k-1 fill `rest`; carry J and the denominator product
        let mut stack: Vec<(u64, u64, u64, BigInt)> = vec![(kk - 1, rest, jk, fact[jk as usize].clone())];
        while let Some((part, left, big_j, denom)) = stack.pop() {
            if part == 0 {
                if left == 0 {
                    let term = &fact[big_j as usize] / denom;
                    if (big_j - jk) % 2 == 0 {
                        coeff += term;
                    } else {
                        coeff -= term;
                    }
                }
                continue;
            }
            if part == 1 {
                // j_1 is forced
                let c = left;
                stack.push((0, 0, big_j + c, denom * &fact[c as usize]));
                continue;
            }
            for c in 0..=left / part {
                stack.push((part - 1, left - c * part, big_j + c, &denom * &fact[c as usize]));
            }
        }
        let exp = total - kk * jk;
        out.add_scaled_assign(&IntPoly::one(), &coeff, exp as u32);
    }
    Ok(out)
}

/// Coefficients of `w^0 ..= w^order` in
/// `w^{k-1}(1-xw) / (1 - (1+x^k-xw) w^k)`; the coefficient of `w^{|n|}` is
/// `F_{n,k}` for `n <= 0`.
pub fn genfun_series_neg(k: u32, order: usize) -> Result<Vec<IntPoly>> {
    check_k(k)?;
    let k = k as usize;
    let len = order + 1;
    let a = &IntPoly::one() + &IntPoly::monomial(1, k as u32);
    let minus_x = IntPoly::monomial(-1, 1);
    // sum_s (B w^k)^s with B = a - x w, truncated
    let mut sum = vec![IntPoly::zero(); len];
    let mut power = vec![IntPoly::zero(); len];
    power[0] = IntPoly::one();
    let mut shift = 0;
    while shift + k - 1 < len {
        for (i, c) in power.iter().enumerate() {
            if shift + i < len && !c.is_zero() {
                sum[shift + i] = &sum[shift + i] + c;
            }
        }
        let mut next = vec![IntPoly::zero(); len];
        for (i, c) in power.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            next[i] = &next[i] + &(c * &a);
            if i + 1 < len {
                next[i + 1] = &next[i + 1] + &(c * &minus_x);
            }
        }
        power = next;
        shift += k;
    }
    let mut out = vec![IntPoly::zero(); len];
    for (i, c) in sum.iter().enumerate() {
        if i + k - 1 < len {
            out[i + k - 1] = &out[i + k - 1] + c;
        }
        if i + k < len {
            out[i + k] = &out[i + k] + &(c * &minus_x);
        }
    }
    Ok(out)
}

/// Elementary symmetric polynomials `sigma_1..sigma_N` of the roots of
/// `P_{n,k}(xi)`, `N = floor(d_{n,k} / k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricSpec {
    pub n: i64,
    pub k: u32,
    pub count: u64,
    pub sigma: Vec<BigRational>,
}

impl SymmetricSpec {
    /// Sum of the roots, `sigma_1`; zero when `N = 0`.
    pub fn sum(&self) -> BigRational {
        self.sigma.first().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Product of the roots, `sigma_N`; one when `N = 0`.
    pub fn product(&self) -> BigRational {
        self.sigma.last().cloned().unwrap_or_else(BigRational::one)
    }
}

fn rat(v: BigInt) -> BigRational {
    BigRational::from_integer(v)
}

/// `sigma_h = (-1)^h C_k(n-h-1, h)` for `n >= 1`.
pub fn sigma_pos(n: i64, k: u32) -> Result<SymmetricSpec> {
    let p = profile(n, k)?;
    if n < 1 {
        return Err(Error::IndexOutOfRange { n, lo: 1, hi: i64::MAX });
    }
    let count = p.xi_degree().expect("n >= 1 never vanishes");
    let sigma = (1..=count as i64)
        .map(|h| rat(sign_pow(h) * coeff_pos(k, (n - h - 1) as u64, h as u64)))
        .collect();
    Ok(SymmetricSpec { n, k, count, sigma })
}

/// `sigma_h` for `n <= 0`: `(-1)^h C_k(-(h+1), |n|+1-k(h+1))` when `r = 0`,
/// otherwise `(-1)^{h+r} C_k(-(h+r), |n|+1-k(h+r)) / binom(q-1, r-1)`.
pub fn sigma_neg(n: i64, k: u32) -> Result<SymmetricSpec> {
    let p = profile(n, k)?;
    if n > 0 {
        return Err(Error::IndexOutOfRange { n, lo: i64::MIN, hi: 0 });
    }
    if p.vanishes {
        return Err(Error::VanishingIndex { n, k });
    }
    let count = p.xi_degree().expect("nonvanishing");
    let (q, r, kk, m) = (p.q as i64, p.r as i64, k as i64, -n + 1);
    let sigma = (1..=count as i64)
        .map(|h| {
            if r == 0 {
                rat(sign_pow(h) * coeff_neg(k, -(h + 1), (m - kk * (h + 1)) as u64))
            } else {
                let num = sign_pow(h + r) * coeff_neg(k, -(h + r), (m - kk * (h + r)) as u64);
                BigRational::new(num, binomial(q - 1, r - 1))
            }
        })
        .collect();
    Ok(SymmetricSpec { n, k, count, sigma })
}

/// Dispatches on the sign of `n`.
pub fn sigma(n: i64, k: u32) -> Result<SymmetricSpec> {
    if n >= 1 {
        sigma_pos(n, k)
    } else {
        sigma_neg(n, k)
    }
}

/// Closed form for the sum of the roots of `P_{n,k}`; zero when `N = 0`.
pub fn root_sum(n: i64, k: u32) -> Result<BigRational> {
    let p = profile(n, k)?;
    if p.vanishes {
        return Err(Error::VanishingIndex { n, k });
    }
    if p.xi_degree() == Some(0) {
        return Ok(BigRational::zero());
    }
    let (q, r) = (p.q as i64, p.r as i64);
    Ok(if n > 0 {
        rat(BigInt::from(-(n - 2)))
    } else if r == 0 && k == 2 {
        rat(BigInt::from(-(2 * q - 3)))
    } else if r == 0 {
        rat(BigInt::from(-(q - 1)))
    } else {
        BigRational::new(BigInt::from(-(r + 1) * (q - r)), BigInt::from(r))
    })
}

/// Closed form for the product of the roots of `P_{n,k}`; one when `N = 0`.
pub fn root_product(n: i64, k: u32) -> Result<BigRational> {
    let p = profile(n, k)?;
    if p.vanishes {
        return Err(Error::VanishingIndex { n, k });
    }
    let big_n = p.xi_degree().unwrap();
    if big_n == 0 {
        return Ok(BigRational::one());
    }
    let s = BigInt::from(sign_pow(big_n as i64));
    let (q, r) = (p.q as i64, p.r as i64);
    Ok(if n > 0 {
        rat(s * binomial(q + r, r))
    } else if r == 0 {
        rat(s)
    } else {
        BigRational::new(s * q, BigInt::from(r))
    })
}

/// `P_{n,k}(xi)` from the exact `F_{n,k}`: strip `x^r` and substitute
/// `xi = x^k`. `None` if some exponent is not `r mod k`.
pub fn xi_poly(f: &IntPoly, r: u32, k: u32) -> Option<IntPoly> {
    f.compress_stride(r, k)
}

/// Vieta ratios `(-1)^h c_{N-h} / c_N` read straight off a polynomial.
pub fn vieta_sigma(p: &IntPoly) -> Vec<BigRational> {
    let Some(big_n) = p.degree() else {
        return Vec::new();
    };
    let lead = p.coeff(big_n);
    (1..=big_n)
        .map(|h| BigRational::new(sign_pow(h as i64) * p.coeff(big_n - h), lead.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::SequenceCache;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial_neg(-8, 3).unwrap(), p("1+2x^3+x^6"));
        assert!(multinomial_neg(-4, 3).unwrap().is_zero());
        assert_eq!(multinomial_neg(-4, 5).unwrap(), IntPoly::one());
        for k in 2..=5 {
            let mut c = SequenceCache::new(k).unwrap();
            for n in -40..=0 {
                assert_eq!(&multinomial_neg(n, k).unwrap(), c.get(n), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn grouped_and_enumerated_sums_agree() {
        for k in 2..=6 {
            for n in -45..=0 {
                assert_eq!(multinomial_neg(n, k).unwrap(), multinomial_neg_enumerated(n, k).unwrap(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn genfun_examples() {
        let s3 = genfun_series_neg(3, 30).unwrap();
        assert_eq!(s3[5], p("1+x^3"));
        for k in 2..8 {
            assert_eq!(genfun_series_neg(k, 12).unwrap()[k as usize - 1], IntPoly::one());
        }
        let s4 = genfun_series_neg(4, 10).unwrap();
        assert!(s4[5].is_zero() && s4[6].is_zero());
        let mut c = SequenceCache::new(3).unwrap();
        for (i, f) in s3.iter().enumerate() {
            assert_eq!(f, c.get(-(i as i64)));
        }
    }

    #[test]
    fn sums_and_products() {
        assert_eq!(root_sum(10, 3).unwrap(), q(-8, 1));
        assert_eq!(root_product(10, 3).unwrap(), q(1, 1));
        assert_eq!(root_sum(3, 3).unwrap(), q(-1, 1));
        assert_eq!(root_sum(-8, 3).unwrap(), q(-2, 1));
        assert_eq!(root_sum(-7, 2).unwrap(), q(-5, 1));
        assert_eq!(root_sum(-12, 4).unwrap(), q(-4, 1));
        assert_eq!(root_product(-12, 4).unwrap(), q(3, 1));
        assert_eq!(sigma(-12, 4).unwrap().sum(), q(-4, 1));
        assert_eq!(root_sum(-10, 4), Err(Error::VanishingIndex { n: -10, k: 4 }));
    }

    #[test]
    fn sigma_matches_vieta() {
        for k in 2..=5u32 {
            let mut c = SequenceCache::new(k).unwrap();
            for n in -60..=60i64 {
                let pr = profile(n, k).unwrap();
                if pr.vanishes {
                    continue;
                }
                let xi = xi_poly(c.get(n), pr.r, k).unwrap();
                let spec = sigma(n, k).unwrap();
                assert_eq!(spec.count as u32, xi.degree().unwrap());
                assert_eq!(spec.sigma, vieta_sigma(&xi), "k={k} n={n}");
                assert_eq!(spec.sum(), root_sum(n, k).unwrap(), "k={k} n={n}");
                assert_eq!(spec.product(), root_product(n, k).unwrap(), "k={k} n={n}");
            }
        }
    }
}
