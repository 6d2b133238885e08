//! Index arithmetic: quotient/remainder pairs, the `(x^k+1)` multiplicity,
//! the vanishing predicate, degrees and the closed-form extreme terms.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use serde::Serialize;

use crate::combinat::{binomial, modulo, sign_pow};
use crate::error::{check_k, Error, Result};

/// Degree of `F_{n,k}`, or the marker for an identically zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Degree {
    Vanishing,
    Exact(u64),
}

impl Degree {
    pub fn exact(self) -> Option<u64> {
        match self {
            Degree::Exact(d) => Some(d),
            Degree::Vanishing => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexProfile {
    pub n: i64,
    pub k: u32,
    pub q: u64,
    pub r: u32,
    pub rho: u32,
    pub vanishes: bool,
    pub degree: Degree,
}

impl IndexProfile {
    /// Number of nonzero roots counted in `xi = x^k`, i.e. `floor(d / k)`.
    pub fn xi_degree(&self) -> Option<u64> {
        self.degree.exact().map(|d| d / self.k as u64)
    }
}

/// A single term `coeff * x^exp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coeff: BigInt,
    pub exp: u64,
}

impl Term {
    fn new(coeff: impl Into<BigInt>, exp: u64) -> Self {
        Self { coeff: coeff.into(), exp }
    }
}

/// Computes `q`, `r`, `rho`, the vanishing flag and the degree of `F_{n,k}`.
///
/// For `n > 0`: `q = floor((n-2)/k)` (taken as 0 at `n = 1`) and
/// `r = (k-1)(n-1) mod k`. For `n <= 0`: `kq + r = |n| + 1`. In both cases
/// `rho = ((n-2) mod (k+1)) mod k`, which for `n <= 0` equals
/// `((k|n|-2) mod (k+1)) mod k`.
pub fn profile(n: i64, k: u32) -> Result<IndexProfile> {
    check_k(k)?;
    let kk = k as i64;
    let (q, r) = if n > 0 {
        let q = if n >= 2 { (n - 2).div_euclid(kk) } else { 0 };
        (q, modulo((kk - 1) * (n - 1), kk))
    } else {
        let m = -n + 1;
        (m.div_euclid(kk), m.rem_euclid(kk))
    };
    let rho = if n > 0 {
        modulo(modulo(n - 2, kk + 1), kk)
    } else {
        modulo(modulo(kk * (-n) - 2, kk + 1), kk)
    };
    let vanishes = n <= 0 && q < r;
    let degree = if vanishes {
        Degree::Vanishing
    } else if n > 0 {
        Degree::Exact(((kk - 1) * (n - 1)) as u64)
    } else if r == 0 {
        Degree::Exact((-n + 1 - kk) as u64)
    } else {
        Degree::Exact((-n + 1 - kk * r) as u64)
    };
    Ok(IndexProfile {
        n,
        k,
        q: q as u64,
        r: r as u32,
        rho: rho as u32,
        vanishes,
        degree,
    })
}

/// The identically vanishing indices as blocks of consecutive `n`, listed
/// from `n = 0` downwards: `|n|` in `[s(k+1), (s+1)k - 2]` for
/// `s = 0..=k-2`.
pub fn vanishing_indices(k: u32) -> Result<Vec<RangeInclusive<i64>>> {
    check_k(k)?;
    let kk = k as i64;
    Ok((0..=kk - 2)
        .map(|s| -((s + 1) * kk - 2)..=-(s * (kk + 1)))
        .collect())
}

/// `k(k-1)/2`.
pub fn vanishing_count(k: u32) -> u64 {
    let k = k as u64;
    k * (k - 1) / 2
}

fn nonvanishing(n: i64, k: u32) -> Result<IndexProfile> {
    let p = profile(n, k)?;
    if p.vanishes {
        Err(Error::VanishingIndex { n, k })
    } else {
        Ok(p)
    }
}

/// Lowest nonzero term: `binom(q+r, r) x^r` for `n >= 3`,
/// `(-1)^r binom(q, r) x^r` for `n <= 0`; `F_1 = 1` and `F_2 = x^{k-1}`.
pub fn lowest_term(n: i64, k: u32) -> Result<Term> {
    let p = nonvanishing(n, k)?;
    let (q, r) = (p.q as i64, p.r as i64);
    Ok(match n {
        1 => Term::new(1, 0),
        2 => Term::new(1, k as u64 - 1),
        n if n > 0 => Term::new(binomial(q + r, r), r as u64),
        _ => Term::new(sign_pow(r) * binomial(q, r), r as u64),
    })
}

/// Highest term. For `n <= 0`: `x^{|n|+1-k}` when `r = 0`, otherwise
/// `(-1)^r binom(q-1, r-1) x^{|n|+1-kr}`. For `n > 0` the polynomial is monic
/// of degree `(k-1)(n-1)`.
pub fn highest_term(n: i64, k: u32) -> Result<Term> {
    let p = nonvanishing(n, k)?;
    let d = p.degree.exact().expect("nonvanishing");
    if n > 0 || p.r == 0 {
        return Ok(Term::new(1, d));
    }
    let (q, r) = (p.q as i64, p.r as i64);
    Ok(Term::new(sign_pow(r) * binomial(q - 1, r - 1), d))
}

/// Second-highest term of a non-monomial polynomial.
///
/// For `n <= 0`:
/// * `r = 0, k = 2`: `(2q-3) x^{|n|+1-2k}`
/// * `r = 0, k >= 3`: `(q-1) x^{|n|+1-2k}`
/// * `r >= 1`: `(-1)^r (r+1) binom(q-1, r) x^{|n|+1-k(r+1)}`
///
/// For `n >= 3` it is `(n-2) x^{(k-1)(n-1)-k}`.
pub fn second_highest_term(n: i64, k: u32) -> Result<Term> {
    let p = nonvanishing(n, k)?;
    let kk = k as i64;
    let (q, r) = (p.q as i64, p.r as i64);
    if n > 0 {
        if n < 3 {
            return Err(Error::MonomialIndex { n, k });
        }
        let d = (kk - 1) * (n - 1);
        return Ok(Term::new(n - 2, (d - kk) as u64));
    }
    let m = -n + 1;
    if r == 0 {
        if q < 2 {
            return Err(Error::MonomialIndex { n, k });
        }
        let c = if k == 2 { 2 * q - 3 } else { q - 1 };
        Ok(Term::new(c, (m - 2 * kk) as u64))
    } else {
        if q < r + 1 {
            return Err(Error::MonomialIndex { n, k });
        }
        let c = sign_pow(r) * (r + 1) * binomial(q - 1, r);
        Ok(Term::new(c, (m - kk * (r + 1)) as u64))
    }
}
