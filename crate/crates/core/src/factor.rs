//! `F_{n,k} = x^r (x^k+1)^rho Q(x^k)`: extraction by exact division, the
//! small-index and `x^k = -s` closed forms, and the factored text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{check_k, Error, Result};
use crate::index::profile;
use crate::poly::IntPoly;
use crate::recurrence::SequenceCache;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factorization {
    pub n: i64,
    pub k: u32,
    pub r: u32,
    pub rho: u32,
    /// `Q` in the variable `xi = x^k`.
    pub q_xi: IntPoly,
}

impl Factorization {
    /// `Q(x^k)` as a polynomial in `x`.
    pub fn q_in_x(&self) -> IntPoly {
        self.q_xi.expand_stride(self.k)
    }

    /// `P(xi) = (xi+1)^rho Q(xi)`.
    pub fn p_xi(&self) -> IntPoly {
        &xi_plus_one().pow(self.rho) * &self.q_xi
    }

    /// `x^r (x^k+1)^rho Q(x^k)`.
    pub fn reconstruct(&self) -> IntPoly {
        self.p_xi().expand_stride(self.k).shift(self.r)
    }

    /// True when `Q` has no repeated roots; together with `Q(0) != 0` and
    /// `Q(-1) != 0` this makes every root of `F` outside `x = 0` and
    /// `x^k = -1` simple.
    pub fn q_squarefree(&self) -> bool {
        self.q_xi.degree() == Some(0) || self.q_xi.is_squarefree()
    }

    /// Table-style text such as `x^2(1+x^3)^2(6+4x^3+x^6)`.
    pub fn display(&self) -> String {
        factored_text(self)
    }
}

fn xi_plus_one() -> IntPoly {
    IntPoly::from_coeffs(&[1, 1])
}

fn violation(n: i64, k: u32, detail: impl Into<String>) -> Error {
    Error::StructureViolation { n, k, detail: detail.into() }
}

/// Factors an exact `F_{n,k}`. Both `r` and `rho` are measured and compared
/// with their predicted values.
pub fn factorize(f: &IntPoly, n: i64, k: u32) -> Result<Factorization> {
    let pr = profile(n, k)?;
    if pr.vanishes || f.is_zero() {
        return Err(Error::VanishingIndex { n, k });
    }
    let low = f.low_degree().unwrap();
    if low != pr.r {
        return Err(violation(n, k, format!("lowest exponent {low}, expected r = {}", pr.r)));
    }
    let mut p = f
        .compress_stride(pr.r, k)
        .ok_or_else(|| violation(n, k, format!("exponents not all congruent to {} mod {k}", pr.r)))?;
    let mut rho = 0;
    let divisor = xi_plus_one();
    while let Ok(next) = p.divide_exact(&divisor) {
        p = next;
        rho += 1;
    }
    if rho != pr.rho {
        return Err(violation(n, k, format!("measured rho {rho}, predicted {}", pr.rho)));
    }
    Ok(Factorization { n, k, r: pr.r, rho, q_xi: p })
}

/// Factors `F_{n,k}` taken from a cache.
pub fn factorize_index(cache: &mut SequenceCache, n: i64) -> Result<Factorization> {
    let k = cache.k();
    let f = cache.get(n).clone();
    factorize(&f, n, k)
}

/// `F_{n,k} = x^{k+1-n} (x^k+1)^{n-2}` for `2 <= n <= k+1`.
pub fn closed_form_small(n: i64, k: u32) -> Result<IntPoly> {
    check_k(k)?;
    let hi = k as i64 + 1;
    if !(2..=hi).contains(&n) {
        return Err(Error::IndexOutOfRange { n, lo: 2, hi });
    }
    let base = &IntPoly::one() + &IntPoly::monomial(1, k);
    Ok(base.pow((n - 2) as u32).shift((hi - n) as u32))
}

/// `-x (x^k+1)^{s-2} (x^k+s)`.
pub fn xks_candidate(k: u32, s: u32) -> IntPoly {
    assert!(s >= 2);
    let base = &IntPoly::one() + &IntPoly::monomial(1, k);
    let tail = &IntPoly::constant(s) + &IntPoly::monomial(1, k);
    (&base.pow(s - 2) * &tail).mul_monomial(&BigInt::from(-1), 1)
}

/// Whether `F_{-sk,k} = -x (x^k+1)^{s-2} (x^k+s)` holds exactly.
pub fn check_xks_family(cache: &mut SequenceCache, s: u32) -> bool {
    let k = cache.k();
    cache.get(-(s as i64) * k as i64) == &xks_candidate(k, s)
}

/// The family holds for every `s` in `2..=k+1` and fails at `s = k+2`.
pub fn xks_family_range_exact(cache: &mut SequenceCache) -> bool {
    let k = cache.k();
    (2..=k + 1).all(|s| check_xks_family(cache, s)) && !check_xks_family(cache, k + 2)
}

/// `-x F_{n+k+1} ≡ F_n (mod x^k+1)`, i.e. `x^{k+1} F_{n+k+1} ≡ F_n`.
pub fn period_shift_identity(cache: &mut SequenceCache, n: i64) -> Result<bool> {
    let k = cache.k();
    for m in [n, n + k as i64 + 1] {
        if profile(m, k)?.vanishes {
            return Err(Error::VanishingIndex { n: m, k });
        }
    }
    let shifted = cache.get(n + k as i64 + 1).shift(1);
    let lhs = cache.get(n) + &shifted;
    Ok(lhs.reduce_mod_xk_plus_one(k).is_zero())
}

/// A nonvanishing polynomial with interior zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingTerms {
    pub n: i64,
    /// Absent exponents of `F_{n,k} / x^r`, strictly between its lowest and
    /// highest exponents and in steps of `k`.
    pub missing: Vec<u32>,
}

/// All `n` in `[n_min, n_max]` (both `<= 0`) whose polynomial skips an
/// exponent of its progression.
pub fn scan_vanishing_coefficients(cache: &mut SequenceCache, n_min: i64, n_max: i64) -> Vec<MissingTerms> {
    assert!(n_min <= n_max && n_max <= 0);
    let k = cache.k();
    let mut out = Vec::new();
    for n in (n_min..=n_max).rev() {
        let f = cache.get(n);
        if f.is_zero() {
            continue;
        }
        let p = f.unshift_lowest();
        let missing = p.gaps(k);
        if !missing.is_empty() {
            out.push(MissingTerms { n, missing });
        }
    }
    out.sort_by_key(|m| std::cmp::Reverse(m.n));
    out
}

/// `gcd(F, F')` divides `x^r (x^k+1)^rho`, checked with a full gcd.
/// Quadratic in the degree; the sweep code uses [`Factorization::q_squarefree`].
pub fn gcd_support_is_special(f: &IntPoly, fac: &Factorization) -> Result<bool> {
    let g = IntPoly::gcd(f, &f.derivative())?;
    let special = (&IntPoly::one() + &IntPoly::monomial(1, fac.k)).pow(fac.rho).shift(fac.r);
    Ok(special.divide_exact(&g).is_ok())
}

/// Expanded text in table style: `1 +2x^3 +x^6`, `-4x -9x^4`.
pub fn expanded_text(p: &IntPoly) -> String {
    let tight = p.to_tight_string();
    let mut out = String::with_capacity(tight.len() + 8);
    for (i, ch) in tight.char_indices() {
        if i > 0 && (ch == '+' || ch == '-') {
            out.push(' ');
        }
        out.push(ch);
    }
    out
}

/// Leading scalar and `x^r` merged: `3x^2`, `-x`, `2`, `-`, or empty.
fn prefix(scalar: &BigInt, r: u32, alone: bool) -> String {
    let xr = match r {
        0 => String::new(),
        1 => "x".to_string(),
        _ => format!("x^{r}"),
    };
    let mag = scalar.abs();
    let sign = if scalar.is_negative() { "-" } else { "" };
    if mag.is_one() && (r > 0 || !alone) {
        format!("{sign}{xr}")
    } else {
        format!("{sign}{mag}{xr}")
    }
}

/// Factored form: scalar and `x^r`, then `(1+x^k)^rho`, then `(1-x^k)^mu`
/// when `x^k = 1` is a root, then the remaining cofactor normalized to a
/// positive constant term and unit content. A polynomial with no extractable
/// factor is printed expanded.
pub fn factored_text(fac: &Factorization) -> String {
    let k = fac.k;
    let q = &fac.q_xi;
    let content = q.content();
    let c0 = q.coeff(0);
    let scalar = if c0.is_negative() { -content.clone() } else { content.clone() };
    let mut rest = q.divide_exact(&IntPoly::constant(scalar.clone())).expect("content divides");
    let one_minus = IntPoly::from_coeffs(&[1, -1]);
    let mut mu = 0;
    while rest.degree().unwrap_or(0) > 0 && rest.eval_int(&BigInt::one()).is_zero() {
        rest = rest.divide_exact(&one_minus).expect("root at one");
        mu += 1;
    }
    let rest_is_one = rest == IntPoly::one();
    if fac.r == 0 && fac.rho == 0 && mu == 0 && scalar.is_one() {
        return expanded_text(&rest.expand_stride(k));
    }
    let mut out = prefix(&scalar, fac.r, fac.rho == 0 && mu == 0 && rest_is_one);
    let power = |e: u32| if e > 1 { format!("^{e}") } else { String::new() };
    if fac.rho > 0 {
        out.push_str(&format!("(1+x^{k}){}", power(fac.rho)));
    }
    if mu > 0 {
        out.push_str(&format!("(1-x^{k}){}", power(mu)));
    }
    if !rest_is_one {
        out.push_str(&format!("({})", rest.expand_stride(k).to_tight_string()));
    }
    if out.is_empty() || out == "-" {
        out.push('1');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::poly;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    fn fac(n: i64, k: u32) -> Factorization {
        factorize(&poly(n, k).unwrap(), n, k).unwrap()
    }

    #[test]
    fn factorization_examples() {
        let f = fac(8, 3);
        assert_eq!((f.r, f.rho, f.q_xi.clone()), (2, 2, p("6+4x+x^2")));
        let f = fac(-16, 3);
        assert_eq!((f.r, f.rho, f.q_xi.clone()), (2, 2, p("10+4x")));
        let f = fac(1, 6);
        assert_eq!((f.r, f.rho, f.q_xi.clone()), (0, 0, IntPoly::one()));
        assert_eq!(factorize(&IntPoly::zero(), -10, 4), Err(Error::VanishingIndex { n: -10, k: 4 }));
        let bad = factorize(&p("x+x^2"), 3, 3);
        assert!(matches!(bad, Err(Error::StructureViolation { .. })));
    }

    #[test]
    fn reconstruction_and_rho() {
        for k in 2..=6 {
            let mut c = SequenceCache::new(k).unwrap();
            for n in -80..=80 {
                if profile(n, k).unwrap().vanishes {
                    continue;
                }
                let f = factorize_index(&mut c, n).unwrap();
                assert_eq!(&f.reconstruct(), c.get(n));
                assert!(!f.q_xi.coeff(0).is_zero());
                assert!(f.q_squarefree(), "k={k} n={n}");
                if n.abs() < 30 {
                    assert!(gcd_support_is_special(c.get(n), &f).unwrap());
                }
            }
        }
    }

    #[test]
    fn small_closed_form() {
        assert_eq!(closed_form_small(5, 4).unwrap(), p("(1+x^4)^3"));
        assert_eq!(closed_form_small(2, 6).unwrap(), p("x^5"));
        assert_eq!(closed_form_small(4, 3).unwrap(), p("(1+x^3)^2"));
        assert_eq!(closed_form_small(6, 3), Err(Error::IndexOutOfRange { n: 6, lo: 2, hi: 4 }));
    }

    #[test]
    fn xks_family() {
        assert_eq!(xks_candidate(5, 2), p("-2x-x^6"));
        assert_eq!(xks_candidate(3, 3), p("-3x-4x^4-x^7"));
        for k in 2..=6 {
            let mut c = SequenceCache::new(k).unwrap();
            assert!(xks_family_range_exact(&mut c), "k={k}");
        }
    }

    #[test]
    fn period_shift() {
        let mut c3 = SequenceCache::new(3).unwrap();
        assert!(period_shift_identity(&mut c3, 3).unwrap());
        assert_eq!(period_shift_identity(&mut c3, -8), Err(Error::VanishingIndex { n: -4, k: 3 }));
        let mut c4 = SequenceCache::new(4).unwrap();
        assert!(period_shift_identity(&mut c4, 1).unwrap());
    }

    #[test]
    fn missing_coefficients() {
        let mut c3 = SequenceCache::new(3).unwrap();
        let found = scan_vanishing_coefficients(&mut c3, -20, -1);
        assert!(found.contains(&MissingTerms { n: -14, missing: vec![3] }));
        let mut c5 = SequenceCache::new(5).unwrap();
        let found = scan_vanishing_coefficients(&mut c5, -70, -60);
        assert!(found.contains(&MissingTerms { n: -66, missing: vec![5, 10] }));
        let mut c4 = SequenceCache::new(4).unwrap();
        assert!(scan_vanishing_coefficients(&mut c4, -40, -1).is_empty());
    }

    #[test]
    fn factored_rendering() {
        assert_eq!(fac(8, 3).display(), "x^2(1+x^3)^2(6+4x^3+x^6)");
        assert_eq!(fac(-16, 3).display(), "2x^2(1+x^3)^2(5+2x^3)");
        assert_eq!(fac(-12, 3).display(), "-x(1+x^3)^2(4+x^3)");
        assert_eq!(fac(-17, 3).display(), "(1+x^3)(1-x^3)(1-5x^3-5x^6-x^9)");
        assert_eq!(fac(-14, 4).display(), "-x^3");
        assert_eq!(fac(-11, 3).display(), "1 +2x^3 +3x^6 +x^9");
        assert_eq!(fac(4, 3).display(), "(1+x^3)^2");
        assert_eq!(fac(1, 3).display(), "1");
        assert_eq!(fac(2, 3).display(), "x^2");
        assert_eq!(fac(-3, 3).display(), "-x");
    }
}
