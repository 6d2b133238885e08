//! Exact sparse univariate polynomials over arbitrary-precision integers.
//!
//! [`IntPoly`] keeps only nonzero coefficients, keyed by exponent, so two
//! polynomials are equal exactly when their term maps are equal. The zero
//! polynomial is the empty map and has no degree.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    terms: BTreeMap<u32, BigInt>,
}

/// Outcome of [`IntPoly::divide_exact`] when no exact quotient exists.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivideError {
    DivisorZero,
    NotDivisible,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, e: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Self { terms }
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(1, 1)
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero coefficients dropped.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (u32, C)>) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in terms {
            accumulate(&mut out, e, c.into());
        }
        Self { terms: out }
    }

    /// Dense ascending coefficients: `coeffs[i]` multiplies `x^i`.
    pub fn from_coeffs<C: Into<BigInt> + Clone>(coeffs: &[C]) -> Self {
        Self::from_terms(coeffs.iter().cloned().enumerate().map(|(i, c)| (i as u32, c)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn leading(&self) -> Option<(u32, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    pub fn lowest(&self) -> Option<(u32, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Coefficient of `x^e` (zero when absent).
    pub fn coeff(&self, e: u32) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Dense ascending coefficient vector (empty for zero).
    pub fn to_dense(&self) -> Vec<BigInt> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => {
                let mut v = vec![BigInt::zero(); d as usize + 1];
                for (e, c) in &self.terms {
                    v[*e as usize] = c.clone();
                }
                v
            }
        }
    }

    /// Every term `(a, c)` becomes `(a + e, coeff * c)`.
    pub fn mul_monomial(&self, coeff: &BigInt, e: u32) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(a, c)| (a + e, c * coeff)).collect(),
        }
    }

    /// Multiplies by `x^e`.
    pub fn shift(&self, e: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(a, c)| (a + e, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        self.mul_monomial(c, 0)
    }

    /// In-place `self += coeff * x^e * other`.
    pub fn add_scaled_assign(&mut self, other: &IntPoly, coeff: &BigInt, e: u32) {
        if coeff.is_zero() {
            return;
        }
        for (a, c) in &other.terms {
            accumulate(&mut self.terms, a + e, c * coeff);
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Exact quotient `a / b`. Never returns a truncated quotient: if `b`
    /// does not divide `a` over the integers the result is
    /// [`DivideError::NotDivisible`].
    pub fn divide_exact(&self, divisor: &IntPoly) -> std::result::Result<IntPoly, DivideError> {
        let (dd, dlead) = match divisor.leading() {
            None => return Err(DivideError::DivisorZero),
            Some((e, c)) => (e, c.clone()),
        };
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&re, rc)) = rem.iter().next_back() {
            if re < dd {
                return Err(DivideError::NotDivisible);
            }
            let (qc, r) = rc.div_rem(&dlead);
            if !r.is_zero() {
                return Err(DivideError::NotDivisible);
            }
            let qe = re - dd;
            for (e, c) in &divisor.terms {
                accumulate(&mut rem, e + qe, -(c * &qc));
            }
            quot.insert(qe, qc);
        }
        Ok(IntPoly { terms: quot })
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut prev: Option<u32> = None;
        for (e, c) in self.terms.iter().rev() {
            if let Some(p) = prev {
                acc *= pow_rational(x, p - e);
            }
            acc += BigRational::from_integer(c.clone());
            prev = Some(*e);
        }
        if let Some(p) = prev {
            acc *= pow_rational(x, p);
        }
        acc
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(e, c)| c * num_traits::pow::pow(x.clone(), *e as usize))
            .sum()
    }

    pub fn derivative(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| **e > 0)
                .map(|(e, c)| (e - 1, c * BigInt::from(*e)))
                .collect(),
        }
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// `self / content`, with the sign chosen so the leading coefficient is
    /// positive.
    pub fn primitive_part(&self) -> Self {
        let mut g = self.content();
        if g.is_zero() {
            return Self::zero();
        }
        if self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            g = -g;
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c / &g)).collect(),
        }
    }

    /// Greatest common divisor over the rationals, returned as a primitive
    /// integer polynomial with positive leading coefficient.
    pub fn gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::BothZero);
        }
        if a.is_zero() {
            return Ok(b.primitive_part());
        }
        if b.is_zero() {
            return Ok(a.primitive_part());
        }
        // Common power of x first; the remaining cofactors are handled densely.
        let lo = a.low_degree().unwrap().min(b.low_degree().unwrap());
        let a1 = a.unshift_lowest();
        let b1 = b.unshift_lowest();
        let core = if a1.degree() == Some(0) || b1.degree() == Some(0) || coprime_mod_p(&a1, &b1) {
            IntPoly::one()
        } else {
            dense_gcd(&a1.to_dense(), &b1.to_dense())
        };
        Ok(core.shift(lo))
    }

    /// True when `gcd(p, p')` is constant. Zero is not squarefree.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => {
                let d = self.derivative();
                coprime_mod_p(self, &d) || IntPoly::gcd(self, &d).map(|g| g.degree() == Some(0)).unwrap_or(false)
            }
        }
    }

    /// Divides out the largest power of `x` dividing `self`.
    pub fn unshift_lowest(&self) -> Self {
        match self.low_degree() {
            None => Self::zero(),
            Some(lo) => Self {
                terms: self.terms.iter().map(|(e, c)| (e - lo, c.clone())).collect(),
            },
        }
    }

    /// Inverse of [`IntPoly::expand_stride`] after an `x^offset` shift: if
    /// every exponent is `offset + stride * i`, returns `sum c_i t^i`.
    pub fn compress_stride(&self, offset: u32, stride: u32) -> Option<IntPoly> {
        assert!(stride > 0);
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if *e < offset || !(e - offset).is_multiple_of(stride) {
                return None;
            }
            terms.insert((e - offset) / stride, c.clone());
        }
        Some(IntPoly { terms })
    }

    /// Substitutes `x -> x^stride`.
    pub fn expand_stride(&self, stride: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * stride, c.clone())).collect(),
        }
    }

    /// Canonical remainder modulo `x^k + 1`: every `x^e` becomes
    /// `(-1)^(e div k) x^(e mod k)`.
    pub fn reduce_mod_xk_plus_one(&self, k: u32) -> Self {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let c = if (e / k).is_multiple_of(2) { c.clone() } else { -c };
            accumulate(&mut out, e % k, c);
        }
        Self { terms: out }
    }

    /// Maximum absolute coefficient.
    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// Exponents `e` with `lo < e < hi`, `e ≡ lo (mod stride)`, whose
    /// coefficient is zero.
    pub fn gaps(&self, stride: u32) -> Vec<u32> {
        let (Some(lo), Some(hi)) = (self.low_degree(), self.degree()) else {
            return Vec::new();
        };
        (lo..=hi)
            .step_by(stride as usize)
            .filter(|e| !self.terms.contains_key(e))
            .collect()
    }

    /// Ascending text without spaces around signs of the first term, e.g.
    /// `1 + 2x^3 + x^6`.
    fn write_terms(&self, f: &mut fmt::Formatter<'_>, tight: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg, tight) {
                (0, true, _) => f.write_str("-")?,
                (0, false, _) => {}
                (_, true, false) => f.write_str(" - ")?,
                (_, false, false) => f.write_str(" + ")?,
                (_, true, true) => f.write_str("-")?,
                (_, false, true) => f.write_str("+")?,
            }
            write_monomial(f, &mag, *e)?;
        }
        Ok(())
    }

    /// Ascending text with no whitespace, e.g. `1+2x^3+x^6`.
    pub fn to_tight_string(&self) -> String {
        struct Tight<'a>(&'a IntPoly);
        impl fmt::Display for Tight<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write_terms(f, true)
            }
        }
        Tight(self).to_string()
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, mag: &BigInt, e: u32) -> fmt::Result {
    if e == 0 {
        return write!(f, "{mag}");
    }
    if !mag.is_one() {
        write!(f, "{mag}")?;
    }
    if e == 1 {
        f.write_str("x")
    } else {
        write!(f, "x^{e}")
    }
}

fn accumulate(terms: &mut BTreeMap<u32, BigInt>, e: u32, c: BigInt) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(e) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn pow_rational(x: &BigRational, e: u32) -> BigRational {
    num_traits::pow::pow(x.clone(), e as usize)
}

// ---------------------------------------------------------------------------
// gcd machinery

/// Primes below 2^62 used for the coprimality fast path.
const GCD_PRIMES: [u64; 3] = [4611686018427387847, 4611686018427387817, 4611686018427387787];

/// True if some prime not dividing `lc(a)` certifies `gcd(a, b) = 1`.
/// `deg gcd(a mod p, b mod p) >= deg gcd(a, b)` whenever `p` does not divide
/// the leading coefficient of `a`, so a constant modular gcd is a proof.
fn coprime_mod_p(a: &IntPoly, b: &IntPoly) -> bool {
    for &p in &GCD_PRIMES {
        let pb = BigInt::from(p);
        let lead = a.leading().map(|(_, c)| c.mod_floor(&pb)).unwrap_or_default();
        if lead.is_zero() {
            continue;
        }
        let ra = reduce_mod(a, p);
        let rb = reduce_mod(b, p);
        if modular_gcd_degree(ra, rb, p) == 0 {
            return true;
        }
    }
    false
}

fn reduce_mod(a: &IntPoly, p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v = vec![0u64; a.degree().map(|d| d as usize + 1).unwrap_or(0)];
    for (e, c) in a.terms() {
        v[e as usize] = c.mod_floor(&pb).to_u64().unwrap();
    }
    trim_mod(&mut v);
    v
}

fn trim_mod(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

/// Degree of the monic gcd over GF(p); `usize::MAX` if both are zero.
fn modular_gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    loop {
        if b.is_empty() {
            return if a.is_empty() { usize::MAX } else { a.len() - 1 };
        }
        // a <- a mod b
        let inv = powmod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() {
            let shift = a.len() - b.len();
            let factor = mulmod(*a.last().unwrap(), inv, p);
            for (i, bc) in b.iter().enumerate() {
                let t = mulmod(factor, *bc, p);
                let slot = &mut a[i + shift];
                *slot = (*slot + p - t) % p;
            }
            trim_mod(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

fn dense_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map(Zero::is_zero).unwrap_or(false) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() {
        return v;
    }
    v.into_iter().map(|c| c / &g).collect()
}

/// Primitive pseudo-remainder sequence.
fn dense_gcd(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut u = dense_primitive(a.to_vec());
    let mut v = dense_primitive(b.to_vec());
    if u.len() < v.len() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_empty() {
        let r = pseudo_rem(&u, &v);
        u = v;
        v = dense_primitive(r);
    }
    IntPoly::from_coeffs(&u).primitive_part()
}

fn pseudo_rem(u: &[BigInt], v: &[BigInt]) -> Vec<BigInt> {
    let mut r = u.to_vec();
    let lv = v.last().unwrap().clone();
    let dv = v.len() - 1;
    while r.len() > dv && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - dv;
        for c in r.iter_mut() {
            *c *= &lv;
        }
        for (i, vc) in v.iter().enumerate() {
            r[i + shift] -= &lr * vc;
        }
        while r.last().map(Zero::is_zero).unwrap_or(false) {
            r.pop();
        }
    }
    r
}

// ---------------------------------------------------------------------------
// operator impls

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut out.terms, *e, c.clone());
        }
        out
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            accumulate(&mut out.terms, *e, -c);
        }
        out
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        let mut out = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                accumulate(&mut out, ea + eb, ca * cb);
            }
        }
        IntPoly { terms: out }
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPoly> for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: &IntPoly) -> IntPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_terms(f, false)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

// ---------------------------------------------------------------------------
// JSON: {"exponent": "coefficient"} with decimal strings.

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        m.end()
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
        let mut terms = BTreeMap::new();
        for (e, c) in raw {
            let e: u32 = e.parse().map_err(D::Error::custom)?;
            let c: BigInt = c.parse().map_err(D::Error::custom)?;
            accumulate(&mut terms, e, c);
        }
        Ok(IntPoly { terms })
    }
}

// ---------------------------------------------------------------------------
// Parser: sums of products, e.g. `1 +2x^3 +x^6`, `-x(1+x^3)^2(4+x^3)`,
// `x^2 (1+x^3)^2 (6 +4x^3 +x^6)`, `x^{12}`.

impl FromStr for IntPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { src: s.as_bytes(), pos: 0 };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(poly)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<IntPoly> {
        let mut acc = IntPoly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.product()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            first = false;
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<IntPoly> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.power()?;
                }
                Some(b'x') | Some(b'(') | Some(b'0'..=b'9') => {
                    acc = &acc * &self.power()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> Result<IntPoly> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let braced = self.peek() == Some(b'{');
            if braced {
                self.pos += 1;
            }
            let e = self.integer()?.to_u32().ok_or_else(|| self.err("exponent too large"))?;
            if braced {
                if self.peek() != Some(b'}') {
                    return Err(self.err("expected '}'"));
                }
                self.pos += 1;
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<IntPoly> {
        match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                Ok(IntPoly::x())
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0'..=b'9') => Ok(IntPoly::constant(self.integer()?)),
            _ => Err(self.err("expected a term")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> IntPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p("1 + x^3") + &p("-x^3"), IntPoly::one());
        let q = p("1 - 5x^3 + 7x");
        assert_eq!(&IntPoly::zero() + &q, q);
        assert_eq!(&p("1+2x^3+x^6") + &p("1+2x^3+x^6"), p("2+4x^3+2x^6"));
    }

    #[test]
    fn mul_monomial_examples() {
        let one = BigInt::one();
        assert_eq!(p("1+x").mul_monomial(&one, 2), p("x^2+x^3"));
        assert!(p("1+x+7x^9").mul_monomial(&BigInt::zero(), 5).is_zero());
        assert_eq!(p("1+2x^3").mul_monomial(&-one, 1), p("-x-2x^4"));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("(1+x^3)^2"), p("1+2x^3+x^6"));
        assert_eq!(&p("1+2x^3+x^6") * &p("1+x^3"), p("1+3x^3+3x^6+x^9"));
        assert!((&p("3+x") * &IntPoly::zero()).is_zero());
        assert_eq!(&p("1-x") * &p("1+x+x^2+x^3"), p("1-x^4"));
    }

    #[test]
    fn divide_exact_examples() {
        assert_eq!(p("1+2x^3+x^6").divide_exact(&p("1+x^3")), Ok(p("1+x^3")));
        assert_eq!(p("1+x^3").divide_exact(&p("x")), Err(DivideError::NotDivisible));
        assert_eq!(p("-x^9-4x^5-3x").divide_exact(&p("-x")), Ok(p("x^8+4x^4+3")));
        assert_eq!(p("x").divide_exact(&IntPoly::zero()), Err(DivideError::DivisorZero));
        // integer content must divide too
        assert_eq!(p("3x+1").divide_exact(&p("2")), Err(DivideError::NotDivisible));
    }

    #[test]
    fn eval_examples() {
        let one = BigRational::one();
        assert_eq!(p("1+2x^3+x^6").eval_rational(&one), BigRational::from_integer(4.into()));
        assert_eq!(p("7-x+x^4").eval_rational(&BigRational::zero()), BigRational::from_integer(7.into()));
        assert!(p("1-5x^3-6x^6+4x^9+5x^12+x^15").eval_rational(&one).is_zero());
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(p("x^2+x").eval_rational(&half), BigRational::new(3.into(), 4.into()));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x^2").derivative(), p("2x"));
        assert!(p("17").derivative().is_zero());
        assert_eq!(p("1+2x^3+x^6").derivative(), p("6x^2+6x^5"));
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(IntPoly::gcd(&p("x^2"), &p("x^3")).unwrap(), p("x^2"));
        assert_eq!(IntPoly::gcd(&p("1+x^3"), &p("1-x^3")).unwrap(), IntPoly::one());
        let t8 = p("x^2 (1+x^3)^2 (6 +4x^3 +x^6)");
        assert_eq!(IntPoly::gcd(&t8, &t8.derivative()).unwrap(), p("x(1+x^3)"));
        assert_eq!(IntPoly::gcd(&IntPoly::zero(), &IntPoly::zero()), Err(Error::BothZero));
        assert_eq!(IntPoly::gcd(&p("-2-2x"), &IntPoly::zero()).unwrap(), p("1+x"));
    }

    #[test]
    fn squarefree() {
        assert!(p("6+4x+x^2").is_squarefree());
        assert!(!p("(1+x)^2").is_squarefree());
        assert!(!IntPoly::zero().is_squarefree());
    }

    #[test]
    fn zero_has_no_degree() {
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p("3x^4-x").degree(), Some(4));
        assert_eq!(IntPoly::from_terms([(3u32, 0i64)]), IntPoly::zero());
    }

    #[test]
    fn rendering() {
        assert_eq!(p("1+2x^3+x^6").to_string(), "1 + 2x^3 + x^6");
        assert_eq!(p("-x^9-4x^5-3x").to_string(), "-3x - 4x^5 - x^9");
        assert_eq!(p("-x^9-4x^5-3x").to_tight_string(), "-3x-4x^5-x^9");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn parser_accepts_table_forms() {
        assert_eq!(p("x^{12} + 1"), p("1 + x^12"));
        assert_eq!(p("-x(1+x^3)^2(4+x^3)"), p("-4x - 9x^4 - 6x^7 - x^10"));
        assert_eq!(p("3x^2(1+x^3)(2+x^3)"), p("6x^2 +9x^5 +3x^8"));
        assert_eq!(p("x^2 - x^2"), IntPoly::zero());
        assert!("x^".parse::<IntPoly>().is_err());
        assert!("(1+x".parse::<IntPoly>().is_err());
        assert!("y".parse::<IntPoly>().is_err());
    }

    #[test]
    fn json_form() {
        let q = p("1 - 3x^5");
        let js = serde_json::to_string(&q).unwrap();
        assert_eq!(js, r#"{"0":"1","5":"-3"}"#);
        let back: IntPoly = serde_json::from_str(&js).unwrap();
        assert_eq!(back, q);
        let big: IntPoly = serde_json::from_str(r#"{"2":"123456789012345678901234567890"}"#).unwrap();
        assert_eq!(big.coeff(2).to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn stride_and_reduction() {
        let f = p("x^2 (1+x^3)^2 (6 +4x^3 +x^6)");
        let xi = f.compress_stride(2, 3).unwrap();
        assert_eq!(xi.expand_stride(3).shift(2), f);
        assert!(p("x + x^2").compress_stride(0, 3).is_none());
        // x^4 = -x mod x^3+1
        assert_eq!(p("x^4 + x^6").reduce_mod_xk_plus_one(3), p("1 - x"));
        assert_eq!(p("1 + 3x^6 + 4x^9 + x^12").gaps(3), vec![3]);
    }
}
