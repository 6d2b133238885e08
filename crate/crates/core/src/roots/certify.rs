//! A-posteriori checks with rigorous error bounds. `Q` and `Q'` are
//! evaluated in fixed-point big-integer arithmetic, starting at `PREC`
//! fractional bits and doubling until the derivative is resolved, at `z` when `|z| <= 1` and through the reversed polynomial at `1/z`
//! otherwise, so every intermediate stays bounded by the coefficient sum.
//! A disk of radius `deg * |Q/Q'|` around each approximation contains a root;
//! pairwise disjoint disks certify that every root was found exactly once.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Float, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::poly::IntPoly;

const PREC: u64 = 128;
const MAX_PREC: u64 = 1 << 14;

pub(crate) fn log2_abs(v: &BigInt) -> f64 {
    if v.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = v.bits();
    if bits <= 1000 {
        v.to_f64().unwrap().abs().log2()
    } else {
        let shift = bits - 64;
        let top: BigInt = v >> shift;
        top.to_f64().unwrap().abs().log2() + shift as f64
    }
}

/// `|v| = m 2^e` with `m` a finite double.
fn split(v: &BigInt) -> (f64, i64) {
    let bits = v.bits();
    if bits <= 1000 {
        (v.abs().to_f64().unwrap(), 0)
    } else {
        let shift = bits - 64;
        ((v.abs() >> shift).to_f64().unwrap(), shift as i64)
    }
}

fn log_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        return hi;
    }
    hi + (1.0 + (lo - hi).exp2()).log2()
}

/// `log2 |a + ib|`.
fn log_norm(re: &BigInt, im: &BigInt) -> f64 {
    let (mr, er) = split(re);
    let (mi, ei) = split(im);
    let e = er.max(ei);
    let r = mr * 2f64.powi((er - e) as i32);
    let i = mi * 2f64.powi((ei - e) as i32);
    r.hypot(i).log2() + e as f64
}

fn ratio(num: (&BigInt, &BigInt), den: (&BigInt, &BigInt), shift: i64) -> Complex64 {
    let parts = [num.0, num.1, den.0, den.1].map(|v| {
        let (m, e) = split(v);
        (m * v.signum().to_f64().unwrap(), e)
    });
    let e = parts.iter().map(|p| p.1).max().unwrap();
    let [a, b, c, d] = parts.map(|(m, pe)| m * 2f64.powi((pe - e).max(-1100) as i32));
    let n = Complex64::new(a, b);
    let q = Complex64::new(c, d);
    n / q * 2f64.powi(shift as i32)
}

/// `v 2^prec` truncated toward zero.
fn to_fixed(v: f64, prec: u64) -> BigInt {
    if v == 0.0 {
        return BigInt::zero();
    }
    let (m, e, sign) = v.integer_decode();
    let sh = e as i64 + prec as i64;
    let mag = if sh >= 0 { BigInt::from(m) << sh as u64 } else { BigInt::from(m) >> (-sh) as u64 };
    if sign < 0 {
        -mag
    } else {
        mag
    }
}

/// Dense coefficients in both orders.
pub(crate) struct ExactPoly {
    c: Vec<BigInt>,
    rev: Vec<BigInt>,
    logs: Vec<f64>,
}

pub(crate) struct ExactEval {
    /// `Q(z) / Q'(z)` rounded to double precision.
    pub newton: Complex64,
    /// Upper bound on `|Q(z)| / sum |c_i| |z|^i`.
    pub backward_error: f64,
    /// Radius of a disk around `z` that contains a root.
    pub radius: f64,
}

/// `p(w)` and `p'(w)` scaled by `2^prec`, for `|w| <= 1` given in fixed point.
fn horner(c: &[BigInt], wr: &BigInt, wi: &BigInt, prec: u64) -> [BigInt; 4] {
    let deg = c.len() - 1;
    let mut vr = &c[deg] << prec;
    let mut vi = BigInt::zero();
    let mut dr = BigInt::zero();
    let mut di = BigInt::zero();
    for i in (0..deg).rev() {
        let ndr = ((&dr * wr - &di * wi) >> prec) + &vr;
        let ndi = ((&dr * wi + &di * wr) >> prec) + &vi;
        let nvr = ((&vr * wr - &vi * wi) >> prec) + (&c[i] << prec);
        let nvi = (&vr * wi + &vi * wr) >> prec;
        (vr, vi, dr, di) = (nvr, nvi, ndr, ndi);
    }
    [vr, vi, dr, di]
}

impl ExactPoly {
    pub fn new(q: &IntPoly) -> Self {
        let c = q.to_dense();
        let rev = c.iter().rev().cloned().collect();
        let logs = c.iter().map(log2_abs).collect();
        Self { c, rev, logs }
    }

    pub fn degree(&self) -> usize {
        self.c.len() - 1
    }

    /// `(e, log2|c_e|)` for the nonzero coefficients.
    pub fn log_magnitudes(&self) -> Vec<(u32, f64)> {
        self.logs.iter().enumerate().filter(|(_, l)| l.is_finite()).map(|(i, l)| (i as u32, *l)).collect()
    }

    pub fn eval(&self, z: Complex64) -> ExactEval {
        let mut prec = PREC;
        loop {
            let (e, resolved) = self.eval_at(z, prec);
            if resolved || prec >= MAX_PREC {
                return e;
            }
            prec *= 2;
        }
    }

    /// The evaluation and whether the derivative bound kept 40 bits.
    fn eval_at(&self, z: Complex64, prec: u64) -> (ExactEval, bool) {
        let deg = self.degree();
        let d = deg as f64;
        let inverted = z.norm() > 1.0;
        let w = if inverted { z.inv() } else { z };
        let (wr, wi) = (to_fixed(w.re, prec), to_fixed(w.im, prec));
        let coeffs = if inverted { &self.rev } else { &self.c };
        let [vr, vi, dr, di] = horner(coeffs, &wr, &wi, prec);
        // truncation errors in units of 2^-prec
        let ev = 2.0 * d;
        let ed = 3.0 * d * d + 2.0 * d;
        let unit = -(prec as f64);
        let log_v = log_norm(&vr, &vi) + unit;
        let log_num = log_add(log_v, ev.log2() + unit);
        let (newton, log_num_hi, log_den, log_den_err) = if inverted {
            // Q/Q' = z R / (d R - w R'); the denominator carries 2^-2prec
            let dd = BigInt::from(deg);
            let den_r = ((&dd * &vr) << prec) - (&wr * &dr - &wi * &di);
            let den_i = ((&dd * &vi) << prec) - (&wr * &di + &wi * &dr);
            let nz = ratio((&vr, &vi), (&den_r, &den_i), prec as i64) * z;
            let lz = z.norm().log2();
            (nz, log_num + lz, log_norm(&den_r, &den_i) + 2.0 * unit, (d * ev + ed).log2() + unit)
        } else {
            let n = ratio((&vr, &vi), (&dr, &di), 0);
            (n, log_num, log_norm(&dr, &di) + unit, ed.log2() + unit)
        };
        let resolved = log_den > log_den_err + 20.0;
        let radius = if log_den > log_den_err {
            let log_den_lo = log_den + (1.0 - (log_den_err - log_den).exp2()).log2();
            d * (log_num_hi - log_den_lo).exp2() + 4.0 * f64::EPSILON * z.norm().max(1.0)
        } else {
            f64::INFINITY
        };
        let lw = w.norm().log2();
        let logs: &Vec<f64> = &self.logs;
        let terms: Vec<f64> = (0..=deg)
            .filter_map(|i| {
                let l = if inverted { logs[deg - i] } else { logs[i] };
                l.is_finite().then_some(l + i as f64 * lw)
            })
            .collect();
        let top = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let log_sum = top + terms.iter().map(|t| (t - top).exp2()).sum::<f64>().log2();
        (ExactEval { newton, backward_error: (log_num - log_sum).exp2(), radius }, resolved)
    }
}

pub(crate) struct Certificate {
    /// Largest backward error over the roots.
    pub residual: f64,
    /// Largest inclusion radius.
    pub error_bound: f64,
    /// Whether the inclusion disks are pairwise disjoint.
    pub isolated: bool,
    pub newton: Vec<Complex64>,
}

pub(crate) fn certify(p: &ExactPoly, roots: &[Complex64]) -> Certificate {
    let evals: Vec<ExactEval> = roots.par_iter().map(|&z| p.eval(z)).collect();
    let radii: Vec<f64> = evals.iter().map(|e| e.radius).collect();
    let mut isolated = radii.iter().all(|r| r.is_finite());
    'outer: for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if (roots[i] - roots[j]).norm() <= radii[i] + radii[j] {
                isolated = false;
                break 'outer;
            }
        }
    }
    Certificate {
        residual: evals.iter().map(|e| e.backward_error).fold(0.0, f64::max),
        error_bound: radii.iter().cloned().fold(0.0, f64::max),
        isolated,
        newton: evals.into_iter().map(|e| e.newton).collect(),
    }
}
