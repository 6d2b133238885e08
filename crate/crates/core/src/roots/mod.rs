//! Numerical roots of `P_{n,k}(xi)`, `xi = x^k`, and the analyses built on
//! them: the amplitude `zeta_{n,k}`, real roots, rotational symmetry and the
//! `k = 2` closed form.
//!
//! The factor `x^r (xi+1)^rho` is removed exactly. The remaining `Q(xi)` is
//! solved by Aberth iteration whose Newton corrections come from running the
//! recurrence in floating point, which stays well conditioned where the
//! monomial coefficients do not. Every result is then checked by exact
//! evaluation of `Q` and `Q'`.

mod aberth;
mod certify;
mod eval;

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{factorize, Factorization};
use crate::index::profile;
use crate::recurrence::SequenceCache;

use aberth::{aberth, initial_guesses};
use certify::{certify, ExactPoly};

pub const DEFAULT_TOL: f64 = 1e-9;

const MAX_ITER: usize = 2000;

#[derive(Debug, Clone, Serialize)]
pub struct RootReport {
    pub n: i64,
    pub k: u32,
    pub r: u32,
    pub rho: u32,
    /// Degree of `P_{n,k}` in `xi`.
    pub xi_degree: u64,
    /// Roots of `P_{n,k}` with multiplicity, sorted by real then imaginary part.
    pub xi_roots: Vec<Complex64>,
    pub zeta: f64,
    /// Real nonzero roots of `F_{n,k}` with multiplicity, ascending.
    pub x_real_roots: Vec<f64>,
    /// Largest normalized backward error `|Q(xi)| / sum |c_i| |xi|^i`.
    pub residual: f64,
    /// Every computed root of `Q` lies within this distance of a distinct
    /// true root.
    pub error_bound: f64,
}

impl RootReport {
    fn empty(n: i64, k: u32, r: u32, rho: u32) -> Self {
        Self {
            n,
            k,
            r,
            rho,
            xi_degree: 0,
            xi_roots: Vec::new(),
            zeta: 0.0,
            x_real_roots: Vec::new(),
            residual: 0.0,
            error_bound: 0.0,
        }
    }

    /// All roots of `F_{n,k}` in `x` with multiplicity, including `x = 0`.
    pub fn x_roots(&self) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.r as usize];
        for xi in &self.xi_roots {
            out.extend(kth_roots(*xi, self.k));
        }
        out
    }
}

fn kth_roots(xi: Complex64, k: u32) -> impl Iterator<Item = Complex64> {
    let base = xi.powf(1.0 / k as f64);
    (0..k).map(move |j| base * Complex64::from_polar(1.0, 2.0 * PI * j as f64 / k as f64))
}

fn sort_complex(v: &mut [Complex64]) {
    v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

fn is_real(z: Complex64, tol: f64) -> bool {
    z.im.abs() <= tol * (1.0 + z.re.abs())
}

/// Real `x` with `x^k = xi` for a real `xi`: one for odd `k`, two or none for
/// even `k`.
fn real_x_from_xi(xi: f64, k: u32) -> Vec<f64> {
    let m = xi.abs().powf(1.0 / k as f64);
    if k % 2 == 1 {
        vec![m.copysign(xi)]
    } else if xi > 0.0 {
        vec![-m, m]
    } else {
        Vec::new()
    }
}

/// Roots of `P_{n,k}` computed from its exact factorization.
pub fn roots_from_factorization(fac: &Factorization, tol: f64) -> Result<RootReport> {
    let (n, k) = (fac.n, fac.k);
    let mut report = RootReport::empty(n, k, fac.r, fac.rho);
    let q = &fac.q_xi;
    let m = q.degree().unwrap_or(0);
    report.xi_degree = m as u64 + fac.rho as u64;
    let mut roots: Vec<Complex64> = Vec::new();
    if m > 0 {
        let exact = ExactPoly::new(q);
        let mut z = initial_guesses(&exact.log_magnitudes(), m);
        let (r, rho) = (fac.r, fac.rho);
        let newton = |xi: Complex64| eval::q_log_derivative_xi(n, k, r, rho, xi).inv();
        aberth(&mut z, newton, MAX_ITER);
        let mut cert = certify(&exact, &z);
        let mut rounds = 0;
        while (!cert.isolated || cert.residual > tol) && rounds < 8 {
            // refine with exactly evaluated corrections
            let nw = cert.newton.clone();
            for (i, w0) in nw.into_iter().enumerate() {
                let s: Complex64 = (0..z.len()).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
                let w = w0 / (Complex64::new(1.0, 0.0) - w0 * s);
                if w.is_finite() {
                    z[i] -= w;
                }
            }
            cert = certify(&exact, &z);
            rounds += 1;
        }
        if !cert.isolated || cert.residual > tol {
            return Err(Error::ConvergenceFailure { n, k, achieved: cert.residual });
        }
        report.residual = cert.residual;
        report.error_bound = cert.error_bound;
        roots = z;
    }
    roots.extend(std::iter::repeat_n(Complex64::new(-1.0, 0.0), fac.rho as usize));
    sort_complex(&mut roots);
    report.zeta = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let mut real_x: Vec<f64> = roots.iter().filter(|z| is_real(**z, tol)).flat_map(|z| real_x_from_xi(z.re, k)).collect();
    real_x.sort_by(f64::total_cmp);
    report.x_real_roots = real_x;
    report.xi_roots = roots;
    Ok(report)
}

/// Roots of `P_{n,k}` for one index.
pub fn find_roots(n: i64, k: u32, tol: f64) -> Result<RootReport> {
    let mut cache = SequenceCache::new(k)?;
    find_roots_cached(&mut cache, n, tol)
}

pub fn find_roots_cached(cache: &mut SequenceCache, n: i64, tol: f64) -> Result<RootReport> {
    let k = cache.k();
    if profile(n, k)?.vanishes {
        return Err(Error::VanishingIndex { n, k });
    }
    let f = cache.get(n).clone();
    roots_from_factorization(&factorize(&f, n, k)?, tol)
}

/// Real roots of `F_{n,k}` together with any departure from the sign-rule
/// claims: no nonzero real roots for even `k`; for odd `k`, real roots in
/// `[-1, 0]` when `n > 0` and none in `(-1, 0)` when `n <= 0`.
#[derive(Debug, Clone, Serialize)]
pub struct RealRootReport {
    pub n: i64,
    pub k: u32,
    pub real_roots: Vec<f64>,
    pub findings: Vec<String>,
}

/// Guard band used for the interval claims.
pub const INTERVAL_GUARD: f64 = 1e-7;

pub fn real_roots_classify(n: i64, k: u32, tol: f64) -> Result<RealRootReport> {
    let rep = find_roots(n, k, tol)?;
    Ok(classify(&rep))
}

pub fn classify(rep: &RootReport) -> RealRootReport {
    let (n, k) = (rep.n, rep.k);
    let g = INTERVAL_GUARD;
    let mut findings = Vec::new();
    for &x in &rep.x_real_roots {
        if k % 2 == 0 {
            findings.push(format!("even k={k}, n={n}: nonzero real root {x}"));
        } else if n > 0 && !(-1.0 - g..=g).contains(&x) {
            findings.push(format!("odd k={k}, n={n}: real root {x} outside [-1, 0]"));
        } else if n <= 0 && x > -1.0 + g && x < -g {
            findings.push(format!("odd k={k}, n={n}: real root {x} inside (-1, 0)"));
        }
    }
    RealRootReport { n, k, real_roots: rep.x_real_roots.clone(), findings }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZetaPoint {
    pub n: i64,
    pub r: u32,
    /// `None` when the root finder failed for this index.
    pub zeta: Option<f64>,
    pub vanishes: bool,
    pub error: Option<String>,
}

/// `zeta_{n,k}` for every `n` in `[from, to]`, ascending in `n`. Vanishing
/// indices get `zeta = 0`; failures are recorded per point.
pub fn zeta_sweep(k: u32, from: i64, to: i64, tol: f64) -> Result<Vec<ZetaPoint>> {
    let mut cache = SequenceCache::new(k)?;
    let mut polys = Vec::new();
    for n in from..=to {
        polys.push((n, cache.get(n).clone()));
    }
    Ok(polys
        .into_par_iter()
        .map(|(n, f)| {
            let pr = profile(n, k).expect("k checked");
            if pr.vanishes {
                return ZetaPoint { n, r: pr.r, zeta: Some(0.0), vanishes: true, error: None };
            }
            match factorize(&f, n, k).and_then(|fac| roots_from_factorization(&fac, tol)) {
                Ok(rep) => ZetaPoint { n, r: pr.r, zeta: Some(rep.zeta), vanishes: false, error: None },
                Err(e) => ZetaPoint { n, r: pr.r, zeta: None, vanishes: false, error: Some(e.to_string()) },
            }
        })
        .collect())
}

/// Points with `n < 0` where `zeta > floor(|n|/k) + tol`, or where the root
/// finder failed.
pub fn zeta_bound_violations(k: u32, points: &[ZetaPoint], tol: f64) -> Vec<String> {
    let mut out = Vec::new();
    for p in points.iter().filter(|p| p.n < 0) {
        match p.zeta {
            None => out.push(format!("n={}: {}", p.n, p.error.clone().unwrap_or_default())),
            Some(z) => {
                let bound = (p.n.unsigned_abs() / k as u64) as f64;
                if z > bound + tol {
                    out.push(format!("n={}: zeta {z} exceeds {bound}", p.n));
                }
            }
        }
    }
    out
}

/// Indices `n = -sk` (so `r = 1`) where `zeta` differs from `s` by more
/// than `tol`, as `(n, zeta)`.
/// Largest `zeta` over `n > 0` next to the empirical `2.1 + 3.9/k`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SupremumFit {
    pub k: u32,
    pub n_max: i64,
    pub measured: f64,
    pub fit: f64,
    pub residual: f64,
}

pub fn supremum_fit(k: u32, points: &[ZetaPoint]) -> Option<SupremumFit> {
    let pos = points.iter().filter(|p| p.n > 0);
    let n_max = pos.clone().map(|p| p.n).max()?;
    let measured = pos.filter_map(|p| p.zeta).fold(0.0, f64::max);
    let fit = 2.1 + 3.9 / k as f64;
    Some(SupremumFit { k, n_max, measured, fit, residual: measured - fit })
}

pub fn zeta_equality_misses(k: u32, points: &[ZetaPoint], tol: f64) -> Vec<(i64, f64)> {
    points
        .iter()
        .filter(|p| p.n < 0 && p.r == 1)
        .filter_map(|p| {
            let z = p.zeta?;
            let bound = (p.n.unsigned_abs() / k as u64) as f64;
            ((z - bound).abs() > tol).then_some((p.n, z))
        })
        .collect()
}

/// `n,zeta,r` rows.
pub fn zeta_csv(points: &[ZetaPoint]) -> String {
    let mut s = String::from("n,zeta,r\n");
    for p in points {
        match p.zeta {
            Some(z) if !p.vanishes => s.push_str(&format!("{},{},{}\n", p.n, z, p.r)),
            _ => {}
        }
    }
    s
}

/// Least-squares slope of `zeta` against `|n|` for each remainder class of
/// negative, nonvanishing, non-monomial indices.
pub fn branch_slopes(points: &[ZetaPoint]) -> Vec<(u32, f64)> {
    let mut by_r: std::collections::BTreeMap<u32, Vec<(f64, f64)>> = Default::default();
    for p in points.iter().filter(|p| p.n < 0 && !p.vanishes) {
        if let Some(z) = p.zeta.filter(|z| *z > 0.0) {
            by_r.entry(p.r).or_default().push((p.n.unsigned_abs() as f64, z));
        }
    }
    by_r
        .into_iter()
        .filter(|(_, v)| v.len() >= 2)
        .map(|(r, v)| {
            let len = v.len() as f64;
            let mx = v.iter().map(|p| p.0).sum::<f64>() / len;
            let my = v.iter().map(|p| p.1).sum::<f64>() / len;
            let sxy: f64 = v.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
            let sxx: f64 = v.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
            (r, sxy / sxx)
        })
        .collect()
}

/// Roots of `F_{n,k}` in `x` solved directly in `x`, without going through
/// `xi`. The exactly known factors `x^r (x^k+1)^rho` are appended.
pub fn x_roots_direct(n: i64, k: u32) -> Result<Vec<Complex64>> {
    let mut cache = SequenceCache::new(k)?;
    if profile(n, k)?.vanishes {
        return Err(Error::VanishingIndex { n, k });
    }
    let f = cache.get(n).clone();
    let fac = factorize(&f, n, k)?;
    let g = fac.q_in_x();
    let deg = g.degree().unwrap_or(0);
    let mut z = Vec::new();
    if deg > 0 {
        let logs: Vec<(u32, f64)> = g.terms().map(|(e, c)| (e, certify::log2_abs(c))).collect();
        z = initial_guesses(&logs, deg);
        let (r, rho) = (fac.r, fac.rho);
        let ok = aberth(&mut z, |x| eval::g_log_derivative_x(n, k, r, rho, x).inv(), MAX_ITER);
        if !ok {
            return Err(Error::ConvergenceFailure { n, k, achieved: f64::NAN });
        }
    }
    z.extend(std::iter::repeat_n(Complex64::new(0.0, 0.0), fac.r as usize));
    for _ in 0..fac.rho {
        z.extend(kth_roots(Complex64::new(-1.0, 0.0), k));
    }
    sort_complex(&mut z);
    Ok(z)
}

/// Greedy multiset matching within `tol * (1 + |a|)`.
fn multiset_close(a: &[Complex64], b: &[Complex64], tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let mut used = vec![false; b.len()];
    for x in a {
        let best = (0..b.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| (b[i] - x).norm().total_cmp(&(b[j] - x).norm()));
        match best {
            Some(j) if (b[j] - x).norm() <= tol * (1.0 + x.norm()) => used[j] = true,
            _ => return false,
        }
    }
    true
}

/// The root multiset of `F_{n,k}` (solved directly in `x`) is invariant
/// under multiplication by `exp(2 pi i / k)`.
pub fn rotational_symmetry_check(n: i64, k: u32, tol: f64) -> Result<bool> {
    let z = x_roots_direct(n, k)?;
    let w = Complex64::from_polar(1.0, 2.0 * PI / k as f64);
    let rotated: Vec<Complex64> = z.iter().map(|v| v * w).collect();
    Ok(multiset_close(&rotated, &z, tol))
}

/// The roots of the Fibonacci polynomial `F_{n,2}` are `2i cos(j pi / n)`,
/// `j = 1..n-1`, all simple.
pub fn k2_root_formula_check(n: i64, tol: f64) -> Result<bool> {
    if n < 2 {
        return Err(Error::IndexOutOfRange { n, lo: 2, hi: i64::MAX });
    }
    let rep = find_roots(n, 2, tol.min(DEFAULT_TOL))?;
    let got = rep.x_roots();
    let want: Vec<Complex64> = (1..n).map(|j| Complex64::new(0.0, 2.0 * (j as f64 * PI / n as f64).cos())).collect();
    let simple = (0..got.len()).all(|i| (i + 1..got.len()).all(|j| (got[i] - got[j]).norm() > tol));
    Ok(simple && multiset_close(&got, &want, tol))
}

/// `re,im` rows for the roots of `F_{n,k}` in `x`.
pub fn argand_csv(rep: &RootReport) -> String {
    let mut s = String::from("re,im\n");
    for z in rep.x_roots() {
        s.push_str(&format!("{},{}\n", z.re, z.im));
    }
    s
}
