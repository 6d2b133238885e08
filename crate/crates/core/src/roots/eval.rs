//! Floating-point evaluation of `F_{n,k}(x)` and `F'_{n,k}(x)` by running the
//! recurrence itself. Values are carried up to a common power-of-two scale,
//! so only ratios such as `F'/F` are meaningful.

use num_complex::Complex64;

const HI: f64 = 1e150;
const LO: f64 = 1e-150;

/// `(F, F')` at `x`, both multiplied by the same unknown positive factor.
pub(crate) fn eval_scaled(n: i64, k: u32, x: Complex64) -> (Complex64, Complex64) {
    let k = k as usize;
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    // pw[i] = x^i, dpw[i] = i x^{i-1}
    let mut pw = vec![one; k + 1];
    for i in 1..=k {
        pw[i] = pw[i - 1] * x;
    }
    let dpw: Vec<Complex64> = (0..=k).map(|i| if i == 0 { zero } else { pw[i - 1] * i as f64 }).collect();

    // ring buffer: slot (m mod k) holds F_m, seeded with F_{-(k-2)}..F_1
    let kk = k as i64;
    let slot = |m: i64| m.rem_euclid(kk) as usize;
    let mut fr = vec![zero; k];
    let mut dr = vec![zero; k];
    fr[slot(1)] = one;
    if n >= -(kk - 2) && n <= 1 {
        return (fr[slot(n)], dr[slot(n)]);
    }
    if n > 1 {
        for m in 2..=n {
            let mut fm = zero;
            let mut dm = zero;
            for j in 1..=k {
                let s = slot(m - j as i64);
                fm += pw[k - j] * fr[s];
                dm += dpw[k - j] * fr[s] + pw[k - j] * dr[s];
            }
            fr[slot(m)] = fm;
            dr[slot(m)] = dm;
            rescale(&mut fr, &mut dr);
        }
    } else {
        for m in (n..=-(kk - 1)).rev() {
            // the slot of F_m currently holds F_{m+k}
            let sm = slot(m);
            let mut fm = fr[sm];
            let mut dm = dr[sm];
            for j in 1..k {
                let s = slot(m + j as i64);
                fm -= pw[j] * fr[s];
                dm -= dpw[j] * fr[s] + pw[j] * dr[s];
            }
            fr[sm] = fm;
            dr[sm] = dm;
            rescale(&mut fr, &mut dr);
        }
    }
    (fr[slot(n)], dr[slot(n)])
}

fn rescale(f: &mut [Complex64], d: &mut [Complex64]) {
    let big = f.iter().chain(d.iter()).map(|z| z.norm_sqr()).fold(0.0, f64::max).sqrt();
    if big > HI || (big < LO && big > 0.0) {
        let e = big.log2().round() as i32;
        let s = 2f64.powi(-e);
        for z in f.iter_mut().chain(d.iter_mut()) {
            *z *= s;
        }
    }
}

/// `F'/F` at `x`.
pub(crate) fn log_derivative(n: i64, k: u32, x: Complex64) -> Complex64 {
    let (f, d) = eval_scaled(n, k, x);
    d / f
}

/// `Q'/Q` at `xi` where `F = x^r (xi+1)^rho Q(xi)`, `xi = x^k`.
pub(crate) fn q_log_derivative_xi(n: i64, k: u32, r: u32, rho: u32, xi: Complex64) -> Complex64 {
    let x = xi.powf(1.0 / k as f64);
    let ld = log_derivative(n, k, x);
    let p_ld = (ld - r as f64 / x) / (x.powu(k - 1) * k as f64);
    p_ld - rho as f64 / (xi + 1.0)
}

/// `G'/G` at `x` where `F = x^r (x^k+1)^rho G(x)`.
pub(crate) fn g_log_derivative_x(n: i64, k: u32, r: u32, rho: u32, x: Complex64) -> Complex64 {
    let ld = log_derivative(n, k, x);
    let xk1 = x.powu(k - 1);
    ld - r as f64 / x - (xk1 * (rho * k) as f64) / (xk1 * x + 1.0)
}
