//! Aberth–Ehrlich simultaneous iteration driven by a Newton-correction
//! callback, with starting points read off the Newton polygon of the
//! coefficient magnitudes.

use num_complex::Complex64;

/// Starting points for a degree-`deg` polynomial whose coefficient of `t^e`
/// has `log2 |c_e| = lc` for each `(e, lc)` supplied (zeros omitted).
pub(crate) fn initial_guesses(logs: &[(u32, f64)], deg: u32) -> Vec<Complex64> {
    // upper convex hull of (e, lc)
    let mut hull: Vec<(u32, f64)> = Vec::new();
    for &pt in logs {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 as f64 - a.0 as f64) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 as f64 - a.0 as f64);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let mut out = Vec::with_capacity(deg as usize);
    let tau = std::f64::consts::TAU;
    for w in hull.windows(2) {
        let ((a, la), (b, lb)) = (w[0], w[1]);
        let cnt = b - a;
        let u = ((la - lb) / cnt as f64).exp2();
        for j in 0..cnt {
            let ang = tau * (j as f64 / cnt as f64) + tau * a as f64 / deg as f64 + 0.4;
            out.push(Complex64::from_polar(u, ang));
        }
    }
    out
}

/// Runs the iteration in place. `newton(z)` must return `p(z)/p'(z)`.
/// Returns whether every root met the step criterion.
pub(crate) fn aberth<F>(z: &mut [Complex64], newton: F, max_iter: usize) -> bool
where
    F: Fn(Complex64) -> Complex64,
{
    let m = z.len();
    let mut done = vec![false; m];
    let mut polish = 0;
    for _ in 0..max_iter {
        let sweep = polish > 0;
        let mut all = true;
        for i in 0..m {
            if done[i] && !sweep {
                continue;
            }
            let nw = newton(z[i]);
            if !nw.is_finite() {
                z[i] *= Complex64::new(1.0 + 1e-9, 1e-9);
                all = false;
                continue;
            }
            let s: Complex64 = (0..m).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = nw / (Complex64::new(1.0, 0.0) - nw * s);
            if !w.is_finite() {
                all = false;
                continue;
            }
            z[i] -= w;
            if w.norm() <= 1e-14 * z[i].norm().max(1e-300) {
                done[i] = true;
            } else {
                done[i] = false;
                all = false;
            }
        }
        if all {
            polish += 1;
            if polish > 2 {
                return true;
            }
        }
    }
    done.iter().all(|&d| d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_a_cubic() {
        // (t-1)(t+2)(t-3) = t^3 - 2t^2 - 5t + 6
        let c = [6.0, -5.0, -2.0, 1.0];
        let logs: Vec<(u32, f64)> = c.iter().enumerate().map(|(i, v): (usize, &f64)| (i as u32, v.abs().log2())).collect();
        let mut z = initial_guesses(&logs, 3);
        assert_eq!(z.len(), 3);
        let newton = |t: Complex64| {
            let p = ((t + -2.0) * t + -5.0) * t + 6.0;
            let d = (t * 3.0 + -4.0) * t + -5.0;
            p / d
        };
        assert!(aberth(&mut z, newton, 200));
        let mut re: Vec<f64> = z.iter().map(|v| v.re).collect();
        re.sort_by(f64::total_cmp);
        for (a, b) in re.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
