//! CSV data behind the three figures: degrees for `k = 5`, root positions of
//! two polynomials, and `zeta_{n,k}` curves.

use serde::Serialize;

use crate::error::Result;
use crate::index::profile;
use crate::roots::{argand_csv, find_roots, zeta_sweep, ZetaPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Figure {
    Fig1,
    Fig2,
    Fig3,
}

impl std::str::FromStr for Figure {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "fig1" | "1" => Ok(Figure::Fig1),
            "fig2" | "2" => Ok(Figure::Fig2),
            "fig3" | "3" => Ok(Figure::Fig3),
            _ => Err(crate::Error::Parse { pos: 0, msg: format!("unknown figure `{s}`") }),
        }
    }
}

/// `n,degree` for `n` in `[from, to]`; vanishing indices are left out.
pub fn fig1_csv(k: u32, from: i64, to: i64) -> Result<String> {
    let mut s = String::from("n,degree\n");
    for n in from..=to {
        if let Some(d) = profile(n, k)?.degree.exact() {
            s.push_str(&format!("{n},{d}\n"));
        }
    }
    Ok(s)
}

pub const FIG1_DEFAULT: (u32, i64, i64) = (5, -60, 60);

/// `n,k,re,im` rows for the roots in `x` of each `(n, k)`.
pub fn fig2_csv(pairs: &[(i64, u32)], tol: f64) -> Result<String> {
    let mut s = String::from("n,k,re,im\n");
    for &(n, k) in pairs {
        let rep = find_roots(n, k, tol)?;
        for line in argand_csv(&rep).lines().skip(1) {
            s.push_str(&format!("{n},{k},{line}\n"));
        }
    }
    Ok(s)
}

pub const FIG2_DEFAULT: [(i64, u32); 2] = [(-40, 3), (40, 8)];

/// One `zeta` sweep: `k` and the inclusive `n` range.
pub type Sweep = (u32, i64, i64);

pub const FIG3_DEFAULT: [Sweep; 4] = [(2, 1, 100), (3, 1, 100), (8, 1, 100), (4, -100, -1)];

/// `k,n,zeta,r` rows for each sweep; vanishing indices are left out.
pub fn fig3_csv(sweeps: &[Sweep], tol: f64) -> Result<String> {
    let mut s = String::from("k,n,zeta,r\n");
    for &(k, from, to) in sweeps {
        let pts: Vec<ZetaPoint> = zeta_sweep(k, from, to, tol)?;
        for p in pts.iter().filter(|p| !p.vanishes) {
            if let Some(z) = p.zeta {
                s.push_str(&format!("{k},{},{z},{}\n", p.n, p.r));
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::DEFAULT_TOL;

    #[test]
    fn degree_rows() {
        let (k, a, b) = FIG1_DEFAULT;
        let csv = fig1_csv(k, a, b).unwrap();
        assert!(csv.lines().any(|l| l == "-23,4"));
        assert!(csv.lines().any(|l| l == "10,36"));
        // n = -8 vanishes for k = 5
        assert!(!csv.lines().any(|l| l.starts_with("-8,")));
    }

    #[test]
    fn argand_rows() {
        let csv = fig2_csv(&[(-40, 3)], DEFAULT_TOL).unwrap();
        let d = profile(-40, 3).unwrap().degree.exact().unwrap() as usize;
        assert_eq!(csv.lines().count(), d + 1);
    }

    #[test]
    fn zeta_branches() {
        let csv = fig3_csv(&[(4, -40, -1)], DEFAULT_TOL).unwrap();
        let mut rs: Vec<&str> = csv.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
        rs.sort();
        rs.dedup();
        assert_eq!(rs, ["0", "1", "2", "3"]);
    }
}
