//! The left-justified k-nomial triangle: rows of `(1 + x + ... + x^{k-1})^m`
//! for `m >= 0`, and power-series rows for `m < 0`, plus the diagonal
//! readings that assemble `F_{n,k}` from them.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinat::{binomial, sign_pow};
use crate::error::{check_k, Result};
use crate::poly::IntPoly;

/// `C_k(n, j)` for `n >= 0`: coefficient of `x^j` in `(1 + ... + x^{k-1})^n`.
pub fn coeff_pos(k: u32, n: u64, j: u64) -> BigInt {
    let (kk, n, j) = (k as i64, n as i64, j as i64);
    if n == 0 {
        return if j == 0 { BigInt::one() } else { BigInt::zero() };
    }
    if j > (kk - 1) * n {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for s in 0..=j / kk {
        let term = binomial(n, s) * binomial(n + j - kk * s - 1, n - 1);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

/// `C_k(n, j)` as the multinomial sum over `(j_0, ..., j_{k-1})` with
/// `sum j_i = n` and `sum i*j_i = j`. Slow; kept as an independent route.
pub fn coeff_pos_multinomial(k: u32, n: u64, j: u64) -> BigInt {
    fn rec(part: u64, left_n: u64, left_j: u64, fact: &[BigInt], denom: &BigInt) -> BigInt {
        if part == 0 {
            if left_j != 0 {
                return BigInt::zero();
            }
            let n = fact.len() - 1;
            return &fact[n] / (denom * &fact[left_n as usize]);
        }
        let mut acc = BigInt::zero();
        let mut c = 0;
        while c <= left_n && c * part <= left_j {
            let d = denom * &fact[c as usize];
            acc += rec(part - 1, left_n - c, left_j - c * part, fact, &d);
            c += 1;
        }
        acc
    }
    let mut fact = vec![BigInt::one(); n as usize + 1];
    for i in 1..=n as usize {
        fact[i] = &fact[i - 1] * i;
    }
    rec(k as u64 - 1, n, j, &fact, &BigInt::one())
}

/// `C_k(m, j)` for `m < 0`: coefficient of `x^j` in the power series of
/// `(1 + ... + x^{k-1})^{-|m|} = (1-x)^{|m|} / (1-x^k)^{|m|}`.
pub fn coeff_neg(k: u32, m: i64, j: u64) -> BigInt {
    assert!(m < 0, "coeff_neg needs m < 0");
    let (kk, a, j) = (k as i64, -m, j as i64);
    let mut acc = BigInt::zero();
    for s in 0..=j / kk {
        let t = j - kk * s;
        if t > a {
            continue;
        }
        acc += sign_pow(t) * binomial(a, t) * binomial(a + s - 1, a - 1);
    }
    acc
}

/// Row `-|m|` obtained by inverting the series `(1 + ... + x^{k-1})^{|m|}`
/// term by term, to `width` columns.
pub fn series_inverse_row(k: u32, m: i64, width: usize) -> Vec<BigInt> {
    assert!(m < 0);
    let base: Vec<BigInt> = TriangleRow::positive(k, (-m) as u64).coeffs;
    let mut inv: Vec<BigInt> = Vec::with_capacity(width);
    for i in 0..width {
        let mut s = if i == 0 { BigInt::one() } else { BigInt::zero() };
        for (t, b) in base.iter().enumerate().skip(1).take(i) {
            s -= b * &inv[i - t];
        }
        // base[0] = 1
        inv.push(s);
    }
    inv
}

/// One row of the triangle. Positive rows are complete; negative rows are
/// truncated to the requested width.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangleRow {
    pub k: u32,
    pub m: i64,
    pub coeffs: Vec<BigInt>,
}

impl TriangleRow {
    pub fn positive(k: u32, m: u64) -> Self {
        let len = (k as u64 - 1) * m + 1;
        let coeffs = (0..len).map(|j| coeff_pos(k, m, j)).collect();
        Self { k, m: m as i64, coeffs }
    }

    pub fn negative(k: u32, m: i64, width: usize) -> Self {
        let coeffs = (0..width as u64).map(|j| coeff_neg(k, m, j)).collect();
        Self { k, m, coeffs }
    }

    pub fn get(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }
}

/// Rows `-1, -2, ..., -rows` of width `cols`.
pub fn negative_rows(k: u32, rows: usize, cols: usize) -> Vec<TriangleRow> {
    (1..=rows as i64).map(|m| TriangleRow::negative(k, -m, cols)).collect()
}

/// Rows `0..rows` of the ordinary triangle.
pub fn positive_rows(k: u32, rows: usize) -> Vec<TriangleRow> {
    (0..rows as u64).map(|m| TriangleRow::positive(k, m)).collect()
}

/// `F_{n,k} = sum_h C_k(n-h-1, h) x^{(k-1)(n-1)-hk}` for `n >= 1`.
pub fn assemble_pos(k: u32, n: i64) -> Result<IntPoly> {
    check_k(k)?;
    assert!(n >= 1, "assemble_pos needs n >= 1");
    let d = (k as i64 - 1) * (n - 1);
    let mut terms = Vec::new();
    let mut h = 0;
    while h < n && d - h * k as i64 >= 0 {
        terms.push(((d - h * k as i64) as u32, coeff_pos(k, (n - h - 1) as u64, h as u64)));
        h += 1;
    }
    Ok(IntPoly::from_terms(terms))
}

/// `F_{n,k} = sum_{j_k} C_k(-(1+j_k), |n|+1-k(1+j_k)) x^{|n|+1-k(1+j_k)}`
/// for `n <= 0`.
pub fn assemble_neg(k: u32, n: i64) -> Result<IntPoly> {
    check_k(k)?;
    assert!(n <= 0, "assemble_neg needs n <= 0");
    let terms = diagonal(k, n).map(|cell| (cell.j as u32, coeff_neg(k, cell.m, cell.j)));
    Ok(IntPoly::from_terms(terms.collect::<Vec<_>>()))
}

/// A triangle cell `(m, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub m: i64,
    pub j: u64,
}

/// Cells read for `F_{n,k}` with `n <= 0`: start at row `-1`, column
/// `|n| - k + 1`, then step down one row and left `k` columns.
pub fn diagonal(k: u32, n: i64) -> impl Iterator<Item = Cell> {
    let kk = k as i64;
    let start = -n + 1 - kk;
    (0..)
        .map(move |t| Cell { m: -(1 + t), j: (start - kk * t).max(-1) as u64 })
        .take_while(move |c| {
            let t = -c.m - 1;
            start - kk * t >= 0
        })
}

/// Cells read for `F_{n,k}` with `n >= 1`: row `n-h-1`, column `h`.
pub fn diagonal_pos(k: u32, n: i64) -> impl Iterator<Item = Cell> {
    let d = (k as i64 - 1) * (n - 1);
    (0..n)
        .take_while(move |h| d - h * k as i64 >= 0)
        .map(move |h| Cell { m: n - h - 1, j: h as u64 })
}

/// Tag letter used when printing the negative triangle: the first
/// nonvanishing-by-seed index `n = -(k-1)` gets `a`, the next `b`, and so on.
pub fn tag_letter(k: u32, n: i64) -> Option<char> {
    let t = -(n + k as i64 - 1);
    if (0..26).contains(&t) {
        Some((b'a' + t as u8) as char)
    } else {
        None
    }
}

/// Index `n` tagged with `letter` (inverse of [`tag_letter`]).
pub fn tag_index(k: u32, letter: char) -> Option<i64> {
    let c = letter.to_ascii_lowercase();
    c.is_ascii_lowercase().then(|| -((c as u8 - b'a') as i64) - (k as i64 - 1))
}

/// For every cell of the `rows x cols` negative block, the tag of the
/// polynomial whose diagonal passes through it. Only diagonals that start
/// inside the block (row `-1`, column `< cols`) are tagged.
pub fn tag_grid(k: u32, rows: usize, cols: usize) -> Vec<Vec<Option<char>>> {
    let mut grid = vec![vec![None; cols]; rows];
    for (mi, row) in grid.iter_mut().enumerate() {
        for (j, slot) in row.iter_mut().enumerate() {
            // cell (m, j) lies on the diagonal of n with |n| + 1 - k = j + k(|m|-1)
            let abs_n = j as i64 + k as i64 * mi as i64 + k as i64 - 1;
            let start = abs_n + 1 - k as i64;
            if start < cols as i64 {
                *slot = tag_letter(k, -abs_n);
            }
        }
    }
    grid
}

/// Sum of a positive row, `k^m`.
pub fn row_sum(row: &TriangleRow) -> BigInt {
    row.coeffs.iter().sum()
}

#[cfg(test)]
pub(crate) fn is_palindrome(v: &[BigInt]) -> bool {
    v.iter().eq(v.iter().rev())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recurrence::SequenceCache;

    #[test]
    fn positive_coefficients() {
        assert_eq!(coeff_pos(5, 3, 7), BigInt::from(18));
        for k in 2..6 {
            for n in 0..6 {
                assert_eq!(coeff_pos(k, n, 0), BigInt::one());
            }
        }
        for n in 3..20 {
            assert_eq!(coeff_pos(4, n - 2, 1), BigInt::from(n - 2));
        }
        let row = TriangleRow::positive(3, 4);
        assert_eq!(row_sum(&row), BigInt::from(81));
        assert!(is_palindrome(&row.coeffs));
    }

    #[test]
    fn multinomial_route_agrees() {
        for k in 2..=5 {
            for n in 0..=8 {
                for j in 0..=20 {
                    assert_eq!(coeff_pos(k, n, j), coeff_pos_multinomial(k, n, j), "k={k} n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn negative_rows_k4() {
        let r: Vec<i64> = [1, -3, 3, -1, 3, -9, 9, -3, 6, -18, 18, -6].to_vec();
        let row = TriangleRow::negative(4, -3, 12);
        assert_eq!(row.coeffs, r.into_iter().map(BigInt::from).collect::<Vec<_>>());
        assert_eq!(coeff_neg(4, -2, 5), BigInt::from(-4));
        assert_eq!(coeff_neg(4, -1, 4), BigInt::one());
        for k in 2..=5 {
            for m in 1..=6 {
                assert_eq!(series_inverse_row(k, -m, 25), TriangleRow::negative(k, -m, 25).coeffs);
            }
        }
    }

    #[test]
    fn row_minus_one_inverts_row_one() {
        for k in 2..8u32 {
            let neg = TriangleRow::negative(k, -1, 40);
            let pos = TriangleRow::positive(k, 1);
            for i in 0..40usize {
                let s: BigInt = (0..=i).map(|j| neg.get(j) * pos.get(i - j)).sum();
                assert_eq!(s, if i == 0 { BigInt::one() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn assembly_matches_recurrence() {
        for k in 2..=8 {
            let mut c = SequenceCache::new(k).unwrap();
            for n in 1..=60 {
                assert_eq!(&assemble_pos(k, n).unwrap(), c.get(n), "k={k} n={n}");
            }
            for n in -60..=0 {
                assert_eq!(&assemble_neg(k, n).unwrap(), c.get(n), "k={k} n={n}");
            }
        }
        assert_eq!(assemble_neg(4, -12).unwrap(), "-x^9-4x^5-3x".parse().unwrap());
        assert!(assemble_neg(4, -5).unwrap().is_zero());
        assert_eq!(assemble_pos(2, 2).unwrap(), IntPoly::x());
    }

    #[test]
    fn tags_follow_diagonals() {
        assert_eq!(tag_letter(4, -3), Some('a'));
        assert_eq!(tag_letter(4, -14), Some('l'));
        assert_eq!(tag_index(4, 'j'), Some(-12));
        let cells: Vec<Cell> = diagonal(4, -12).collect();
        assert_eq!(cells, vec![Cell { m: -1, j: 9 }, Cell { m: -2, j: 5 }, Cell { m: -3, j: 1 }]);
        let g = tag_grid(4, 3, 12);
        assert_eq!(g[0][0], Some('a'));
        assert_eq!(g[1][5], Some('j'));
        assert_eq!(g[2][3], Some('l'));
        assert_eq!(g[2][4], None);
        for cell in diagonal(4, -12) {
            assert_eq!(g[(-cell.m - 1) as usize][cell.j as usize], Some('j'));
        }
    }
}
