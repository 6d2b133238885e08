//! The four reference tables: negative-index polynomials with degrees, the
//! negative `k = 4` triangle with diagonal tags, and the factored forms with
//! their `rho` values for positive and negative indices.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::factor::{expanded_text, factored_text, factorize};
use crate::index::profile;
use crate::recurrence::SequenceCache;
use crate::triangle::{negative_rows, tag_grid};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    Table1,
    Table2,
    Table3,
    Table4,
}

impl TableId {
    pub const ALL: [TableId; 4] = [TableId::Table1, TableId::Table2, TableId::Table3, TableId::Table4];
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = match self {
            TableId::Table1 => 1,
            TableId::Table2 => 2,
            TableId::Table3 => 3,
            TableId::Table4 => 4,
        };
        write!(f, "table{i}")
    }
}

impl FromStr for TableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "table1" | "1" => Ok(TableId::Table1),
            "table2" | "2" => Ok(TableId::Table2),
            "table3" | "3" => Ok(TableId::Table3),
            "table4" | "4" => Ok(TableId::Table4),
            _ => Err(Error::Parse { pos: 0, msg: format!("unknown table `{s}`") }),
        }
    }
}

/// Ranges and columns of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableSpec {
    pub which: TableId,
    /// Polynomial columns.
    pub ks: Vec<u32>,
    /// Row indices in display order.
    pub rows: Vec<i64>,
}

impl TableSpec {
    pub fn standard(which: TableId) -> Self {
        let (ks, rows): (Vec<u32>, Vec<i64>) = match which {
            TableId::Table1 => (vec![3, 4, 5], (-23..=0).rev().collect()),
            TableId::Table2 => (vec![4], (-3..=-1).rev().collect()),
            TableId::Table3 => (vec![3, 4], (1..=10).collect()),
            TableId::Table4 => (vec![3, 4], (-19..=-10).rev().collect()),
        };
        Self { which, ks, rows }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table {
    pub which: TableId,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn cell(&self, row: usize, col: usize) -> &str {
        self.rows.get(row).and_then(|r| r.get(col)).map_or("", String::as_str)
    }

    /// Column-aligned text, two spaces between columns, LF line endings.
    pub fn render_text(&self) -> String {
        let cols = self.header.len();
        let mut width = vec![0; cols];
        for line in std::iter::once(&self.header).chain(&self.rows) {
            for (w, c) in width.iter_mut().zip(line) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = String::new();
        for line in std::iter::once(&self.header).chain(&self.rows) {
            let mut s = String::new();
            for (i, w) in width.iter().enumerate() {
                let c = line.get(i).map_or("", String::as_str);
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(c);
                s.extend(std::iter::repeat_n(' ', w - c.chars().count()));
            }
            out.push_str(s.trim_end());
            out.push('\n');
        }
        out
    }
}

const LETTERS: [char; 3] = ['T', 'Q', 'P'];

fn poly_name(k: u32) -> String {
    match k {
        3..=5 => format!("{}_n(x)", LETTERS[(k - 3) as usize]),
        _ => format!("F_{{n,{k}}}(x)"),
    }
}

/// Builds one of the standard tables.
pub fn table(which: TableId) -> Result<Table> {
    build(&TableSpec::standard(which))
}

pub fn build(spec: &TableSpec) -> Result<Table> {
    match spec.which {
        TableId::Table1 => table1(spec),
        TableId::Table2 => table2(spec),
        TableId::Table3 | TableId::Table4 => factored_table(spec),
    }
}

fn table1(spec: &TableSpec) -> Result<Table> {
    let mut header = vec!["n".to_string()];
    header.extend(spec.ks.iter().map(|&k| poly_name(k)));
    header.extend(spec.ks.iter().map(|k| format!("d_{{n,{k}}}")));
    let mut caches = spec.ks.iter().map(|&k| SequenceCache::new(k)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for &n in &spec.rows {
        let mut row = vec![n.to_string()];
        let mut degs = Vec::new();
        for cache in caches.iter_mut() {
            let k = cache.k();
            let p = profile(n, k)?;
            if p.vanishes {
                row.push(String::new());
                degs.push(String::new());
                continue;
            }
            // the Tribonacci and Quadranacci columns stop at n = -14
            row.push(if k < 5 && n < -14 { "...".to_string() } else { expanded_text(cache.get(n)) });
            degs.push(p.degree.exact().map(|d| d.to_string()).unwrap_or_default());
        }
        row.extend(degs);
        rows.push(row);
    }
    Ok(Table { which: spec.which, header, rows })
}

fn table2(spec: &TableSpec) -> Result<Table> {
    let k = spec.ks[0];
    let cols = 3 * k as usize;
    let depth = spec.rows.iter().map(|m| m.unsigned_abs() as usize).max().unwrap_or(0);
    let tri = negative_rows(k, depth, cols);
    let tags = tag_grid(k, depth, cols);
    let mut header = vec!["m\\j".to_string()];
    header.extend((0..cols).map(|j| j.to_string()));
    let rows = spec
        .rows
        .iter()
        .map(|&m| {
            let i = m.unsigned_abs() as usize - 1;
            let mut row = vec![m.to_string()];
            row.extend((0..cols).map(|j| match tags[i][j] {
                Some(t) => format!("{}^{t}", tri[i].get(j)),
                None => tri[i].get(j).to_string(),
            }));
            row
        })
        .collect();
    Ok(Table { which: spec.which, header, rows })
}

fn factored_table(spec: &TableSpec) -> Result<Table> {
    let mut header = vec!["n".to_string()];
    header.extend(spec.ks.iter().map(|&k| poly_name(k)));
    header.extend(spec.ks.iter().map(|k| format!("rho_{{n,{k}}}")));
    let mut caches = spec.ks.iter().map(|&k| SequenceCache::new(k)).collect::<Result<Vec<_>>>()?;
    let mut rows = Vec::new();
    for &n in &spec.rows {
        let mut row = vec![n.to_string()];
        let mut rhos = Vec::new();
        for cache in caches.iter_mut() {
            let k = cache.k();
            // positive rows run to n = 2(k+1)
            if n > 2 * (k as i64 + 1) {
                row.push(String::new());
                rhos.push(String::new());
                continue;
            }
            let p = profile(n, k)?;
            rhos.push(p.rho.to_string());
            if p.vanishes {
                row.push(String::new());
            } else {
                let f = cache.get(n).clone();
                row.push(factored_text(&factorize(&f, n, k)?));
            }
        }
        row.extend(rhos);
        rows.push(row);
    }
    Ok(Table { which: spec.which, header, rows })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row_of(t: &Table, n: i64) -> &Vec<String> {
        t.rows.iter().find(|r| r[0] == n.to_string()).unwrap()
    }

    #[test]
    fn table1_cells() {
        let t = table(TableId::Table1).unwrap();
        assert_eq!(t.rows.len(), 24);
        let r = row_of(&t, -13);
        assert_eq!((r[1].as_str(), r[4].as_str()), ("6x^2 +9x^5 +3x^8", "8"));
        let r = row_of(&t, -23);
        assert_eq!(r[1..].to_vec(), ["...", "...", "x^4", "21", "20", "4"]);
        assert!(row_of(&t, 0)[1..].iter().all(String::is_empty));
    }

    #[test]
    fn table2_row() {
        let t = table(TableId::Table2).unwrap();
        let r = row_of(&t, -3);
        assert_eq!(r[1..5].to_vec(), ["1^i", "-3^j", "3^k", "-1^l"]);
        let plain: Vec<String> = r[1..].iter().map(|c| c.split('^').next().unwrap().to_string()).collect();
        assert_eq!(plain.join(" "), "1 -3 3 -1 3 -9 9 -3 6 -18 18 -6");
    }

    #[test]
    fn table4_cells() {
        let t = table(TableId::Table4).unwrap();
        let r = row_of(&t, -14);
        assert_eq!((r[2].as_str(), r[4].as_str()), ("-x^3", "0"));
        let r = row_of(&t, -10);
        assert_eq!((r[2].as_str(), r[4].as_str()), ("", "3"));
    }

    #[test]
    fn text_is_stable() {
        let a = table(TableId::Table3).unwrap().render_text();
        let b = table(TableId::Table3).unwrap().render_text();
        assert_eq!(a, b);
        assert!(a.starts_with("n "));
        assert!(a.lines().all(|l| l == l.trim_end()));
    }
}
