#![allow(dead_code)]

pub mod props;

use std::collections::BTreeMap;

use kfib_core::tables::{table, TableId};
use kfib_core::triangle::{assemble_neg, assemble_pos};
use kfib_core::{poly, IntPoly};
use serde::Deserialize;

const REFERENCE_TABLES: &str = include_str!("../data/reference_tables.tex");
const ERRATA: &str = include_str!("../data/errata.json");

#[derive(Debug, Clone, Deserialize)]
pub struct Erratum {
    pub table: String,
    pub n: i64,
    pub column: usize,
    pub kind: String,
    pub printed: String,
    pub corrected: String,
    pub note: String,
}

pub fn errata() -> Vec<Erratum> {
    serde_json::from_str(ERRATA).expect("errata.json")
}

/// LaTeX cell text reduced to the plain form used by the renderer, with all
/// whitespace removed.
pub fn normalize_latex(cell: &str) -> String {
    let s = cell
        .replace("\\dots", "...")
        .replace("^{\\;\\;}", "")
        .replace("^{\\;}", "")
        .replace("\\ell", "l")
        .replace(['$', '{', '}'], "");
    squash(&s)
}

pub fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

/// Data rows of each printed table keyed by the first cell.
pub fn golden() -> BTreeMap<String, Vec<Vec<String>>> {
    let mut out = BTreeMap::new();
    let mut name = String::new();
    let mut body = String::new();
    let flush = |name: &str, body: &str, out: &mut BTreeMap<String, Vec<Vec<String>>>| {
        if name.is_empty() {
            return;
        }
        let rows = body
            .split("\\\\")
            .map(|r| r.replace("\\hline", ""))
            .map(|r| r.split('&').map(normalize_latex).collect::<Vec<_>>())
            .filter(|r| r[0].parse::<i64>().is_ok())
            .collect();
        out.insert(name.to_string(), rows);
    };
    for line in REFERENCE_TABLES.lines() {
        if let Some(t) = line.strip_prefix("%% ") {
            flush(&name, &body, &mut out);
            name = t.trim().to_string();
            body.clear();
        } else {
            body.push_str(line);
            body.push('\n');
        }
    }
    flush(&name, &body, &mut out);
    out
}

/// Parses `c x^r (A)^e (B) ...` into the product polynomial.
pub fn parse_product(text: &str) -> IntPoly {
    let s = squash(text).replace(['{', '}'], "");
    let Some(open) = s.find('(') else {
        return s.parse().expect("polynomial");
    };
    let mut acc = match &s[..open] {
        "" => IntPoly::one(),
        "-" => IntPoly::constant(-1),
        p => p.parse().expect("prefix"),
    };
    let mut rest = &s[open..];
    while let Some(inner) = rest.strip_prefix('(') {
        let close = inner.find(')').expect("closing parenthesis");
        let factor: IntPoly = inner[..close].parse().expect("factor");
        rest = &inner[close + 1..];
        let mut e = 1;
        if let Some(tail) = rest.strip_prefix('^') {
            let digits: String = tail.chars().take_while(char::is_ascii_digit).collect();
            e = digits.parse().expect("exponent");
            rest = &tail[digits.len()..];
        }
        acc = &acc * &factor.pow(e);
    }
    assert!(rest.is_empty(), "trailing text in {text}");
    acc
}

pub fn table_id(name: &str) -> TableId {
    name.parse().expect("table name")
}

/// `k` of a polynomial column in the factored tables.
pub fn column_k(column: usize) -> u32 {
    column as u32 + 2
}

fn oracle(n: i64, k: u32) -> IntPoly {
    if n > 0 {
        assemble_pos(k, n).unwrap()
    } else {
        assemble_neg(k, n).unwrap()
    }
}

#[derive(Debug, Default)]
pub struct GoldenReport {
    pub cells: usize,
    pub exact: usize,
    pub errata: Vec<String>,
    pub failures: Vec<String>,
}

/// Compares every printed cell with the rendered tables. A mismatch passes
/// only if it is a listed erratum whose correction is proven: the printed
/// text is not `F_{n,k}` (or is, for a style erratum), the corrected text
/// expands to `F_{n,k}`, and `F_{n,k}` agrees with the triangle assembly.
pub fn compare_with_reference() -> GoldenReport {
    let errata = errata();
    let mut rep = GoldenReport::default();
    for (name, rows) in golden() {
        let ours = table(table_id(&name)).unwrap();
        for row in rows {
            let Some(mine) = ours.rows.iter().find(|r| r[0] == row[0]) else {
                rep.failures.push(format!("{name}: row {} missing", row[0]));
                continue;
            };
            let width = mine.len().max(row.len());
            for c in 0..width {
                let printed = row.get(c).map_or("", String::as_str);
                let got = squash(mine.get(c).map_or("", String::as_str));
                rep.cells += 1;
                if printed == got {
                    rep.exact += 1;
                    continue;
                }
                let n: i64 = row[0].parse().unwrap();
                let here = format!("{name} n={n} col={c}");
                match errata.iter().find(|e| e.table == name && e.n == n && e.column == c) {
                    None => rep.failures.push(format!("{here}: printed `{printed}`, rendered `{got}`")),
                    Some(e) => match check_erratum(e, printed, &got) {
                        Ok(()) => rep.errata.push(format!("{here}: {} erratum, `{}` -> `{}`", e.kind, e.printed, e.corrected)),
                        Err(msg) => rep.failures.push(format!("{here}: {msg}")),
                    },
                }
            }
        }
    }
    rep
}

fn check_erratum(e: &Erratum, printed: &str, got: &str) -> Result<(), String> {
    if normalize_latex(&e.printed) != printed {
        return Err("erratum text does not match the printed cell".into());
    }
    if squash(&e.corrected) != got {
        return Err(format!("rendered `{got}` differs from the correction `{}`", e.corrected));
    }
    let k = column_k(e.column);
    let f = poly(e.n, k).unwrap();
    if f != oracle(e.n, k) {
        return Err("recurrence and triangle assembly disagree".into());
    }
    if parse_product(&e.corrected) != f {
        return Err("correction does not expand to F".into());
    }
    let printed_is_f = parse_product(printed) == f;
    match e.kind.as_str() {
        "value" if printed_is_f => Err("printed cell is actually correct".into()),
        "style" if !printed_is_f => Err("printed cell is not F".into()),
        "value" | "style" => Ok(()),
        other => Err(format!("unknown erratum kind {other}")),
    }
}
