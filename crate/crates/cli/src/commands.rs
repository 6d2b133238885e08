use std::fmt::Write as _;
use std::path::Path;

use kfib_core::closedform::{root_product, root_sum, sigma};
use kfib_core::factor::{factored_text, factorize};
use kfib_core::figures::{fig1_csv, fig2_csv, fig3_csv, FIG1_DEFAULT, FIG2_DEFAULT, FIG3_DEFAULT};
use kfib_core::index::{profile, vanishing_count, vanishing_indices};
use kfib_core::roots::{argand_csv, find_roots, zeta_csv, zeta_sweep};
use kfib_core::tables::{table, Table};
use kfib_core::triangle::{negative_rows, positive_rows, tag_grid};
use kfib_core::verify::{self, Suite, VerifyConfig};
use kfib_core::{poly, Error, IntPoly};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use crate::{Cli, Command, Format, Index};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                Error::KTooSmall(_)
                | Error::VanishingIndex { .. }
                | Error::MonomialIndex { .. }
                | Error::IndexOutOfRange { .. }
                | Error::Parse { .. },
            ) => 2,
            CliError::Core(_) | CliError::Io(_) => 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, failed: false }
    }
}

type Res = Result<Output, CliError>;

fn to_json(v: &impl Serialize) -> Result<String, CliError> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

/// Writes `data` to `path` when given, otherwise returns it for stdout.
fn sink(path: Option<&Path>, data: String) -> Res {
    match path {
        Some(p) => {
            std::fs::write(p, data)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(data)),
    }
}

/// `x^2(1+x^3)^2(6+x^3)` becomes `x^2*(1+x^3)^2*(6+x^3)`.
pub fn starred(text: &str) -> String {
    let mut out = String::with_capacity(text.len() + 4);
    for (i, ch) in text.char_indices() {
        if ch == '(' && i > 0 && !text[..i].ends_with('-') {
            out.push('*');
        }
        out.push(ch);
    }
    out
}

pub fn run(cli: &Cli) -> Res {
    let f = cli.format;
    match &cli.command {
        Command::Eval { idx, at } => eval(f, idx, at.as_deref()),
        Command::Profile { idx } => {
            let p = profile(idx.n, idx.k)?;
            match f {
                Format::Json => Ok(Output::ok(to_json(&p)?)),
                Format::Csv => Ok(Output::ok(format!(
                    "n,k,q,r,rho,vanishes,degree\n{},{},{},{},{},{},{}\n",
                    p.n,
                    p.k,
                    p.q,
                    p.r,
                    p.rho,
                    p.vanishes,
                    p.degree.exact().map_or(String::new(), |d| d.to_string())
                ))),
                Format::Text => Ok(Output::ok(format!(
                    "n={} k={} q={} r={} rho={} vanishes={} degree={}\n",
                    p.n,
                    p.k,
                    p.q,
                    p.r,
                    p.rho,
                    p.vanishes,
                    p.degree.exact().map_or("undefined".into(), |d| d.to_string())
                ))),
            }
        }
        Command::Vanish { k } => {
            let blocks: Vec<(i64, i64)> = vanishing_indices(*k)?.into_iter().map(|b| (*b.start(), *b.end())).collect();
            match f {
                Format::Json => Ok(Output::ok(to_json(&json!({ "k": k, "count": vanishing_count(*k), "blocks": blocks }))?)),
                Format::Csv => {
                    let mut s = String::from("lo,hi\n");
                    for (a, b) in &blocks {
                        let _ = writeln!(s, "{a},{b}");
                    }
                    Ok(Output::ok(s))
                }
                Format::Text => {
                    let mut s = format!("k={k} count={}\n", vanishing_count(*k));
                    for (a, b) in &blocks {
                        let _ = writeln!(s, "[{a}, {b}]");
                    }
                    Ok(Output::ok(s))
                }
            }
        }
        Command::Triangle { k, rows, cols, negative, tag } => triangle(f, *k, *rows, *cols, *negative, *tag),
        Command::Factor { idx } => {
            let p = poly(idx.n, idx.k)?;
            if p.is_zero() {
                return Err(Error::VanishingIndex { n: idx.n, k: idx.k }.into());
            }
            let fac = factorize(&p, idx.n, idx.k)?;
            let text = starred(&factored_text(&fac));
            match f {
                Format::Json => Ok(Output::ok(to_json(&json!({
                    "n": fac.n, "k": fac.k, "r": fac.r, "rho": fac.rho, "q_xi": fac.q_xi, "text": text
                }))?)),
                Format::Csv => Ok(Output::ok(format!("n,k,r,rho,factored\n{},{},{},{},{text}\n", fac.n, fac.k, fac.r, fac.rho))),
                Format::Text => Ok(Output::ok(text + "\n")),
            }
        }
        Command::Sigma { idx } => {
            let spec = sigma(idx.n, idx.k)?;
            let sum = root_sum(idx.n, idx.k)?;
            let prod = root_product(idx.n, idx.k)?;
            let sig: Vec<String> = spec.sigma.iter().map(|v| v.to_string()).collect();
            match f {
                Format::Json => Ok(Output::ok(to_json(&json!({
                    "n": idx.n, "k": idx.k, "count": spec.count, "sigma": sig,
                    "sum": sum.to_string(), "product": prod.to_string()
                }))?)),
                Format::Csv => {
                    let mut s = String::from("h,sigma\n");
                    for (h, v) in sig.iter().enumerate() {
                        let _ = writeln!(s, "{},{v}", h + 1);
                    }
                    Ok(Output::ok(s))
                }
                Format::Text => {
                    let mut s = format!("N={}\n", spec.count);
                    for (h, v) in sig.iter().enumerate() {
                        let _ = writeln!(s, "sigma_{} = {v}", h + 1);
                    }
                    let _ = writeln!(s, "sum = {sum}\nproduct = {prod}");
                    Ok(Output::ok(s))
                }
            }
        }
        Command::Roots { idx } => {
            let rep = find_roots(idx.n, idx.k, cli.tol)?;
            match f {
                Format::Csv => {
                    let mut s = String::from("re,im\n");
                    for z in &rep.xi_roots {
                        let _ = writeln!(s, "{},{}", z.re, z.im);
                    }
                    Ok(Output::ok(s))
                }
                _ => Ok(Output::ok(to_json(&rep)?)),
            }
        }
        Command::Zeta { k, from, to, csv } => {
            if from > to {
                return Err(CliError::Usage(format!("--from {from} exceeds --to {to}")));
            }
            let pts = zeta_sweep(*k, *from, *to, cli.tol)?;
            if f == Format::Json && csv.is_none() {
                return Ok(Output::ok(to_json(&pts)?));
            }
            sink(csv.as_deref(), zeta_csv(&pts))
        }
        Command::Argand { idx, csv } => {
            let rep = find_roots(idx.n, idx.k, cli.tol)?;
            sink(csv.as_deref(), argand_csv(&rep))
        }
        Command::Table { which } => {
            let t = table(which.parse()?)?;
            match f {
                Format::Json => Ok(Output::ok(to_json(&t)?)),
                Format::Csv => Ok(Output::ok(table_csv(&t)?)),
                Format::Text => Ok(Output::ok(t.render_text())),
            }
        }
        Command::Verify { k_max, n_abs_max, suites, output } => {
            let suites = if suites.is_empty() {
                Suite::ALL.into_iter().collect()
            } else {
                suites.iter().map(|s| s.parse()).collect::<Result<_, _>>()?
            };
            let cfg = VerifyConfig { k_max: *k_max, n_abs_max: *n_abs_max, tol: cli.tol, suites };
            let rep = verify::run(&cfg)?;
            let body = match f {
                Format::Json => to_json(&rep)?,
                Format::Csv => rep.render_csv(),
                Format::Text => rep.render_text(),
            };
            let mut out = sink(output.as_deref(), body)?;
            out.failed = !rep.passed();
            Ok(out)
        }
        Command::FigureData { figure, k, n, from, to, csv } => {
            let data = match figure.as_str() {
                "fig1" => {
                    let (dk, a, b) = FIG1_DEFAULT;
                    fig1_csv(k.unwrap_or(dk), from.unwrap_or(a), to.unwrap_or(b))?
                }
                "fig2" => match (n, k) {
                    (Some(n), Some(k)) => fig2_csv(&[(*n, *k)], cli.tol)?,
                    (None, None) => fig2_csv(&FIG2_DEFAULT, cli.tol)?,
                    _ => return Err(CliError::Usage("fig2 needs both --n and --k, or neither".into())),
                },
                _ => match k {
                    Some(k) => {
                        let (a, b) = (from.unwrap_or(1), to.unwrap_or(100));
                        fig3_csv(&[(*k, a, b)], cli.tol)?
                    }
                    None => fig3_csv(&FIG3_DEFAULT, cli.tol)?,
                },
            };
            sink(csv.as_deref(), data)
        }
    }
}

fn eval(f: Format, idx: &Index, at: Option<&str>) -> Res {
    let p = poly(idx.n, idx.k)?;
    let value = match at {
        None => None,
        Some(s) => {
            let t: BigRational = s.trim().parse().map_err(|_| CliError::Usage(format!("not a rational number: {s}")))?;
            Some(p.eval_rational(&t))
        }
    };
    Ok(Output::ok(match f {
        Format::Json => to_json(&json!({
            "n": idx.n, "k": idx.k, "poly": p, "value": value.as_ref().map(|v| v.to_string())
        }))?,
        Format::Csv => match &value {
            Some(v) => format!("n,k,value\n{},{},{v}\n", idx.n, idx.k),
            None => poly_csv(&p),
        },
        Format::Text => match &value {
            Some(v) => format!("{v}\n"),
            None => format!("{p}\n"),
        },
    }))
}

fn poly_csv(p: &IntPoly) -> String {
    let mut s = String::from("exponent,coefficient\n");
    for (e, c) in p.terms() {
        let _ = writeln!(s, "{e},{c}");
    }
    s
}

fn triangle(f: Format, k: u32, rows: usize, cols: Option<usize>, negative: bool, tag: bool) -> Res {
    let grid: Vec<(i64, Vec<String>)> = if negative {
        let cols = cols.unwrap_or(3 * k as usize);
        let tags = tag.then(|| tag_grid(k, rows, cols));
        negative_rows(k, rows, cols)
            .into_iter()
            .enumerate()
            .map(|(i, row)| {
                let cells = (0..cols)
                    .map(|j| match tags.as_ref().and_then(|t| t[i][j]) {
                        Some(c) => format!("{}^{c}", row.get(j)),
                        None => row.get(j).to_string(),
                    })
                    .collect();
                (row.m, cells)
            })
            .collect()
    } else {
        if tag {
            return Err(CliError::Usage("--tag applies to --negative rows".into()));
        }
        positive_rows(k, rows).into_iter().map(|r| (r.m, r.coeffs.iter().map(|c| c.to_string()).collect())).collect()
    };
    Ok(Output::ok(match f {
        Format::Json => to_json(&grid.iter().map(|(m, c)| json!({ "m": m, "cells": c })).collect::<Vec<_>>())?,
        Format::Csv => {
            let mut s = String::from("m,j,value\n");
            for (m, cells) in &grid {
                for (j, c) in cells.iter().enumerate() {
                    let _ = writeln!(s, "{m},{j},{c}");
                }
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (m, cells) in &grid {
                let _ = writeln!(s, "{m}: {}", cells.join(" "));
            }
            s
        }
    }))
}

fn table_csv(t: &Table) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(&t.header)?;
    for row in &t.rows {
        w.write_record(row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("utf-8"))
}
