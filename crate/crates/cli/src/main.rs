//! `kfib`: exact k-generalized Fibonacci polynomials from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
//! error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "kfib", version, about = "Exact k-generalized Fibonacci polynomials for all integer n")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Backward-error tolerance for root computations.
    #[arg(long, global = true, default_value_t = kfib_core::roots::DEFAULT_TOL)]
    pub tol: f64,

    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct Index {
    #[arg(long, short)]
    pub k: u32,
    #[arg(long, short, allow_hyphen_values = true)]
    pub n: i64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print F_{n,k}, or its value at a rational point.
    Eval {
        #[command(flatten)]
        idx: Index,
        /// Rational evaluation point such as `1`, `-2` or `3/4`.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// q, r, rho, vanishing flag and degree of an index.
    Profile {
        #[command(flatten)]
        idx: Index,
    },
    /// The identically vanishing indices for k.
    Vanish {
        #[arg(long, short)]
        k: u32,
    },
    /// Rows of the left-justified k-nomial triangle.
    Triangle {
        #[arg(long, short)]
        k: u32,
        /// Number of rows.
        #[arg(long, default_value_t = 3)]
        rows: usize,
        /// Number of columns (negative rows only).
        #[arg(long)]
        cols: Option<usize>,
        /// Print the rows -1, -2, ... instead of 0, 1, ...
        #[arg(long)]
        negative: bool,
        /// Tag each negative-row cell with the polynomial it belongs to.
        #[arg(long)]
        tag: bool,
    },
    /// Factored form x^r (1+x^k)^rho Q(x^k).
    Factor {
        #[command(flatten)]
        idx: Index,
    },
    /// Elementary symmetric polynomials of the roots in x^k.
    Sigma {
        #[command(flatten)]
        idx: Index,
    },
    /// Roots of P_{n,k} in x^k, as JSON.
    Roots {
        #[command(flatten)]
        idx: Index,
    },
    /// zeta_{n,k} over a range of n.
    Zeta {
        #[arg(long, short)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, allow_hyphen_values = true)]
        to: i64,
        /// Write `n,zeta,r` rows here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Roots of F_{n,k} in the complex plane.
    Argand {
        #[command(flatten)]
        idx: Index,
        /// Write `re,im` rows here instead of standard output.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// One of the four reference tables.
    Table {
        #[arg(value_parser = ["table1", "table2", "table3", "table4"])]
        which: String,
    },
    /// Run the cross-check suites.
    Verify {
        #[arg(long, default_value_t = 6)]
        k_max: u32,
        #[arg(long, default_value_t = 150)]
        n_abs_max: i64,
        /// Suites to run (repeatable); all when omitted.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// CSV data behind the figures.
    FigureData {
        #[arg(value_parser = ["fig1", "fig2", "fig3"])]
        figure: String,
        #[arg(long, short)]
        k: Option<u32>,
        #[arg(long, short, allow_hyphen_values = true)]
        n: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        from: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        to: Option<i64>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
