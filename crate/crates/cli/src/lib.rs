//! `emw`: command-line front end for `emw-core`.
//!
//! Every subcommand builds a [`output::Document`] and renders it as CSV or
//! JSON on stdout. Exit codes: 0 success, 1 usage, 2 domain error,
//! 3 divisor budget exceeded, 4 internal consistency failure.

pub mod commands;
pub mod output;

use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Args, Parser, Subcommand};
use emw_core::candidates::CaseKind;
use emw_core::{DivisorBudget, Error, Rat};

use output::{render, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "emw", version, about = "Exact-arithmetic workbench for S(m-1, k) = m^k")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Decimal places for floating-point columns (1..=50).
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=50))]
    pub digits: u32,

    /// Add exact rational columns where a command has them.
    #[arg(long, global = true)]
    pub exact: bool,

    /// Worker threads / search shards. Output does not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub jobs: Option<u32>,

    /// Largest trial divisor used when enumerating divisors.
    #[arg(long, global = true, default_value_t = DivisorBudget::DEFAULT_MAX_TRIAL)]
    pub trial_budget: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Direct power sum against the remainder-free Euler–Maclaurin expansion.
    Sum {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        m: u64,
    },
    /// Two-term approximant, first correction and truncations at rational m.
    Approx {
        #[arg(long)]
        k: u32,
        /// Evaluation point, an integer or `p/q`.
        #[arg(long, value_parser = parse_rat)]
        m: Rat,
        /// Number of correction terms for the truncated expansion (default: all).
        #[arg(long)]
        p: Option<i64>,
    },
    /// Coefficients of the cleared polynomial (ascending powers).
    Poly {
        #[arg(long)]
        k: u32,
        /// The exact full-expansion polynomial instead of the approximant.
        #[arg(long, conflicts_with = "q")]
        full_eml: bool,
        /// The quotient by m (odd k only).
        #[arg(long)]
        q: bool,
    },
    /// Rational-root candidates.
    Candidates {
        #[arg(long)]
        k: u32,
    },
    /// Signs of the cleared polynomial at every candidate up to k_max.
    Signs {
        #[arg(long)]
        k_max: u32,
    },
    /// Case ratio R over a k range.
    Ratios {
        #[arg(long, value_parser = parse_case)]
        case: CaseKind,
        /// `a..b` or a single value.
        #[arg(long, value_parser = parse_range_u32)]
        k: RangeInclusive<u32>,
        #[arg(long, default_value_t = 2)]
        step: u32,
    },
    /// Sign crossing of S(m-1,k) - m^k against 3(k+1)/2.
    Threshold {
        #[arg(long, value_parser = parse_range_u32)]
        k: RangeInclusive<u32>,
    },
    /// Brute-force search for S(m-1,k) = m^k.
    Search {
        #[arg(long, value_parser = parse_range_u32)]
        k: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range_u64)]
        m: RangeInclusive<u64>,
    },
    /// Dataset of the approximant against the exact sum over a (k, m) grid.
    Figure1 {
        #[arg(long, value_parser = parse_range_u32, default_value = "2..102")]
        k: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range_u64, default_value = "3..200")]
        m: RangeInclusive<u64>,
    },
    /// Dataset of the cleared polynomial and ratio R at highlighted candidates.
    Figure2 {
        #[arg(long, default_value_t = 40)]
        k_to: u32,
    },
}

fn parse_range<T: std::str::FromStr + PartialOrd + Copy>(s: &str) -> Result<RangeInclusive<T>, String> {
    let parse = |t: &str| t.trim().parse::<T>().map_err(|_| format!("invalid number '{t}'"));
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(format!("empty range '{s}'"));
            }
            Ok(a..=b)
        }
        None => {
            let v = parse(s)?;
            Ok(v..=v)
        }
    }
}

fn parse_range_u32(s: &str) -> Result<RangeInclusive<u32>, String> {
    parse_range(s)
}

fn parse_range_u64(s: &str) -> Result<RangeInclusive<u64>, String> {
    parse_range(s)
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: emw_core::Int = n.trim().parse().map_err(|_| format!("invalid numerator in '{s}'"))?;
        let d: emw_core::Int = d.trim().parse().map_err(|_| format!("invalid denominator in '{s}'"))?;
        if num_traits::Zero::is_zero(&d) {
            return Err("zero denominator".into());
        }
        Ok(Rat::new(n, d))
    } else {
        s.parse::<emw_core::Int>().map(Rat::from_integer).map_err(|_| format!("invalid rational '{s}'"))
    }
}

fn parse_case(s: &str) -> Result<CaseKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Domain(_) => EXIT_DOMAIN,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Inconsistency(_) => EXIT_INTERNAL,
    }
}

fn execute(cli: &Cli) -> emw_core::Result<commands::Outcome> {
    let budget = DivisorBudget::new(cli.global.trial_budget)?;
    commands::dispatch(&cli.command, &cli.global, budget)
}

#[cfg(feature = "parallel")]
fn with_jobs<R: Send>(jobs: Option<u32>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n as usize).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        },
        None => f(),
    }
}

#[cfg(not(feature = "parallel"))]
fn with_jobs<R: Send>(_jobs: Option<u32>, f: impl FnOnce() -> R + Send) -> R {
    f()
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = with_jobs(cli.global.jobs, || execute(&cli));
    match result {
        Ok(commands::Outcome { doc, warnings }) => {
            for w in warnings {
                let _ = writeln!(err, "warning: {w}");
            }
            match render(&doc, cli.global.format, cli.global.digits as usize, out) {
                Ok(()) => EXIT_OK,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_INTERNAL
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
