//! `riordan`: convergence runs for γ and e, Gregory coefficients, and
//! Riordan matrices from series files.
//!
//! Exit status is 0 on success, 2 for usage or input errors, 3 when the
//! inputs are well formed but outside an operation's domain, 1 for I/O.

mod commands;
mod error;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(name = "riordan", version, about = "Exact Riordan-array computations for γ and e")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Partial sums Σ_{m=1}^{N} L_m/m against Euler's constant.
    Gamma {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Matrix-product partial sums against pq/(pq-1)·e^{d/p}.
    #[command(allow_negative_numbers = true)]
    Euler {
        #[arg(short = 'p', long)]
        p: i64,
        #[arg(short = 'q', long)]
        q: i64,
        #[arg(short = 'd', long, default_value_t = 1)]
        d: i64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Gregory coefficients L_0 ..= L_N as exact rationals.
    Gregory {
        #[arg(long, value_parser = positive)]
        terms: u64,
        /// Verify Σ_{m=0}^{n-1} L_m/(n-m) = 0 for n = 2..N.
        #[arg(long)]
        check: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The N×N matrix of one element, optionally inverted.
    Matrix {
        /// f in group notation, G in standard notation.
        #[arg(long, value_name = "FILE")]
        multiplier: PathBuf,
        /// g in group notation, F in standard notation; defaults to x.
        #[arg(long, value_name = "FILE")]
        generator: Option<PathBuf>,
        #[arg(long)]
        invert: bool,
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// The N×N matrix of the product of two elements.
    Product {
        #[arg(long, value_name = "FILE")]
        multiplier1: PathBuf,
        #[arg(long, value_name = "FILE")]
        generator1: Option<PathBuf>,
        #[arg(long, value_name = "FILE")]
        multiplier2: PathBuf,
        #[arg(long, value_name = "FILE")]
        generator2: Option<PathBuf>,
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Debug, Args)]
struct RunArgs {
    /// Number of terms N.
    #[arg(long, value_parser = positive, conflicts_with = "sweep")]
    terms: Option<u64>,
    /// Comma-separated, strictly increasing term counts; one report each.
    #[arg(long, value_delimiter = ',', value_parser = positive)]
    sweep: Option<Vec<u64>>,
    /// Include up to this many per-term contributions in JSON output.
    #[arg(long, value_name = "COUNT")]
    per_term: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct ShapeArgs {
    #[arg(long, value_parser = positive)]
    dim: u64,
    #[arg(long, value_enum, default_value_t = Notation::Group)]
    notation: Notation,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 128, value_parser = precision)]
    precision_bits: u64,
    /// Significant digits in decimal output.
    #[arg(long, default_value_t = 20, value_parser = positive)]
    digits: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

/// How a (multiplier, generator) pair of files is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Notation {
    /// (f, g): column m is f·ḡ^m.
    Group,
    /// [G, F]: column m is G·F^m.
    Standard,
}

fn positive(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

fn precision(s: &str) -> Result<u64, String> {
    let bits = s.parse::<u64>().map_err(|e| e.to_string())?;
    if bits < riordan::real::MIN_PRECISION_BITS as u64 {
        return Err(format!("must be at least {}", riordan::real::MIN_PRECISION_BITS));
    }
    Ok(bits)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("riordan: {e}");
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gamma { run } => {
            let plan = run.plan()?;
            let text = commands::gamma(&plan)?;
            run.out.emit(&text)
        }
        Command::Euler { p, q, d, run } => {
            commands::check_euler(p, q, d)?;
            let plan = run.plan()?;
            let text = commands::euler(p, q, d, &plan)?;
            run.out.emit(&text)
        }
        Command::Gregory { terms, check, out } => {
            let listing = commands::gregory(terms as usize, out.format, check)?;
            out.emit(&listing.data)?;
            if let Some(status) = listing.check {
                // Keep machine-readable output clean.
                if out.format == Format::Table && out.output.is_none() {
                    println!("{status}");
                } else {
                    eprintln!("{status}");
                }
            }
            if listing.failed {
                return Err(CliError::Domain(riordan::Error::IdentityViolated("Gregory recursion".into())));
            }
            Ok(())
        }
        Command::Matrix { multiplier, generator, invert, shape, out } => {
            let element = commands::load_element(&multiplier, generator.as_deref(), shape.dim as usize, shape.notation)?;
            let text = commands::matrix(&element, shape.dim as usize, invert, &out.render())?;
            out.emit(&text)
        }
        Command::Product { multiplier1, generator1, multiplier2, generator2, shape, out } => {
            let dim = shape.dim as usize;
            let left = commands::load_element(&multiplier1, generator1.as_deref(), dim, shape.notation)?;
            let right = commands::load_element(&multiplier2, generator2.as_deref(), dim, shape.notation)?;
            let text = commands::product(&left, &right, dim, &out.render())?;
            out.emit(&text)
        }
    }
}

impl RunArgs {
    fn plan(&self) -> Result<commands::RunPlan, CliError> {
        let sweep: Vec<usize> = match (&self.terms, &self.sweep) {
            (Some(n), None) => vec![*n as usize],
            (None, Some(list)) => list.iter().map(|&n| n as usize).collect(),
            _ => return Err(CliError::Usage("one of --terms or --sweep is required".into())),
        };
        if sweep.windows(2).any(|w| w[0] >= w[1]) {
            return Err(CliError::Usage("--sweep values must be strictly increasing".into()));
        }
        Ok(commands::RunPlan { sweep, per_term: self.per_term, render: self.out.render() })
    }
}

impl OutputArgs {
    fn render(&self) -> commands::Render {
        commands::Render {
            format: self.format,
            precision_bits: self.precision_bits as usize,
            digits: self.digits as usize,
        }
    }

    fn emit(&self, text: &str) -> Result<(), CliError> {
        match &self.output {
            Some(path) => std::fs::write(path, text)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source }),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}
