//! `biharm`: run verification scenarios and expose root isolation.
//!
//! Exit status is 0 when the aggregate status is pass, 1 when a check fails
//! or is inconclusive, and 2 for usage and parse errors.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use biharm_core::exact::{format_rational, midpoint, parse_rational, to_decimal, Rational, RationalInterval};
use biharm_core::multipoly::MultiPoly;
use biharm_core::realalg::{isolate_roots, refine_root};
use biharm_core::report::{
    run_all, run_scenario, to_json, to_markdown, AggregateReport, Params, ReportError, Scenario, ScenarioId, Status,
    VerificationReport,
};
use biharm_core::tubes::FamilyTag;

#[derive(Parser)]
#[command(name = "biharm", version, about = "Exact verification of biharmonic real hypersurfaces in CP^n(4)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification scenarios.
    Verify {
        #[command(subcommand)]
        target: Target,
    },
    /// Count, isolate and refine the real roots of a univariate polynomial.
    Roots {
        #[arg(long)]
        poly: String,
        /// Interval such as "(0,inf)" or "[1,2]".
        #[arg(long, default_value = "(-inf,inf)")]
        interval: String,
        /// Width of the refined enclosures, as a rational.
        #[arg(long, default_value = "1/1000000000000")]
        width: String,
    },
}

#[derive(clap::Args, Clone)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Record per-step wall-clock times (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Subcommand)]
enum Target {
    /// Every scenario with its default sweep.
    All {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        precision_bits: u32,
        #[command(flatten)]
        output: Output,
    },
    /// One homogeneous tube.
    Tube {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u32>,
        #[command(flatten)]
        output: Output,
    },
    /// One of the two non-Hopf elimination chains.
    Chain {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        case: u8,
        #[arg(long, default_value_t = 5)]
        d_samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// The ruled-hypersurface argument in dimension n.
    Ruled {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        output: Output,
    },
    /// Any scenario by id, with its default parameters.
    Scenario {
        id: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 40)]
        precision_bits: u32,
        #[command(flatten)]
        output: Output,
    },
}

/// Errors that map to exit status 2.
#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage(e: impl std::fmt::Display) -> anyhow::Error {
    UsageError(e.to_string()).into()
}

fn from_report(e: ReportError) -> anyhow::Error {
    usage(e)
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn write_single(r: &VerificationReport, output: &Output) -> Result<Status> {
    let text = match output.format {
        Format::Json => to_json(r),
        Format::Md => to_markdown(r),
    };
    emit(&text, &output.out)?;
    Ok(r.status)
}

fn write_all(r: &AggregateReport, output: &Output) -> Result<Status> {
    let text = match output.format {
        Format::Json => to_json(r),
        Format::Md => to_markdown(r),
    };
    emit(&text, &output.out)?;
    Ok(r.status)
}

fn single(id: ScenarioId, params: Params, output: &Output) -> Result<Status> {
    let s = Scenario::with_params(id, Params { timing: output.timing, ..params });
    let r = run_scenario(&s).map_err(from_report)?;
    write_single(&r, output)
}

fn verify(target: Target) -> Result<Status> {
    match target {
        Target::All { seed, precision_bits, output } => {
            let r = run_all(seed, precision_bits, output.timing).map_err(from_report)?;
            write_all(&r, &output)
        }
        Target::Tube { family, n, m, output } => {
            let tag: FamilyTag = family.parse().map_err(usage)?;
            let s = Scenario::tube(tag, n, m).map_err(from_report)?;
            single(s.id, s.params, &output)
        }
        Target::Chain { case, d_samples, seed, output } => {
            let id = if case == 1 { ScenarioId::Thm2NonhopfCase1 } else { ScenarioId::Thm2NonhopfCase2 };
            let params = Params { d_samples, seed, ..Params::default() };
            if case == 1 && d_samples != Params::default().d_samples {
                return Err(usage("--d-samples applies only to case 2"));
            }
            single(id, params, &output)
        }
        Target::Ruled { n, output } => single(ScenarioId::Ruled, Params { n: Some(n), ..Params::default() }, &output),
        Target::Scenario { id, seed, precision_bits, output } => {
            let id: ScenarioId = id.parse().map_err(from_report)?;
            single(id, Params { seed, precision_bits, ..Params::default() }, &output)
        }
    }
}

/// Points at `position` under a copy of `text`.
fn caret(text: &str, position: usize, message: &str) -> String {
    let col = text.get(..position.min(text.len())).map_or(position, |s| s.chars().count());
    format!("{message} at position {position}\n  {text}\n  {}^", " ".repeat(col))
}

fn roots(poly: &str, interval: &str, width: &str) -> Result<Status> {
    let p: MultiPoly = poly.parse().map_err(|e: biharm_core::multipoly::ParseError| usage(caret(poly, e.position, &e.message)))?;
    let interval: RationalInterval = interval.parse().map_err(|e| usage(format!("interval: {e}")))?;
    let width: Rational = parse_rational(width).map_err(|e| usage(format!("width: {e}")))?;
    if width <= Rational::from_integer(0.into()) {
        return Err(usage("width must be positive"));
    }
    let iso = isolate_roots(&p, &interval).map_err(usage)?;
    let mut out = format!("polynomial: {}\ninterval: {}\nroots: {}\n", iso.polynomial, interval, iso.count());
    let digits = {
        let mut d = 0;
        let mut s = Rational::from_integer(1.into());
        while s > width {
            s /= Rational::from_integer(10.into());
            d += 1;
        }
        d
    };
    for (k, r) in iso.roots.iter().enumerate() {
        let refined = refine_root(&p, &r.interval, &width).map_err(usage)?;
        let approx = match (refined.lo_value(), refined.hi_value()) {
            (Some(lo), Some(hi)) => to_decimal(&midpoint(lo, hi), digits),
            _ => String::from("?"),
        };
        let w = refined.width().map(|w| format_rational(&w)).unwrap_or_default();
        out.push_str(&format!(
            "root {}: isolating {} multiplicity {}; refined {} (width {}) ~ {}\n",
            k + 1,
            r.interval,
            r.multiplicity,
            refined,
            w,
            approx
        ));
    }
    print!("{out}");
    Ok(Status::Pass)
}

fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Verify { target } => verify(target),
        Command::Roots { poly, interval, width } => roots(&poly, &interval, &width),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
