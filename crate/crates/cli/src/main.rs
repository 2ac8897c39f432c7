//! `hgauge`: exact and simulated checks for abelian higher gauge models.

mod commands;
mod models;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hgauge_core::calculus::DEFAULT_ENUM_CAP;
use hgauge_core::sim::Suite;
use hgauge_core::{Error, DEFAULT_MAX_DIM};

use crate::report::Report;

#[derive(Parser, Debug)]
#[command(
    name = "hgauge",
    version,
    about = "Ground-state and operator checks for abelian higher gauge models"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Report format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Largest Hilbert-space dimension the simulator will build.
    #[arg(long, global = true, env = "HGAUGE_MAX_DIM", default_value_t = DEFAULT_MAX_DIM)]
    max_dim: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Args, Debug)]
struct ModelArg {
    /// Path to a model file, or `builtin:NAME` for a bundled model.
    model: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check chain conditions, duality certificates and the expected manifest.
    Validate(ModelArg),
    /// Compute H^p and H_p with representatives.
    Cohomology {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
        /// List representatives only for groups of at most this order.
        #[arg(long, default_value_t = 16)]
        representatives: u64,
    },
    /// Ground-state degeneracy by one or more independent methods.
    Gsd {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
        /// Cap on |hom^0| · |hom^-1| for orbit enumeration.
        #[arg(long, default_value_t = DEFAULT_ENUM_CAP)]
        enum_cap: u64,
    },
    /// Universal-coefficient decomposition of H^p.
    Uct {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        p: i64,
    },
    /// Run simulator property suites.
    Simulate {
        #[command(flatten)]
        model: ModelArg,
        /// Comma-separated suites, or `all`.
        #[arg(long, default_value = "all", value_parser = parse_suites)]
        checks: SuiteList,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Partition function, mean energy and entropy at inverse temperature β.
    Thermo {
        #[command(flatten)]
        model: ModelArg,
        #[arg(long, default_value = "1", value_parser = parse_beta, allow_negative_numbers = true)]
        beta: f64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    Co,
    Ho,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Cohomology,
    Orbits,
    Trace,
    All,
}

#[derive(Clone, Debug)]
struct SuiteList(Vec<Suite>);

fn parse_suites(s: &str) -> Result<SuiteList, String> {
    if s.trim() == "all" {
        return Ok(SuiteList(Suite::ALL.to_vec()));
    }
    let suites = s
        .split(',')
        .map(|part| part.trim().parse::<Suite>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    if suites.is_empty() {
        return Err("no suites given".into());
    }
    Ok(SuiteList(suites))
}

fn parse_beta(s: &str) -> Result<f64, String> {
    let beta: f64 = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if !beta.is_finite() || beta <= 0.0 {
        return Err(format!("β must be positive and finite, got {s}"));
    }
    Ok(beta)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Schema(_) => 2,
        _ => 1,
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Validate(m) => commands::cmd_validate(&m.model),
        Command::Cohomology {
            model,
            p,
            side,
            representatives,
        } => commands::cmd_cohomology(&model.model, *p, *side, *representatives),
        Command::Gsd {
            model,
            method,
            enum_cap,
        } => commands::cmd_gsd(&model.model, *method, *enum_cap, cli.max_dim),
        Command::Uct { model, p } => commands::cmd_uct(&model.model, *p),
        Command::Simulate {
            model,
            checks,
            seed,
        } => commands::cmd_simulate(&model.model, &checks.0, *seed, cli.max_dim),
        Command::Thermo { model, beta } => commands::cmd_thermo(&model.model, *beta),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let mut report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("hgauge: {e}");
            return ExitCode::from(exit_code(&e));
        }
    };
    report.finish(start.elapsed().as_millis() as u64);
    let text = match cli.format {
        Format::Table => report.to_table(),
        Format::Json => report.to_json() + "\n",
    };
    let mut stdout = std::io::stdout().lock();
    if stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
        .is_err()
    {
        return ExitCode::from(1);
    }
    for c in report
        .checks
        .iter()
        .filter(|c| c.status == report::Status::Fail)
    {
        eprintln!("hgauge: check failed: {} ({})", c.name, c.detail);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
