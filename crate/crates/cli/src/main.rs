//! `walkers`: batch front end for walkers-core.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 numerical or
//! consistency failure (including an identity or count that does not hold).

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use walkers_core::Limits;

#[derive(Debug, Parser)]
#[command(name = "walkers", version, about = "Random turns vicious walkers: counts, bijections, integrals and edge statistics")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalOpts {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for parallel sections (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Lift the enumeration and integral size caps
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count closed walks three ways: enumeration, tableau shapes, permutations
    Count(commands::CountArgs),
    /// Check that the closed-walk integral equals C(2n,n) f(n,p)
    Verify(commands::VerifyArgs),
    /// Evaluate one of the trigonometric integral formulas
    Integral(commands::IntegralArgs),
    /// Monte Carlo maximum displacement statistics and the fluctuation exponent
    Edge(commands::EdgeArgs),
    /// Airy kernel matrix and k-point correlation at given points
    Kernel(commands::KernelArgs),
    /// Run the stochastic random turns dynamics
    Simulate(commands::SimulateArgs),
    /// Dump walk, diagram, tableau pair and permutation for every walk
    Bijection(commands::BijectionArgs),
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] walkers_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("cannot write output: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(walkers_core::Error::NumericalConsistency { .. }) | CliError::Failed(_) => 2,
            _ => 1,
        }
    }
}

pub struct Context {
    pub format: Format,
    pub limits: Limits,
}

fn cap_override() -> bool {
    std::env::var("WALKS_CAP_OVERRIDE").is_ok_and(|v| !v.is_empty() && v != "0")
}

fn run(cli: Cli) -> Result<(), CliError> {
    let g = cli.global;
    if let Some(threads) = g.threads {
        if threads == 0 {
            return Err(CliError::Usage("--threads must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let limits = if g.force || cap_override() {
        eprintln!("warning: size caps disabled; large inputs may run for a very long time");
        Limits::unbounded()
    } else {
        Limits::default()
    };
    let ctx = Context { format: g.format, limits };
    let report = match cli.command {
        Command::Count(a) => commands::count(&ctx, a),
        Command::Verify(a) => commands::verify(&ctx, a),
        Command::Integral(a) => commands::integral(&ctx, a),
        Command::Edge(a) => commands::edge(&ctx, a),
        Command::Kernel(a) => commands::kernel(&ctx, a),
        Command::Simulate(a) => commands::simulate(&ctx, a),
        Command::Bijection(a) => commands::bijection(&ctx, a),
    }?;
    report.emit(ctx.format, g.out.as_deref())?;
    match report.failure {
        Some(msg) => Err(CliError::Failed(msg)),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
