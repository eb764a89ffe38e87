//! `kads`: batch driver for the κ-(A)dS verification suites.
//!
//! Exit codes: 0 when every suite passes, 2 on a failed check, 3 on a
//! configuration or I/O error.

mod commands;
mod config;
mod report;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use config::{Format, ParamArg, RunConfig};
use report::Report;

const EXIT_FAIL: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser)]
#[command(name = "kads", version, about = "Verification suites for κ-deformed (A)dS bialgebras, Poisson spacetimes and their quantizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cocommutator, mCYBE, coisotropy and dual-Jacobi checks for the κ r-matrices.
    CheckBialgebra(Common),
    /// Primitivity, the quadratic constraint ideal, falsification and canonical form.
    Classify(Common),
    /// Sklyanin brackets against the closed-form tables, Jacobi, Casimirs and limits.
    Poisson(Common),
    /// Jacobi, confluence and Casimir certificates for the quantum algebras.
    Nc(Common),
    /// Writes bracket, coordinate and metric grids into the `--out` directory.
    Export(Common),
}

#[derive(Args, Clone)]
struct Common {
    /// Cosmological constant, or `formal`.
    #[arg(long, default_value = "formal", allow_hyphen_values = true)]
    lambda: ParamArg,
    /// Deformation parameter 1/κ, or `formal`.
    #[arg(long = "kappa-inv", default_value = "formal", allow_hyphen_values = true)]
    kappa_inv: ParamArg,
    /// Twist parameter ϑ, or `formal`.
    #[arg(long, default_value = "formal", allow_hyphen_values = true)]
    twist: ParamArg,
    #[arg(long, default_value_t = 200)]
    samples: usize,
    #[arg(long, default_value_t = 0x5EED)]
    seed: u64,
    /// Threshold for numeric comparisons.
    #[arg(long = "tol", default_value_t = 1e-8, allow_hyphen_values = true)]
    tolerance: f64,
    /// Report file (directory for `export`); stdout when absent.
    #[arg(long = "out")]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Corrupts one input of each suite family so that checks fail.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

impl Common {
    fn config(&self) -> RunConfig {
        RunConfig {
            lambda: self.lambda,
            kappa_inv: self.kappa_inv,
            twist: self.twist,
            samples: self.samples,
            seed: self.seed,
            tolerance: self.tolerance,
            output: self.output.clone(),
            format: self.format,
            inject_fault: self.inject_fault,
        }
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("KADS_THREADS") else {
        return Ok(());
    };
    let n: usize = v.trim().parse().map_err(|_| format!("KADS_THREADS must be a positive integer, got `{v}`"))?;
    if n == 0 {
        return Err("KADS_THREADS must be at least 1".into());
    }
    rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| e.to_string())
}

fn execute(cli: Cli) -> Result<Report, String> {
    let (name, common) = match &cli.command {
        Command::CheckBialgebra(c) => ("check-bialgebra", c),
        Command::Classify(c) => ("classify", c),
        Command::Poisson(c) => ("poisson", c),
        Command::Nc(c) => ("nc", c),
        Command::Export(c) => ("export", c),
    };
    let cfg = common.config();
    cfg.validate()?;
    configure_threads()?;
    let suites = match cli.command {
        Command::CheckBialgebra(_) => commands::bialgebra::run(&cfg),
        Command::Classify(_) => commands::classify::run(&cfg),
        Command::Poisson(_) => commands::poisson::run(&cfg),
        Command::Nc(_) => commands::nc::run(&cfg),
        Command::Export(_) => {
            let dir = cfg.output.clone().ok_or("export needs --out <directory>")?;
            commands::export::run(&cfg, &dir)?
        }
    };
    Ok(Report::new(name, &cfg, suites))
}

fn emit(report: &Report) -> Result<(), String> {
    let text = match report.config.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv().map_err(|e| e.to_string())?,
    };
    match (&report.config.output, report.command.as_str()) {
        (Some(dir), "export") => {
            let name = match report.config.format {
                Format::Json => "report.json",
                Format::Csv => "report.csv",
            };
            fs::write(dir.join(name), &text).map_err(|e| format!("cannot write report: {e}"))
        }
        (Some(path), _) => fs::write(path, &text).map_err(|e| format!("cannot write {}: {e}", path.display())),
        (None, _) => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let report = match execute(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_CONFIG);
        }
    };
    if let Err(e) = emit(&report) {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_CONFIG);
    }
    for s in report.suites.iter().filter(|s| !s.passed) {
        eprintln!("FAIL [{}] {}: residual {:e}", s.tag, s.name, s.residual);
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}
