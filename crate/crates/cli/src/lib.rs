//! Command implementations behind the `dthermo` binary.

pub mod args;
pub mod config;
pub mod format;
pub mod limits;
pub mod sweep;
pub mod verify;

use std::io::Write;
use std::process::ExitCode;

use args::{Cli, Command, LimitsArgs, SweepArgs};
use config::SweepConfig;
use limits::LimitsConfig;

/// A failed command and the exit status it maps to.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// Bad input; exit status 2.
    Usage(String),
    /// A computation failed or missed its tolerance; exit status 1.
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Failure(_) => 1,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Failure(m) => m,
        }
    }
}

/// Base config from `--config` (if any) with the explicit flags on top.
pub fn resolve_sweep_config(args: &SweepArgs) -> Result<SweepConfig, String> {
    let mut cfg = SweepConfig::default();
    if let Some(path) = &args.config {
        cfg.apply_file(path)?;
    }
    macro_rules! overlay {
        ($($field:ident),*) => {
            $(if let Some(v) = args.$field.clone() { cfg.$field = v; })*
        };
    }
    overlay!(
        system, beta, beta_prime, mass, omega, hbar, volume, alpha, exponent, dim, growth, t_min,
        t_max, points, scale
    );
    if let Some(m) = &args.methods {
        cfg.methods = config::parse_methods(m)?;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn write_output(path: Option<&std::path::Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::Failure(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Failure(format!("cannot write output: {e}")))
        }
    }
}

pub fn run_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let cfg = resolve_sweep_config(args).map_err(CliError::Usage)?;
    let csv = sweep::cmd_sweep(&cfg, args.jobs).map_err(|f| CliError::Failure(f.to_string()))?;
    write_output(args.out.as_deref(), &csv)
}

pub fn run_jacobian_verify(dim: usize, trials: usize, seed: u64) -> Result<(), CliError> {
    let report = verify::cmd_jacobian_verify(dim, trials, seed).map_err(CliError::Usage)?;
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::Failure(format!(
            "max deviation {:.3e} exceeds {:.0e}",
            report.max_deviation(),
            verify::VERIFY_TOLERANCE
        )))
    }
}

pub fn run_limits(args: &LimitsArgs) -> Result<(), CliError> {
    let d = LimitsConfig::default();
    let cfg = LimitsConfig {
        system: args.system,
        beta: args.beta.unwrap_or(d.beta),
        beta_prime: args.beta_prime.unwrap_or(d.beta_prime),
        mass: args.mass.unwrap_or(d.mass),
        omega: args.omega.unwrap_or(d.omega),
        hbar: args.hbar.unwrap_or(d.hbar),
        volume: args.volume.unwrap_or(d.volume),
    };
    for (name, v) in [
        ("mass", cfg.mass),
        ("omega", cfg.omega),
        ("volume", cfg.volume),
    ] {
        if !(v.is_finite() && v > 0.0) {
            return Err(CliError::Usage(format!("{name} must be positive, got {v}")));
        }
    }
    dthermo_core::DeformationParams::new(cfg.beta, cfg.beta_prime, cfg.hbar)
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let report = limits::cmd_limits(&cfg).map_err(CliError::Failure)?;
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        let failed: Vec<String> = report
            .rows
            .iter()
            .filter(|r| r.passed() == Some(false))
            .map(|r| format!("{} {} at T={:.3e}", r.section, r.label, r.t))
            .collect();
        Err(CliError::Failure(format!(
            "out of tolerance: {}",
            failed.join("; ")
        )))
    }
}

pub fn run(cli: &Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Sweep(args) => run_sweep(args),
        Command::JacobianVerify { dim, trials, seed } => run_jacobian_verify(*dim, *trials, *seed),
        Command::Limits(args) => run_limits(args),
    }
}

/// Runs a parsed command line, reporting errors on stderr.
pub fn main_with(cli: &Cli) -> ExitCode {
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
