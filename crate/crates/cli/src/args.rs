use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{Scale, SystemKind};

#[derive(Debug, Parser)]
#[command(
    name = "dthermo",
    version,
    about = "Thermodynamics with deformed phase-space brackets"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Temperature sweep as CSV (`T,Z1,E_per_N,C_per_N,method`).
    Sweep(SweepArgs),
    /// Check the pairing-sum Jacobian against the permutation sum.
    JacobianVerify {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Compare numerics with the low- and high-temperature formulas.
    Limits(LimitsArgs),
}

/// Unset flags fall back to `--config`, then to the built-in defaults.
#[derive(Debug, Default, Args)]
pub struct SweepArgs {
    /// Flat `key = value` file using the long flag names as keys.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub system: Option<SystemKind>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta_prime: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub volume: Option<f64>,
    /// Power law: `H = alpha P^exponent`.
    #[arg(long, allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub exponent: Option<f64>,
    /// Power law: dimension.
    #[arg(long)]
    pub dim: Option<usize>,
    /// Power law: Jacobian `(1 + beta P^2)^growth`.
    #[arg(long, allow_negative_numbers = true)]
    pub growth: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t_min: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub t_max: Option<f64>,
    #[arg(long)]
    pub points: Option<usize>,
    #[arg(long, value_enum)]
    pub scale: Option<Scale>,
    /// Comma-separated subset of classical,quantum,nondeformed (or `all`).
    #[arg(long)]
    pub methods: Option<String>,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Debug, Default, Args)]
pub struct LimitsArgs {
    /// Restrict to one system; the freezing table is always printed.
    #[arg(long, value_enum)]
    pub system: Option<SystemKind>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub beta_prime: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub mass: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub omega: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub hbar: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub volume: Option<f64>,
}
