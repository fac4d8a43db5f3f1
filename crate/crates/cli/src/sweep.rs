use std::fmt;

use dthermo_core::quantum_spectrum::quantum_thermo;
use dthermo_core::semiclassical::classical_thermo;
use dthermo_core::{
    DeformationParams, Method, OscillatorQuantumParams, QuadratureSettings, SeriesSettings,
    SystemModel, ThermoPoint,
};
use rayon::prelude::*;

use crate::config::SweepConfig;
use crate::format::fmt_sig;

pub const CSV_HEADER: &str = "T,Z1,E_per_N,C_per_N,method";

/// A numeric failure at one sweep point.
#[derive(Debug, Clone, PartialEq)]
pub struct PointFailure {
    pub t: f64,
    pub method: Method,
    pub message: String,
}

impl fmt::Display for PointFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T={} method={}: {}",
            fmt_sig(self.t, 12),
            self.method,
            self.message
        )
    }
}

/// One point of a sweep. `Nondeformed` is the exact Einstein oscillator for
/// the oscillator and the classical integral at `β = β' = 0` otherwise.
pub fn evaluate(
    system: &SystemModel,
    params: &DeformationParams,
    t: f64,
    method: Method,
) -> Result<ThermoPoint, String> {
    let quad = QuadratureSettings::default();
    let series = SeriesSettings::default();
    let quantum = |params: &DeformationParams| match system {
        SystemModel::Oscillator(o) => {
            let q = OscillatorQuantumParams::new(o, params).map_err(|e| e.to_string())?;
            quantum_thermo(&q, t, &series).map_err(|e| e.to_string())
        }
        _ => Err("the quantum method needs the oscillator".to_string()),
    };
    let flat = DeformationParams::canonical(params.hbar).map_err(|e| e.to_string())?;
    match method {
        Method::Classical => classical_thermo(system, params, t, &quad).map_err(|e| e.to_string()),
        Method::Quantum => quantum(params),
        Method::Nondeformed => {
            let point = match system {
                SystemModel::Oscillator(_) => quantum(&flat)?,
                _ => classical_thermo(system, &flat, t, &quad).map_err(|e| e.to_string())?,
            };
            Ok(ThermoPoint {
                method: Method::Nondeformed,
                ..point
            })
        }
    }
}

/// Evaluates every `(T, method)` pair on at most `jobs` threads (0 picks
/// the rayon default). Points come back ordered by `T`, then method.
pub fn run_points(config: &SweepConfig, jobs: usize) -> Result<Vec<ThermoPoint>, PointFailure> {
    let system = config.system_model().map_err(|message| PointFailure {
        t: config.t_min,
        method: config.methods[0],
        message,
    })?;
    let params = config.deformation().map_err(|message| PointFailure {
        t: config.t_min,
        method: config.methods[0],
        message,
    })?;
    let tasks: Vec<(f64, Method)> = config
        .temperatures()
        .into_iter()
        .flat_map(|t| config.methods.iter().map(move |&m| (t, m)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| PointFailure {
            t: config.t_min,
            method: config.methods[0],
            message: format!("cannot start worker pool: {e}"),
        })?;
    let results: Vec<Result<ThermoPoint, String>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(t, method)| evaluate(&system, &params, t, method))
            .collect()
    });
    tasks
        .iter()
        .zip(results)
        .map(|(&(t, method), r)| r.map_err(|message| PointFailure { t, method, message }))
        .collect()
}

pub fn to_csv(points: &[ThermoPoint]) -> String {
    let mut out = String::with_capacity(64 * (points.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            fmt_sig(p.t, 12),
            fmt_sig(p.z1, 12),
            fmt_sig(p.e_per_n, 12),
            fmt_sig(p.c_per_n, 12),
            p.method
        ));
    }
    out
}

/// The full sweep as CSV text.
pub fn cmd_sweep(config: &SweepConfig, jobs: usize) -> Result<String, PointFailure> {
    run_points(config, jobs).map(|points| to_csv(&points))
}
