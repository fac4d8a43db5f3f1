//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails.

use std::f64::consts::{LN_10, PI};

use dthermo_cli::config::SweepConfig;
use dthermo_cli::sweep::{cmd_sweep, run_points};
use dthermo_cli::verify::cmd_jacobian_verify;
use dthermo_core::deformation::pairing_table;
use dthermo_core::numerics::unit_sphere_area;
use dthermo_core::quantum_spectrum::quantum_thermo;
use dthermo_core::semiclassical::{
    classical_moments, classical_thermo, pressure, pressure_finite_difference,
};
use dthermo_core::{
    DeformationParams, IdealGas, Method, Oscillator, OscillatorQuantumParams, PowerLaw,
    QuadratureSettings, SeriesSettings, SystemModel,
};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

/// Combines sub-checks: passes only if all do.
#[derive(Default)]
struct Checks(Vec<(bool, String)>);

impl Checks {
    fn add(&mut self, pass: bool, detail: String) {
        self.0.push((pass, detail));
    }

    fn outcome(self) -> Outcome {
        let pass = self.0.iter().all(|(p, _)| *p);
        let detail = self
            .0
            .into_iter()
            .map(|(p, d)| format!("{}{d}", if p { "" } else { "[x] " }))
            .collect::<Vec<_>>()
            .join("; ");
        Outcome::new(pass, detail)
    }
}

const FIG_BETA: f64 = 0.01;
const FIG_MASS: f64 = 0.5;

fn kempf(beta: f64, beta_prime: f64) -> DeformationParams {
    DeformationParams::new(beta, beta_prime, 1.0).unwrap()
}

fn gas(volume: f64, mass: f64) -> IdealGas {
    IdealGas {
        volume,
        particles: 1.0,
        mass,
    }
}

fn fig_oscillator() -> Oscillator {
    Oscillator {
        mass: FIG_MASS,
        omega: 1.0,
        particles: 1.0,
    }
}

fn tight() -> QuadratureSettings {
    QuadratureSettings {
        rel_tol: 1e-12,
        ..Default::default()
    }
}

fn log_grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| a * (b / a).powf(i as f64 / (n - 1) as f64))
        .collect()
}

fn jacobian_identity() -> Result<Outcome, String> {
    let mut checks = Checks::default();
    for dim in 1..=3 {
        let r = cmd_jacobian_verify(dim, 100, 42)?;
        checks.add(
            r.max_dev_bruteforce <= 1e-10,
            format!("D={dim} vs permutations {:.2e}", r.max_dev_bruteforce),
        );
        if let Some(closed) = r.max_dev_closed_form {
            checks.add(closed <= 1e-12, format!("D=3 vs closed form {closed:.2e}"));
        }
    }
    let counts: Vec<usize> = (1..=3)
        .map(|d| pairing_table(d).map(|t| t.len()))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    checks.add(counts == [1, 3, 15], format!("pairings {counts:?}"));
    Ok(checks.outcome())
}

fn undeformed_oracles() -> Result<Outcome, String> {
    let flat = kempf(0.0, 0.0);
    let mut gas_dev: f64 = 0.0;
    for (v, m) in [(1.0, 0.5), (2.5, 1.0), (0.1, 3.0)] {
        for t in [0.01, 1.0, 100.0, 1e4] {
            let z = classical_moments(&gas(v, m).into(), &flat, t, &tight())
                .map_err(|e| e.to_string())?
                .z();
            gas_dev = gas_dev.max((z / (v * (2.0 * PI * m * t).powf(1.5)) - 1.0).abs());
        }
    }
    let q = OscillatorQuantumParams::new(&fig_oscillator(), &flat).map_err(|e| e.to_string())?;
    let (mut z_dev, mut c_dev): (f64, f64) = (0.0, 0.0);
    for t in log_grid(0.2, 50.0, 40) {
        let p = quantum_thermo(&q, t, &SeriesSettings::default()).map_err(|e| e.to_string())?;
        let z = (2.0 * (0.5 / t).sinh()).powi(-3);
        let x = 1.0 / t;
        let einstein = 3.0 * x * x * x.exp() / (x.exp() - 1.0).powi(2);
        z_dev = z_dev.max((p.z1 / z - 1.0).abs());
        c_dev = c_dev.max((p.c_per_n - einstein).abs());
    }
    let mut checks = Checks::default();
    checks.add(gas_dev <= 1e-8, format!("gas Z1 rel {gas_dev:.2e}"));
    checks.add(z_dev <= 1e-10, format!("oscillator Z rel {z_dev:.2e}"));
    checks.add(c_dev <= 1e-8, format!("Einstein C abs {c_dev:.2e}"));
    Ok(checks.outcome())
}

fn low_temperature() -> Result<Outcome, String> {
    let params = kempf(FIG_BETA, FIG_BETA);
    let systems: [(&str, SystemModel, f64); 2] = [
        ("gas", gas(1.0, FIG_MASS).into(), 1.5),
        ("oscillator", fig_oscillator().into(), 3.0),
    ];
    let mut checks = Checks::default();
    for bmt in [0.001, 0.005] {
        let t = bmt / (FIG_BETA * FIG_MASS);
        let lead = 6.0 * (3.0 * FIG_BETA + FIG_BETA) * FIG_MASS * t;
        for (name, system, c0) in &systems {
            let c = classical_thermo(system, &params, t, &tight())
                .map_err(|e| e.to_string())?
                .c_per_n;
            let ratio = (c0 - c) / lead;
            checks.add(
                (0.9..=1.1).contains(&ratio),
                format!("{name} βmT={bmt} ratio {ratio:.4}"),
            );
        }
    }
    Ok(checks.outcome())
}

fn high_temperature_gas() -> Result<Outcome, String> {
    let (b, bp, m) = (FIG_BETA, FIG_BETA, FIG_MASS);
    let plateau = (2.0 * b.sqrt() + (b + bp).sqrt()) / (2.0 * m * b * (b + bp).sqrt());
    let t = 1e6;
    let p = classical_thermo(
        &gas(1.0, m).into(),
        &kempf(b, bp),
        t,
        &QuadratureSettings::default(),
    )
    .map_err(|e| e.to_string())?;
    let dev = (p.e_per_n / plateau - 1.0).abs();
    let mut checks = Checks::default();
    checks.add(
        dev <= 1e-2,
        format!("E/N {:.4} vs {plateau:.4} rel {dev:.2e}", p.e_per_n),
    );
    checks.add(p.c_per_n <= 0.01, format!("C/N {:.2e}", p.c_per_n));
    Ok(checks.outcome())
}

fn high_temperature_oscillator() -> Result<Outcome, String> {
    let params = kempf(FIG_BETA, FIG_BETA);
    let osc: SystemModel = fig_oscillator().into();
    let q = OscillatorQuantumParams::new(&fig_oscillator(), &params).map_err(|e| e.to_string())?;
    let s = QuadratureSettings::default();
    let mut checks = Checks::default();

    let c = classical_thermo(&osc, &params, 1e3, &s)
        .map_err(|e| e.to_string())?
        .c_per_n;
    let dev = (c / 1.5 - 1.0).abs();
    checks.add(
        dev <= 0.02,
        format!("classical C/N(1e3) {c:.5} rel {dev:.2e}"),
    );

    let mut worst: f64 = 0.0;
    for t in log_grid(5.0, 50.0, 20) {
        let cc = classical_thermo(&osc, &params, t, &s)
            .map_err(|e| e.to_string())?
            .c_per_n;
        let cq = quantum_thermo(&q, t, &SeriesSettings::default())
            .map_err(|e| e.to_string())?
            .c_per_n;
        worst = worst.max((cq - cc).abs() / cc);
    }
    checks.add(
        worst <= 0.05,
        format!("quantum vs classical on [5,50] rel {worst:.2e}"),
    );

    let points = run_points(&SweepConfig::default(), 0).map_err(|e| e.to_string())?;
    let curve = |m: Method| points.iter().filter(move |p| p.method == m);
    let nondeformed: Vec<f64> = curve(Method::Nondeformed).map(|p| p.c_per_n).collect();
    let rising = nondeformed.windows(2).all(|w| w[1] >= w[0]);
    let top = *nondeformed.last().unwrap();
    checks.add(
        rising && (top - 3.0).abs() < 0.01,
        format!("nondeformed C rises to {top:.4}"),
    );
    for m in [Method::Classical, Method::Quantum] {
        // Searched from T = 1 so the quantum freeze-out at small T does not count.
        let bend = curve(m)
            .filter(|p| (1.0..=2.5).contains(&p.t))
            .find(|p| p.c_per_n < 2.9);
        checks.add(
            bend.is_some(),
            match bend {
                Some(p) => format!("{m} C/N {:.3} at T={:.3}", p.c_per_n, p.t),
                None => format!("{m} C/N stays above 2.9 on [1, 2.5]"),
            },
        );
    }
    Ok(checks.outcome())
}

fn equation_of_state() -> Result<Outcome, String> {
    let mut checks = Checks::default();
    let mut exact = true;
    let mut worst: f64 = 0.0;
    for (b, bp) in [(0.0, 0.0), (0.01, 0.01), (0.05, 0.0), (0.002, 0.3)] {
        let params = kempf(b, bp);
        for (v, n) in [(1.0, 1.0), (7.5, 3.0)] {
            let g = IdealGas {
                volume: v,
                particles: n,
                mass: 0.5,
            };
            for t in [0.1, 1.0, 50.0, 1e4] {
                exact &= pressure(&g, t) * v == n * t;
                let fd = pressure_finite_difference(&g, &params, t, &QuadratureSettings::default())
                    .map_err(|e| e.to_string())?;
                worst = worst.max((fd * v / (n * t) - 1.0).abs());
            }
        }
    }
    checks.add(exact, "analytic pV = NT exact".to_string());
    checks.add(worst <= 1e-10, format!("finite difference rel {worst:.2e}"));
    Ok(checks.outcome())
}

/// `∫ P^{D-1} e^{-αPⁿ/T} / J dP`: the partition function without the
/// angular factor, which is the normalisation the logarithmic law uses.
fn radial_z(model: &PowerLaw, params: &DeformationParams, t: f64) -> Result<f64, String> {
    let m = classical_moments(&(*model).into(), params, t, &QuadratureSettings::default())
        .map_err(|e| e.to_string())?;
    Ok(m.z() / unit_sphere_area(model.dim))
}

fn freezing() -> Result<Outcome, String> {
    let params = kempf(FIG_BETA, 0.0);
    let s = QuadratureSettings::default();
    let model = |exponent: f64, growth: f64| PowerLaw {
        alpha: 1.0,
        exponent,
        dim: 3,
        jacobian_growth: growth,
    };
    let c_at = |m: PowerLaw, t: f64| {
        classical_thermo(&m.into(), &params, t, &s)
            .map(|p| p.c_per_n)
            .map_err(|e| e.to_string())
    };
    let mut checks = Checks::default();

    for n in [2.0, 1.0] {
        let c = c_at(model(n, 0.0), 1e6)?;
        checks.add((c - 3.0 / n).abs() <= 1e-3, format!("s=0 n={n} C/N {c:.6}"));
    }

    for n in [1.0, 2.0] {
        let m = model(n, 1.5);
        let c = c_at(m, 1e6)?;
        checks.add(c <= 0.05, format!("2s=D n={n} C/N {c:.4}"));
    }
    let gamma = FIG_BETA.powf(1.5);
    let m1 = model(1.0, 1.5);
    let dz1 = radial_z(&m1, &params, 1e7)? - radial_z(&m1, &params, 1e6)?;
    let dev1 = (dz1 / (LN_10 / gamma) - 1.0).abs();
    checks.add(
        dev1 <= 0.1,
        format!("2s=D n=1 dZ {dz1:.1} vs ln10/γ rel {dev1:.1e}"),
    );
    let m2 = model(2.0, 1.5);
    let dz2 = radial_z(&m2, &params, 1e7)? - radial_z(&m2, &params, 1e6)?;
    let dev2 = (dz2 / (LN_10 / (2.0 * gamma)) - 1.0).abs();
    checks.add(
        dev2 <= 0.1,
        format!("2s=D n=2 dZ {dz2:.1} vs ln10/(nγ) rel {dev2:.1e}"),
    );

    let m3 = model(2.0, 3.0);
    let ratio = radial_z(&m3, &params, 1e7)? / radial_z(&m3, &params, 1e6)? - 1.0;
    checks.add(ratio <= 1e-3, format!("2s>D Z ratio - 1 = {ratio:.2e}"));
    Ok(checks.outcome())
}

fn determinism() -> Result<Outcome, String> {
    let cfg = SweepConfig::default();
    let runs: Vec<String> = [1, 2, 0, 0]
        .into_iter()
        .map(|jobs| cmd_sweep(&cfg, jobs).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    let same = runs.windows(2).all(|w| w[0].as_bytes() == w[1].as_bytes());
    Ok(Outcome::new(
        same,
        format!("{} runs, {} bytes each", runs.len(), runs[0].len()),
    ))
}

type Criterion = fn() -> Result<Outcome, String>;

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("Jacobian identity", jacobian_identity),
        ("undeformed oracles", undeformed_oracles),
        ("low-temperature corrections", low_temperature),
        ("high-temperature ideal gas", high_temperature_gas),
        ("high-temperature oscillator", high_temperature_oscillator),
        ("equation of state", equation_of_state),
        ("freezing theorem", freezing),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (index, (name, run)) in criteria.iter().enumerate() {
        let outcome = run().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "criterion {} {:<28} {}  {}",
            index + 1,
            name,
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
