use std::fmt;

use dthermo_core::asymptotics::{
    freezing_prediction, high_t_ideal_gas, high_t_oscillator, low_t_correction_factor,
    low_t_heat_capacity,
};
use dthermo_core::numerics::unit_sphere_area;
use dthermo_core::quantum_spectrum::quantum_thermo;
use dthermo_core::semiclassical::{
    classical_moments, classical_thermo, pressure, pressure_finite_difference,
};
use dthermo_core::{
    DeformationParams, IdealGas, Oscillator, OscillatorQuantumParams, PowerLaw, QuadratureSettings,
    SeriesSettings, SystemModel,
};

use crate::config::SystemKind;

/// `βmT` of the low-temperature rows.
pub const LOW_BMT: f64 = 1e-3;
/// `βmT` of the ideal-gas high-temperature rows. The energy approaches its
/// plateau only as `T^{-1/2}`, so this sits far above the regime threshold.
pub const GAS_HIGH_BMT: f64 = 5e5;
/// `βmT` of the oscillator high-temperature rows.
pub const OSC_HIGH_BMT: f64 = 5e3;
/// Temperatures of the freezing table.
pub const FREEZE_T: f64 = 1e6;
pub const FREEZE_T_NEXT: f64 = 1e7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Check {
    /// `|numeric / reference - 1| ≤ tol`.
    Relative(f64),
    /// `|numeric - reference| ≤ tol`.
    Absolute(f64),
    /// `numeric ≤ reference`.
    AtMost,
    /// `numeric / reference ∈ [lo, hi]`.
    Window(f64, f64),
    /// Reported, not checked.
    Info,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitRow {
    pub section: &'static str,
    pub label: String,
    pub t: f64,
    pub numeric: f64,
    pub reference: f64,
    pub check: Check,
}

impl LimitRow {
    pub fn deviation(&self) -> f64 {
        match self.check {
            Check::Relative(_) | Check::Info => (self.numeric / self.reference - 1.0).abs(),
            Check::Absolute(_) => (self.numeric - self.reference).abs(),
            Check::AtMost => self.numeric - self.reference,
            Check::Window(..) => self.numeric / self.reference,
        }
    }

    pub fn passed(&self) -> Option<bool> {
        let d = self.deviation();
        match self.check {
            Check::Relative(tol) | Check::Absolute(tol) => Some(d <= tol),
            Check::AtMost => Some(d <= 0.0),
            Check::Window(lo, hi) => Some((lo..=hi).contains(&d)),
            Check::Info => None,
        }
    }

    fn tolerance_text(&self) -> String {
        match self.check {
            Check::Relative(tol) => format!("rel {tol:.0e}"),
            Check::Absolute(tol) => format!("abs {tol:.0e}"),
            Check::AtMost => "at most".to_string(),
            Check::Window(lo, hi) => format!("ratio [{lo}, {hi}]"),
            Check::Info => "-".to_string(),
        }
    }
}

impl fmt::Display for LimitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.passed() {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "info",
        };
        write!(
            f,
            "{:<12} {:<34} {:>10.3e} {:>16.9e} {:>16.9e} {:>11.3e}  {:<16} {}",
            self.section,
            self.label,
            self.t,
            self.numeric,
            self.reference,
            self.deviation(),
            self.tolerance_text(),
            status
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LimitsConfig {
    /// `None` runs both the ideal gas and the oscillator.
    pub system: Option<SystemKind>,
    pub beta: f64,
    pub beta_prime: f64,
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
    pub volume: f64,
}

impl Default for LimitsConfig {
    fn default() -> Self {
        Self {
            system: None,
            beta: 0.01,
            beta_prime: 0.01,
            mass: 0.5,
            omega: 1.0,
            hbar: 1.0,
            volume: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct LimitsReport {
    pub rows: Vec<LimitRow>,
    pub notes: Vec<String>,
}

impl LimitsReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.passed() != Some(false))
    }
}

impl fmt::Display for LimitsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<12} {:<34} {:>10} {:>16} {:>16} {:>11}  {:<16} status",
            "section", "quantity", "T", "numeric", "reference", "deviation", "tolerance"
        )?;
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn err(e: dthermo_core::Error) -> String {
    e.to_string()
}

fn gas_rows(
    cfg: &LimitsConfig,
    params: &DeformationParams,
    rows: &mut Vec<LimitRow>,
) -> Result<(), String> {
    let q = QuadratureSettings::default();
    let gas = IdealGas {
        volume: cfg.volume,
        particles: 1.0,
        mass: cfg.mass,
    };
    let system: SystemModel = gas.into();
    let flat = DeformationParams::canonical(cfg.hbar).map_err(err)?;
    let section = "ideal-gas";

    for t in [1.0, 100.0] {
        let fd = pressure_finite_difference(&gas, params, t, &q).map_err(err)?;
        rows.push(LimitRow {
            section,
            label: "pV/NT, finite difference".into(),
            t,
            numeric: fd * gas.volume / (gas.particles * t),
            reference: pressure(&gas, t) * gas.volume / (gas.particles * t),
            check: Check::Relative(1e-10),
        });
    }
    if params.beta <= 0.0 {
        return Ok(());
    }
    let bm = params.beta * cfg.mass;

    let t = 5e-3 / bm;
    let z = classical_moments(&system, params, t, &q).map_err(err)?.z();
    let z0 = classical_moments(&system, &flat, t, &q).map_err(err)?.z();
    rows.push(LimitRow {
        section,
        label: "low-T Z1/Z1(undeformed)".into(),
        t,
        numeric: z / z0,
        reference: low_t_correction_factor(params, cfg.mass, t).value,
        check: Check::Relative(5e-3),
    });
    rows.push(low_t_deficit_row(
        section,
        &system,
        params,
        LOW_BMT / bm,
        1.5,
    )?);

    let t = GAS_HIGH_BMT / bm;
    let lim = high_t_ideal_gas(params, cfg.mass, cfg.volume).map_err(err)?;
    let p = classical_thermo(&system, params, t, &q).map_err(err)?;
    rows.push(LimitRow {
        section,
        label: "high-T Z1".into(),
        t,
        numeric: p.z1,
        reference: lim.z_limit,
        check: Check::Relative(1e-2),
    });
    rows.push(LimitRow {
        section,
        label: "high-T E/N plateau".into(),
        t,
        numeric: p.e_per_n,
        reference: lim.e_plateau,
        check: Check::Relative(1e-2),
    });
    rows.push(LimitRow {
        section,
        label: "high-T C/N".into(),
        t,
        numeric: p.c_per_n,
        reference: 0.01,
        check: Check::AtMost,
    });
    Ok(())
}

fn low_t_deficit_row(
    section: &'static str,
    system: &SystemModel,
    params: &DeformationParams,
    t: f64,
    c0: f64,
) -> Result<LimitRow, String> {
    let q = QuadratureSettings {
        rel_tol: 1e-12,
        ..Default::default()
    };
    let c = classical_thermo(system, params, t, &q)
        .map_err(err)?
        .c_per_n;
    let predicted = low_t_heat_capacity(system, params, t).map_err(err)?.value;
    Ok(LimitRow {
        section,
        label: "low-T C/N deficit".into(),
        t,
        numeric: c0 - c,
        reference: c0 - predicted,
        check: Check::Window(0.9, 1.1),
    })
}

fn oscillator_rows(
    cfg: &LimitsConfig,
    params: &DeformationParams,
    rows: &mut Vec<LimitRow>,
) -> Result<(), String> {
    let q = QuadratureSettings::default();
    let osc = Oscillator {
        mass: cfg.mass,
        omega: cfg.omega,
        particles: 1.0,
    };
    let system: SystemModel = osc.into();
    let section = "oscillator";
    let qp = OscillatorQuantumParams::new(&osc, params).map_err(err)?;
    for t in [5.0, 50.0] {
        let c = classical_thermo(&system, params, t, &q)
            .map_err(err)?
            .c_per_n;
        let cq = quantum_thermo(&qp, t, &SeriesSettings::default())
            .map_err(err)?
            .c_per_n;
        rows.push(LimitRow {
            section,
            label: "quantum vs classical C/N".into(),
            t,
            numeric: cq,
            reference: c,
            check: Check::Relative(5e-2),
        });
    }
    if params.beta <= 0.0 {
        return Ok(());
    }
    let bm = params.beta * cfg.mass;
    rows.push(low_t_deficit_row(
        section,
        &system,
        params,
        LOW_BMT / bm,
        3.0,
    )?);

    let t = OSC_HIGH_BMT / bm;
    let p = classical_thermo(&system, params, t, &q).map_err(err)?;
    rows.push(LimitRow {
        section,
        label: "high-T Z1/T^(3/2)".into(),
        t,
        numeric: p.z1 / t.powf(1.5),
        reference: high_t_oscillator(params, cfg.mass, cfg.omega).map_err(err)?,
        check: Check::Relative(1e-2),
    });
    rows.push(LimitRow {
        section,
        label: "high-T C/N".into(),
        t,
        numeric: p.c_per_n,
        reference: 1.5,
        check: Check::Relative(2e-2),
    });
    Ok(())
}

/// `∫ P^{D-1} e^{-αPⁿ/T} / J dP`, the partition function without the
/// angular factor.
fn radial_z(model: &PowerLaw, params: &DeformationParams, t: f64) -> Result<f64, String> {
    let m = classical_moments(&(*model).into(), params, t, &QuadratureSettings::default())
        .map_err(err)?;
    Ok(m.z() / unit_sphere_area(model.dim))
}

fn freezing_rows(params: &DeformationParams, rows: &mut Vec<LimitRow>) -> Result<(), String> {
    let section = "freezing";
    let q = QuadratureSettings::default();
    let model = |exponent: f64, s: f64| PowerLaw {
        alpha: 1.0,
        exponent,
        dim: 3,
        jacobian_growth: s,
    };
    for n in [2.0, 1.0] {
        let m = model(n, 0.0);
        let c = classical_thermo(&m.into(), params, FREEZE_T, &q)
            .map_err(err)?
            .c_per_n;
        rows.push(LimitRow {
            section,
            label: format!("C/N, D=3 n={n} s=0"),
            t: FREEZE_T,
            numeric: c,
            reference: freezing_prediction(3, n, 0.0),
            check: Check::Absolute(1e-3),
        });
    }
    if params.beta <= 0.0 {
        return Ok(());
    }
    for n in [1.0, 2.0] {
        let m = model(n, 1.5);
        let gamma = m.growth_coefficient(params);
        let growth = radial_z(&m, params, FREEZE_T_NEXT)? - radial_z(&m, params, FREEZE_T)?;
        rows.push(LimitRow {
            section,
            label: format!("Z growth per decade, n={n} 2s=D"),
            t: FREEZE_T,
            numeric: growth,
            reference: std::f64::consts::LN_10 / (n * gamma),
            check: Check::Relative(0.1),
        });
        let c = classical_thermo(&m.into(), params, FREEZE_T, &q)
            .map_err(err)?
            .c_per_n;
        rows.push(LimitRow {
            section,
            label: format!("C/N, D=3 n={n} 2s=D"),
            t: FREEZE_T,
            numeric: c,
            reference: 0.05,
            check: Check::Info,
        });
    }
    let m = model(2.0, 3.0);
    let ratio = radial_z(&m, params, FREEZE_T_NEXT)? / radial_z(&m, params, FREEZE_T)? - 1.0;
    rows.push(LimitRow {
        section,
        label: "Z saturation, D=3 n=2 s=3".into(),
        t: FREEZE_T,
        numeric: ratio,
        reference: 1e-3,
        check: Check::AtMost,
    });
    Ok(())
}

/// Numeric thermodynamics next to the asymptotic formulas, plus the
/// freezing table.
pub fn cmd_limits(cfg: &LimitsConfig) -> Result<LimitsReport, String> {
    let params = DeformationParams::new(cfg.beta, cfg.beta_prime, cfg.hbar).map_err(err)?;
    let mut report = LimitsReport::default();
    if params.beta <= 0.0 {
        report.notes.push(
            "beta = 0: low- and high-temperature rows need a deformation and are skipped".into(),
        );
    }
    let run = |kind: SystemKind| {
        cfg.system
            .map_or(kind != SystemKind::PowerLaw, |s| s == kind)
    };
    if run(SystemKind::IdealGas) {
        gas_rows(cfg, &params, &mut report.rows)?;
    }
    if run(SystemKind::Oscillator) {
        oscillator_rows(cfg, &params, &mut report.rows)?;
    }
    freezing_rows(&params, &mut report.rows)?;
    Ok(report)
}
