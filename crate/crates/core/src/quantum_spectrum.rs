//! Exact spectrum of the Kempf-deformed 3D isotropic oscillator and its
//! canonical partition sum.
//!
//! ```text
//! E_nl = ħω [ (n + 3/2) √(1 + m²ω²ħ² (β² l(l+1) + (3β + β')²/4))
//!           + (mωħ/2) ((β + β')(n + 3/2)² + (β − β')(l(l+1) + 9/4) + 3β'/2) ]
//! ```
//!
//! Levels carry the usual oscillator labels `n = 2n_r + l` with
//! multiplicity `2l + 1`, which reproduces the undeformed shell count
//! `(n + 1)(n + 2)/2`.

use crate::deformation::DeformationParams;
use crate::error::{require_temperature, Error, Result};
use crate::numerics::{sum_levels, Level, SeriesSettings};
use crate::semiclassical::{Method, Oscillator, ThermoPoint};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorQuantumParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
    pub beta: f64,
    pub beta_prime: f64,
}

impl OscillatorQuantumParams {
    pub fn new(oscillator: &Oscillator, deformation: &DeformationParams) -> Result<Self> {
        let p = Self {
            mass: oscillator.mass,
            omega: oscillator.omega,
            hbar: deformation.hbar,
            beta: deformation.beta,
            beta_prime: deformation.beta_prime,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("mass", self.mass),
            ("omega", self.omega),
            ("hbar", self.hbar),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be positive and finite",
                });
            }
        }
        DeformationParams::new(self.beta, self.beta_prime, self.hbar).map(|_| ())
    }

    pub fn undeformed(&self) -> Self {
        Self {
            beta: 0.0,
            beta_prime: 0.0,
            ..*self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumLevel {
    pub n: u32,
    pub l: u32,
    pub energy: f64,
    pub degeneracy: u32,
}

pub fn energy_nl(params: &OscillatorQuantumParams, n: u32, l: u32) -> Result<f64> {
    if l > n || !(n - l).is_multiple_of(2) {
        return Err(Error::InvalidQuantumNumbers { n, l });
    }
    Ok(energy_unchecked(params, n, l))
}

fn energy_unchecked(params: &OscillatorQuantumParams, n: u32, l: u32) -> f64 {
    let OscillatorQuantumParams {
        mass,
        omega,
        hbar,
        beta,
        beta_prime,
    } = *params;
    let nn = n as f64 + 1.5;
    let ll = l as f64 * (l as f64 + 1.0);
    let mwh = mass * omega * hbar;
    let root =
        (1.0 + mwh * mwh * (beta * beta * ll + (3.0 * beta + beta_prime).powi(2) / 4.0)).sqrt();
    let shift = 0.5
        * mwh
        * ((beta + beta_prime) * nn * nn + (beta - beta_prime) * (ll + 2.25) + 1.5 * beta_prime);
    hbar * omega * (nn * root + shift)
}

/// The levels of principal number `n`, in order `l = n, n-2, ..`.
pub fn shell(params: &OscillatorQuantumParams, n: u32) -> impl Iterator<Item = SpectrumLevel> + '_ {
    (0..=n / 2).map(move |k| {
        let l = n - 2 * k;
        SpectrumLevel {
            n,
            l,
            energy: energy_unchecked(params, n, l),
            degeneracy: 2 * l + 1,
        }
    })
}

/// All levels grouped by increasing `n`.
pub fn level_iterator(
    params: &OscillatorQuantumParams,
) -> impl Iterator<Item = SpectrumLevel> + '_ {
    (0u32..).flat_map(move |n| shell(params, n))
}

/// Canonical thermodynamics from the exact level sum.
///
/// Errors if any visited level has non-positive energy.
pub fn quantum_thermo(
    params: &OscillatorQuantumParams,
    t: f64,
    settings: &SeriesSettings,
) -> Result<ThermoPoint> {
    require_temperature(t)?;
    params.validate()?;
    let mut failure = None;
    let shells = (0u32..).map_while(|n| {
        let levels: Vec<Level> = shell(params, n)
            .map(|s| Level::new(s.energy, u64::from(s.degeneracy)))
            .collect();
        if let Some((l, bad)) = shell(params, n)
            .map(|s| (s.l, s.energy))
            .find(|(_, e)| !(*e > 0.0 && e.is_finite()))
        {
            failure = Some(Error::NonPositiveEnergy { n, l, energy: bad });
            return None;
        }
        Some(levels)
    });
    let moments = sum_levels(shells, t, settings);
    if let Some(err) = failure {
        return Err(err);
    }
    ThermoPoint::from_moments(t, &moments?, Method::Quantum)
}
