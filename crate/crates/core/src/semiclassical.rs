//! Semiclassical thermodynamics: `Z = ∫ e^{-H/T} (dX)(dP) / J`.
//!
//! The Kempf Jacobian does not depend on position, so for `H = P²/2m + U(X)`
//! the integral factorises into a closed-form position part and a radial
//! momentum quadrature. The overall `(2πħ)^D` normalisation is dropped; it
//! does not enter `E` or `C`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::deformation::{kempf_jacobian, DeformationParams};
use crate::error::{require_temperature, Error, Result};
use crate::numerics::{boltzmann_moments, Moments, QuadratureSettings};

/// `N` free particles of mass `m` in a box of volume `V`, `H = P²/2m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealGas {
    pub volume: f64,
    pub particles: f64,
    pub mass: f64,
}

/// `N` isotropic 3D oscillators, `H = P²/2m + mω²X²/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Oscillator {
    pub mass: f64,
    pub omega: f64,
    pub particles: f64,
}

/// `H = α Pⁿ` in `dim` dimensions with Jacobian `(1 + βP²)^s`.
///
/// The Jacobian grows as `γ P^{2s}` with `γ = β^s`; `s = 0` is undeformed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLaw {
    pub alpha: f64,
    pub exponent: f64,
    pub dim: usize,
    pub jacobian_growth: f64,
}

impl PowerLaw {
    /// `γ` in `J ≈ γ P^{2s}`.
    pub fn growth_coefficient(&self, params: &DeformationParams) -> f64 {
        params.beta.powf(self.jacobian_growth)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemModel {
    IdealGas(IdealGas),
    Oscillator(Oscillator),
    PowerLaw(PowerLaw),
}

impl SystemModel {
    pub fn validate(&self) -> Result<()> {
        fn positive(name: &'static str, value: f64) -> Result<()> {
            if value.is_finite() && value > 0.0 {
                Ok(())
            } else {
                Err(Error::InvalidParameter {
                    name,
                    value,
                    reason: "must be positive and finite",
                })
            }
        }
        match self {
            SystemModel::IdealGas(g) => {
                positive("volume", g.volume)?;
                positive("particles", g.particles)?;
                positive("mass", g.mass)
            }
            SystemModel::Oscillator(o) => {
                positive("mass", o.mass)?;
                positive("omega", o.omega)?;
                positive("particles", o.particles)
            }
            SystemModel::PowerLaw(w) => {
                positive("alpha", w.alpha)?;
                positive("exponent", w.exponent)?;
                if w.dim == 0 {
                    return Err(Error::ZeroDimension);
                }
                if !(w.jacobian_growth.is_finite() && w.jacobian_growth >= 0.0) {
                    return Err(Error::InvalidParameter {
                        name: "jacobian_growth",
                        value: w.jacobian_growth,
                        reason: "must be finite and non-negative",
                    });
                }
                Ok(())
            }
        }
    }

    /// Mass entering the `βmT` regime indicator, if the model has one.
    pub fn mass(&self) -> Option<f64> {
        match self {
            SystemModel::IdealGas(g) => Some(g.mass),
            SystemModel::Oscillator(o) => Some(o.mass),
            SystemModel::PowerLaw(_) => None,
        }
    }
}

impl From<IdealGas> for SystemModel {
    fn from(g: IdealGas) -> Self {
        SystemModel::IdealGas(g)
    }
}

impl From<Oscillator> for SystemModel {
    fn from(o: Oscillator) -> Self {
        SystemModel::Oscillator(o)
    }
}

impl From<PowerLaw> for SystemModel {
    fn from(w: PowerLaw) -> Self {
        SystemModel::PowerLaw(w)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Method {
    Classical,
    Quantum,
    Nondeformed,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Classical, Method::Quantum, Method::Nondeformed];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Quantum => "quantum",
            Method::Nondeformed => "nondeformed",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "classical" => Ok(Method::Classical),
            "quantum" => Ok(Method::Quantum),
            "nondeformed" => Ok(Method::Nondeformed),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

/// Per-particle thermodynamics at one temperature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermoPoint {
    pub t: f64,
    /// One-particle partition function; may underflow to 0 where `ln_z1`
    /// is still finite.
    pub z1: f64,
    pub ln_z1: f64,
    pub e_per_n: f64,
    pub c_per_n: f64,
    pub method: Method,
}

impl ThermoPoint {
    pub fn from_moments(t: f64, moments: &Moments, method: Method) -> Result<Self> {
        Ok(Self {
            t,
            z1: moments.z(),
            ln_z1: moments.ln_z,
            e_per_n: moments.mean,
            c_per_n: moments.heat_capacity(t)?,
            method,
        })
    }
}

/// One-particle canonical moments of `H` under the semiclassical measure.
pub fn classical_moments(
    system: &SystemModel,
    params: &DeformationParams,
    t: f64,
    settings: &QuadratureSettings,
) -> Result<Moments> {
    require_temperature(t)?;
    system.validate()?;
    params.validate()?;
    let kempf = |p: f64| kempf_jacobian(params, p * p);
    match *system {
        SystemModel::IdealGas(g) => {
            let m = g.mass;
            let mut mom = boltzmann_moments(|p| p * p / (2.0 * m), kempf, 3, t, settings)?;
            mom.ln_z += g.volume.ln();
            Ok(mom)
        }
        SystemModel::Oscillator(o) => {
            let m = o.mass;
            let mom = boltzmann_moments(|p| p * p / (2.0 * m), kempf, 3, t, settings)?;
            // Gaussian position integral: ∫ e^{-mω²X²/2T} d³X = (2πT/mω²)^{3/2},
            // contributing 3T/2 to ⟨H⟩ and 3T²/2 to Var(H).
            Ok(Moments {
                ln_z: mom.ln_z + 1.5 * (2.0 * PI * t / (m * o.omega * o.omega)).ln(),
                mean: mom.mean + 1.5 * t,
                variance: mom.variance + 1.5 * t * t,
            })
        }
        SystemModel::PowerLaw(w) => {
            let beta = params.beta;
            let s = w.jacobian_growth;
            boltzmann_moments(
                |p| w.alpha * p.powf(w.exponent),
                |p| (1.0 + beta * p * p).powf(s),
                w.dim,
                t,
                settings,
            )
        }
    }
}

/// One-particle semiclassical partition function.
pub fn classical_z1(
    system: &SystemModel,
    params: &DeformationParams,
    t: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    classical_moments(system, params, t, settings).map(|m| m.z())
}

pub fn classical_thermo(
    system: &SystemModel,
    params: &DeformationParams,
    t: f64,
    settings: &QuadratureSettings,
) -> Result<ThermoPoint> {
    let m = classical_moments(system, params, t, settings)?;
    ThermoPoint::from_moments(t, &m, Method::Classical)
}

/// `p = N T ∂ln Z₁/∂V = N T / V`. The deformation only enters the momentum
/// factor, so it drops out of the volume derivative.
pub fn pressure(gas: &IdealGas, t: f64) -> f64 {
    gas.particles * t / gas.volume
}

/// Pressure from a fourth-order central difference of `ln Z₁` in `V`.
pub fn pressure_finite_difference(
    gas: &IdealGas,
    params: &DeformationParams,
    t: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    let h = 1e-3 * gas.volume;
    let ln_z = |dv: f64| {
        let g = IdealGas {
            volume: gas.volume + dv,
            ..*gas
        };
        classical_moments(&g.into(), params, t, settings).map(|m| m.ln_z)
    };
    let d = (-ln_z(2.0 * h)? + 8.0 * ln_z(h)? - 8.0 * ln_z(-h)? + ln_z(-2.0 * h)?) / (12.0 * h);
    Ok(gas.particles * t * d)
}

/// Heat capacity per particle of a power-law model at a large temperature,
/// to be compared with [`crate::asymptotics::freezing_prediction`].
pub fn freezing_limit(
    model: &PowerLaw,
    params: &DeformationParams,
    t_large: f64,
    settings: &QuadratureSettings,
) -> Result<f64> {
    classical_thermo(&(*model).into(), params, t_large, settings).map(|p| p.c_per_n)
}
