//! Closed-form low- and high-temperature limits of the Kempf-deformed
//! ideal gas and oscillator, plus the high-temperature heat capacity of
//! power-law Hamiltonians.
//!
//! Deformation effects set in around `βmT ~ 1`. Results carry that
//! indicator and flag evaluations outside `βmT ≤ 0.1` (low) or `βmT ≥ 10`
//! (high).

use std::f64::consts::PI;

use crate::deformation::DeformationParams;
use crate::error::{Error, Result};
use crate::semiclassical::SystemModel;

pub const LOW_T_MAX: f64 = 0.1;
pub const HIGH_T_MIN: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Regime {
    LowT,
    HighT,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionResult {
    pub value: f64,
    pub regime: Regime,
    /// `βmT`.
    pub validity: f64,
    /// Set when `validity` lies outside the regime's window.
    pub out_of_regime: bool,
}

impl ExpansionResult {
    fn new(value: f64, regime: Regime, validity: f64) -> Self {
        let out_of_regime = match regime {
            Regime::LowT => validity > LOW_T_MAX,
            Regime::HighT => validity < HIGH_T_MIN,
        };
        Self {
            value,
            regime,
            validity,
            out_of_regime,
        }
    }
}

/// `βmT`, or `β'mT` when `β = 0`.
pub fn regime_indicator(params: &DeformationParams, mass: f64, t: f64) -> f64 {
    let b = if params.beta > 0.0 {
        params.beta
    } else {
        params.beta_prime
    };
    b * mass * t
}

/// `Z / Z₀ ≈ 1 − 3(3β + β')mT`.
pub fn low_t_correction_factor(params: &DeformationParams, mass: f64, t: f64) -> ExpansionResult {
    let value = 1.0 - 3.0 * (3.0 * params.beta + params.beta_prime) * mass * t;
    ExpansionResult::new(value, Regime::LowT, regime_indicator(params, mass, t))
}

/// `C/N ≈ C₀/N − 6(3β + β')mT` with `C₀/N = 3/2` (ideal gas) or 3
/// (oscillator).
pub fn low_t_heat_capacity(
    system: &SystemModel,
    params: &DeformationParams,
    t: f64,
) -> Result<ExpansionResult> {
    let (c0, mass) = match system {
        SystemModel::IdealGas(g) => (1.5, g.mass),
        SystemModel::Oscillator(o) => (3.0, o.mass),
        SystemModel::PowerLaw(_) => {
            return Err(Error::InvalidParameter {
                name: "system",
                value: f64::NAN,
                reason: "low-temperature expansion is defined for the ideal gas and oscillator",
            })
        }
    };
    let value = c0 - 6.0 * (3.0 * params.beta + params.beta_prime) * mass * t;
    Ok(ExpansionResult::new(
        value,
        Regime::LowT,
        regime_indicator(params, mass, t),
    ))
}

/// `π² / (√β (√β + √(β + β'))²)`, the `T → ∞` limit of the deformed
/// momentum integral `∫ d³P / J`.
pub fn momentum_phase_volume(params: &DeformationParams) -> Result<f64> {
    if !(params.beta > 0.0) {
        return Err(Error::ZeroDeformation);
    }
    let sb = params.beta.sqrt();
    let sbb = (params.beta + params.beta_prime).sqrt();
    Ok(PI * PI / (sb * (sb + sbb).powi(2)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IdealGasLimit {
    pub z_limit: f64,
    pub e_plateau: f64,
}

/// High-temperature ideal gas: `Z₁ → V π² / (√β (√β + √(β + β'))²)` and
/// `E/N → (1/2mβ)(2√β + √(β + β'))/√(β + β')`.
pub fn high_t_ideal_gas(
    params: &DeformationParams,
    mass: f64,
    volume: f64,
) -> Result<IdealGasLimit> {
    let z = momentum_phase_volume(params)?;
    let sb = params.beta.sqrt();
    let sbb = (params.beta + params.beta_prime).sqrt();
    Ok(IdealGasLimit {
        z_limit: volume * z,
        e_plateau: (2.0 * sb + sbb) / (2.0 * mass * params.beta * sbb),
    })
}

/// `lim Z₁ / T^{3/2}` for the deformed oscillator,
/// `(2π/mω²)^{3/2} π² / (√β (√β + √(β + β'))²)`. Implies `C/N → 3/2`.
pub fn high_t_oscillator(params: &DeformationParams, mass: f64, omega: f64) -> Result<f64> {
    Ok((2.0 * PI / (mass * omega * omega)).powf(1.5) * momentum_phase_volume(params)?)
}

/// `C(T → ∞)` per particle for `H ≈ αPⁿ` in `D` dimensions when the
/// Jacobian grows as `P^{2s}`: `(D − 2s)/n`, and 0 once `2s ≥ D`.
pub fn freezing_prediction(dim: usize, exponent: f64, jacobian_growth: f64) -> f64 {
    ((dim as f64 - 2.0 * jacobian_growth) / exponent).max(0.0)
}
