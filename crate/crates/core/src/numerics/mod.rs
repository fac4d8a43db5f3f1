//! Quadrature on the half-line, tail-bounded level sums and canonical
//! moments.

mod quadrature;
mod series;

pub use quadrature::{
    integrate_interval, radial_integral, radial_integral_scaled, QuadratureSettings,
};
pub use series::{sum_levels, Level, SeriesSettings};

use std::f64::consts::PI;

use crate::error::{require_temperature, Error, Result};

/// Canonical-ensemble summary of an energy distribution.
///
/// The partition function is carried as a logarithm so that sums at very
/// low temperature do not underflow; the variance is accumulated directly
/// rather than recovered from `⟨E²⟩ - ⟨E⟩²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Moments {
    pub ln_z: f64,
    pub mean: f64,
    pub variance: f64,
}

impl Moments {
    pub fn z(&self) -> f64 {
        self.ln_z.exp()
    }

    pub fn mean_sq(&self) -> f64 {
        self.variance + self.mean * self.mean
    }

    /// `Var(E) / T²`.
    pub fn heat_capacity(&self, t: f64) -> Result<f64> {
        require_temperature(t)?;
        capacity_from_variance(self.variance, t)
    }
}

/// Fluctuation formula `C = (⟨E²⟩ - ⟨E⟩²) / T²`.
///
/// Variances below `-1e-8 T²` are reported as errors; smaller negative
/// values are rounding noise and are returned unchanged.
pub fn heat_capacity_from_moments(mean: f64, mean_sq: f64, t: f64) -> Result<f64> {
    require_temperature(t)?;
    capacity_from_variance(mean_sq - mean * mean, t)
}

fn capacity_from_variance(variance: f64, t: f64) -> Result<f64> {
    let c = variance / (t * t);
    if c < -1e-8 || !c.is_finite() {
        return Err(Error::NegativeVariance {
            variance,
            temperature: t,
        });
    }
    Ok(c)
}

/// Area of the unit sphere `S^{D-1}`, `2π^{D/2} / Γ(D/2)`.
pub fn unit_sphere_area(dim: usize) -> f64 {
    match dim {
        0 => 0.0,
        1 => 2.0,
        2 => 2.0 * PI,
        d => 2.0 * PI / (d as f64 - 2.0) * unit_sphere_area(d - 2),
    }
}

/// Momentum-space Boltzmann moments of an isotropic Hamiltonian `h(|P|)`
/// with Jacobian `j(|P|)` in `dim` dimensions:
/// `Z_p = S_D ∫ P^{D-1} e^{-h/T} / j dP` and the weighted mean and variance
/// of `h`.
///
/// `h` must be nondecreasing; the integration map is scaled to the momentum
/// where `h = T`.
pub fn boltzmann_moments<H, J>(
    h: H,
    j: J,
    dim: usize,
    t: f64,
    settings: &QuadratureSettings,
) -> Result<Moments>
where
    H: Fn(f64) -> f64,
    J: Fn(f64) -> f64,
{
    require_temperature(t)?;
    if dim == 0 {
        return Err(Error::ZeroDimension);
    }
    let scale = thermal_momentum(&h, t);
    let [z, e1, e2] = radial_integral_scaled(
        |p| {
            let x = h(p) / t;
            let boltz = (-x).exp();
            if boltz == 0.0 {
                return [0.0; 3];
            }
            let w = p.powi(dim as i32 - 1) * boltz / j(p);
            [w, w * x, w * x * x]
        },
        scale,
        settings,
    )?;
    if !(z > 0.0) {
        return Err(Error::InvalidParameter {
            name: "Z",
            value: z,
            reason: "momentum integral must be positive",
        });
    }
    let mean = e1 / z;
    let variance = e2 / z - mean * mean;
    Ok(Moments {
        ln_z: (unit_sphere_area(dim) * z).ln(),
        mean: t * mean,
        variance: t * t * variance,
    })
}

/// Momentum where `h(P) = T`, or 1 if `h` never reaches `T`.
fn thermal_momentum<H: Fn(f64) -> f64>(h: &H, t: f64) -> f64 {
    let target = t + h(0.0);
    let (mut lo, mut hi) = (0.0, 1.0);
    while h(hi) < target {
        lo = hi;
        hi *= 2.0;
        if hi > 1e150 {
            return 1.0;
        }
    }
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if h(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if hi > 0.0 {
        hi
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_areas() {
        assert_eq!(unit_sphere_area(1), 2.0);
        assert!((unit_sphere_area(3) - 4.0 * PI).abs() < 1e-14);
        assert!((unit_sphere_area(4) - 2.0 * PI * PI).abs() < 1e-13);
    }

    #[test]
    fn free_particle_moments() {
        let m = 0.5;
        let t = 1.0;
        let r = boltzmann_moments(
            |p| p * p / (2.0 * m),
            |_| 1.0,
            3,
            t,
            &QuadratureSettings::default(),
        )
        .unwrap();
        assert!((r.z() / PI.powf(1.5) - 1.0).abs() < 1e-10);
        assert!((r.mean - 1.5).abs() < 1e-9);
        assert!((r.heat_capacity(t).unwrap() - 1.5).abs() < 1e-8);
    }

    #[test]
    fn vanishing_deformation_is_continuous() {
        let s = QuadratureSettings::default();
        let h = |p: f64| p * p;
        let base = boltzmann_moments(h, |_| 1.0, 3, 2.0, &s).unwrap();
        let tiny = 1e-13;
        let def = boltzmann_moments(h, |p| (1.0 + tiny * p * p).powi(3), 3, 2.0, &s).unwrap();
        assert!((def.z() / base.z() - 1.0).abs() < 1e-10);
        assert!((def.mean / base.mean - 1.0).abs() < 1e-10);
    }

    #[test]
    fn capacity_from_moments() {
        assert_eq!(heat_capacity_from_moments(2.0, 4.0, 1.0).unwrap(), 0.0);
        // 3D classical ideal gas: ⟨E⟩ = 3T/2, ⟨E²⟩ = 15T²/4
        let t = 3.0;
        let c = heat_capacity_from_moments(1.5 * t, 3.75 * t * t, t).unwrap();
        assert!((c - 1.5).abs() < 1e-14);
        assert!(matches!(
            heat_capacity_from_moments(2.0, 3.0, 1.0),
            Err(Error::NegativeVariance { .. })
        ));
    }

    #[test]
    fn einstein_limit_of_quantum_capacity() {
        let t = 40.0;
        let shells = (0u64..).map(|n| [Level::new(n as f64 + 1.5, (n + 1) * (n + 2) / 2)]);
        let m = sum_levels(shells, t, &SeriesSettings::default()).unwrap();
        let c = m.heat_capacity(t).unwrap();
        let x: f64 = 1.0 / t;
        let einstein = 3.0 * x * x * x.exp() / (x.exp() - 1.0).powi(2);
        assert!((c - einstein).abs() < 1e-9);
        assert!((c - 3.0).abs() < 1e-3);
    }

    #[test]
    fn thermal_momentum_solves_h_equals_t() {
        let p = thermal_momentum(&|p: f64| p * p, 9.0);
        assert!((p - 3.0).abs() < 1e-12);
        assert_eq!(thermal_momentum(&|_| 0.0, 1.0), 1.0);
    }
}
