use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            max_subdivisions: 2000,
        }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0) {
            return Err(Error::InvalidParameter {
                name: "rel_tol",
                value: self.rel_tol,
                reason: "must be positive",
            });
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "abs_tol",
                value: self.abs_tol,
                reason: "must be non-negative",
            });
        }
        if self.max_subdivisions < 10 {
            return Err(Error::InvalidParameter {
                name: "max_subdivisions",
                value: self.max_subdivisions as f64,
                reason: "must be at least 10",
            });
        }
        Ok(())
    }
}

// 15-point Kronrod abscissae (non-negative half) and weights, with the
// embedded 7-point Gauss weights on the odd abscissae.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

#[derive(Debug, Clone, Copy)]
struct Panel<const N: usize> {
    a: f64,
    b: f64,
    value: [f64; N],
    error: [f64; N],
}

fn kronrod15<const N: usize, F>(f: &F, a: f64, b: f64) -> Result<Panel<N>>
where
    F: Fn(f64) -> Result<[f64; N]>,
{
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut samples = [[0.0; N]; 15];
    samples[7] = f(center)?;
    for k in 0..7 {
        let dx = half * XGK[k];
        samples[k] = f(center - dx)?;
        samples[14 - k] = f(center + dx)?;
    }

    let mut value = [0.0; N];
    let mut error = [0.0; N];
    for c in 0..N {
        let fc = samples[7][c];
        let mut kronrod = WGK[7] * fc;
        let mut gauss = WG[3] * fc;
        let mut abs_sum = WGK[7] * fc.abs();
        for k in 0..7 {
            let pair = samples[k][c] + samples[14 - k][c];
            kronrod += WGK[k] * pair;
            abs_sum += WGK[k] * (samples[k][c].abs() + samples[14 - k][c].abs());
            if k % 2 == 1 {
                gauss += WG[k / 2] * pair;
            }
        }
        let mean = 0.5 * kronrod;
        let mut asc = WGK[7] * (fc - mean).abs();
        for k in 0..7 {
            asc += WGK[k] * ((samples[k][c] - mean).abs() + (samples[14 - k][c] - mean).abs());
        }

        let result = kronrod * half;
        let res_abs = abs_sum * half.abs();
        let res_asc = asc * half.abs();
        value[c] = result;
        error[c] = rescale_error((kronrod - gauss) * half, res_abs, res_asc);
    }
    Ok(Panel { a, b, value, error })
}

fn rescale_error(err: f64, res_abs: f64, res_asc: f64) -> f64 {
    let mut err = err.abs();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs);
    }
    err
}

/// Globally adaptive quadrature of a vector-valued integrand on `[a, b]`.
///
/// Bisects the panel whose error is largest relative to its component's
/// tolerance until every component meets `max(abs_tol, rel_tol * |I|)`.
pub fn integrate_interval<const N: usize, F>(
    f: F,
    a: f64,
    b: f64,
    settings: &QuadratureSettings,
) -> Result<[f64; N]>
where
    F: Fn(f64) -> Result<[f64; N]>,
{
    settings.validate()?;
    let mut panels = vec![kronrod15(&f, a, b)?];

    loop {
        let mut total = [0.0; N];
        let mut total_err = [0.0; N];
        for p in &panels {
            for c in 0..N {
                total[c] += p.value[c];
                total_err[c] += p.error[c];
            }
        }
        let tol: [f64; N] =
            std::array::from_fn(|c| settings.abs_tol.max(settings.rel_tol * total[c].abs()));
        if (0..N).all(|c| total_err[c] <= tol[c]) {
            return Ok(total);
        }

        let residual = (0..N)
            .map(|c| total_err[c] / tol[c].max(f64::MIN_POSITIVE))
            .fold(0.0, f64::max);
        if panels.len() >= settings.max_subdivisions {
            return Err(Error::QuadratureNonConvergence {
                subdivisions: panels.len(),
                residual: total_err.iter().copied().fold(0.0, f64::max),
            });
        }

        let score = |p: &Panel<N>| {
            (0..N)
                .map(|c| p.error[c] / tol[c].max(f64::MIN_POSITIVE))
                .fold(0.0, f64::max)
        };
        let (worst, _) = panels.iter().enumerate().map(|(i, p)| (i, score(p))).fold(
            (0, f64::NEG_INFINITY),
            |acc, x| if x.1 > acc.1 { x } else { acc },
        );

        let Panel { a, b, .. } = panels[worst];
        let mid = 0.5 * (a + b);
        if !(mid > a && mid < b) {
            // The panel can no longer be split in floating point.
            return Err(Error::QuadratureNonConvergence {
                subdivisions: panels.len(),
                residual: residual * tol.iter().copied().fold(0.0, f64::max),
            });
        }
        panels[worst] = kronrod15(&f, a, mid)?;
        panels.push(kronrod15(&f, mid, b)?);
    }
}

/// `∫₀^∞ f(P) dP` for vector-valued `f`, through `P = scale · u / (1 - u)`.
///
/// `scale` should be a characteristic momentum of the integrand; with
/// `scale = 1` this is the plain `u = P / (1 + P)` map.
pub fn radial_integral_scaled<const N: usize, F>(
    f: F,
    scale: f64,
    settings: &QuadratureSettings,
) -> Result<[f64; N]>
where
    F: Fn(f64) -> [f64; N],
{
    if !(scale.is_finite() && scale > 0.0) {
        return Err(Error::InvalidParameter {
            name: "scale",
            value: scale,
            reason: "must be positive and finite",
        });
    }
    integrate_interval(
        |u: f64| {
            let w = 1.0 - u;
            let p = scale * u / w;
            let jac = scale / (w * w);
            let mut v = f(p);
            for c in v.iter_mut() {
                if *c != 0.0 {
                    *c *= jac;
                }
                if !c.is_finite() {
                    return Err(Error::NonFiniteIntegrand { at: p });
                }
            }
            Ok(v)
        },
        0.0,
        1.0,
        settings,
    )
}

/// `∫₀^∞ f(P) dP` via the `u = P / (1 + P)` map.
///
/// Callers apply any angular measure (e.g. `4πP²`) inside `f`.
pub fn radial_integral<F>(f: F, settings: &QuadratureSettings) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    radial_integral_scaled(|p| [f(p)], 1.0, settings).map(|[v]| v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn settings() -> QuadratureSettings {
        QuadratureSettings::default()
    }

    #[test]
    fn gaussian_shell() {
        let v = radial_integral(|p| 4.0 * PI * p * p * (-p * p).exp(), &settings()).unwrap();
        assert!((v / PI.powf(1.5) - 1.0).abs() < 1e-10, "{v}");
    }

    #[test]
    fn kempf_high_temperature_limit() {
        let beta: f64 = 0.01;
        let v = radial_integral(
            |p| {
                let q = beta * p * p;
                4.0 * PI * p * p / ((1.0 + q).powi(2) * (1.0 + 2.0 * q))
            },
            &settings(),
        )
        .unwrap();
        let expected = PI * PI / (beta.sqrt() * (beta.sqrt() + (2.0 * beta).sqrt()).powi(2));
        assert!((v / expected - 1.0).abs() < 1e-9, "{v} vs {expected}");
        assert!((expected - 1693.356).abs() < 1e-3);
    }

    #[test]
    fn zero_integrand() {
        assert_eq!(radial_integral(|_| 0.0, &settings()).unwrap(), 0.0);
    }

    #[test]
    fn finite_interval_polynomial_exact() {
        let [v] =
            integrate_interval(|x: f64| Ok([x.powi(5) - 2.0 * x]), -1.0, 2.0, &settings()).unwrap();
        assert!((v - (64.0 / 6.0 - 1.0 / 6.0 - 3.0)).abs() < 1e-12);
    }

    #[test]
    fn scaled_map_handles_wide_thermal_scale() {
        // ∫ 4πP² exp(-P²/T) dP = (πT)^{3/2}
        let t: f64 = 1e8;
        let [v] = radial_integral_scaled(
            |p| [4.0 * PI * p * p * (-p * p / t).exp()],
            t.sqrt(),
            &settings(),
        )
        .unwrap();
        assert!((v / (PI * t).powf(1.5) - 1.0).abs() < 1e-10);
    }

    #[test]
    fn non_convergence_is_reported() {
        let tight = QuadratureSettings {
            rel_tol: 1e-14,
            abs_tol: 0.0,
            max_subdivisions: 10,
        };
        let r = radial_integral(|p| (50.0 * p).sin().abs() / (1.0 + p * p), &tight);
        assert!(matches!(r, Err(Error::QuadratureNonConvergence { .. })));
    }

    #[test]
    fn non_finite_integrand_is_reported() {
        let r = radial_integral(|p| if p > 1.0 { f64::NAN } else { 1.0 }, &settings());
        assert!(matches!(r, Err(Error::NonFiniteIntegrand { .. })));
    }

    #[test]
    fn settings_validation() {
        let mut s = settings();
        s.max_subdivisions = 5;
        assert!(s.validate().is_err());
        s = settings();
        s.rel_tol = 0.0;
        assert!(s.validate().is_err());
    }
}
