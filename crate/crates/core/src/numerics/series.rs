use super::Moments;
use crate::error::{require_temperature, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSettings {
    pub tail_rel_tol: f64,
    /// Maximum number of individual levels visited.
    pub max_terms: u64,
}

impl Default for SeriesSettings {
    fn default() -> Self {
        Self {
            tail_rel_tol: 1e-12,
            max_terms: 100_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Level {
    pub energy: f64,
    pub degeneracy: u64,
}

impl Level {
    pub fn new(energy: f64, degeneracy: u64) -> Self {
        Self { energy, degeneracy }
    }
}

/// Canonical sums `Σ g e^{-E/T}` with mean and variance of `E`.
///
/// Levels arrive in shells (e.g. all `(n, l)` of one principal number `n`).
/// Energies inside a shell may come in any order, but shell minimum
/// energies must increase, each spacing must be at least the spacing two
/// shells earlier (minima may alternate between two branches, as the
/// oscillator's do between even and odd `n`), and the ratio of consecutive
/// shell degeneracies must not grow. Then every later spacing is at least
/// `d_k = min(e_k - e_{k-1}, e_{k-1} - e_{k-2})` and the remainder after
/// shell `k` is bounded by the geometric series
///
/// ```text
/// G_k e^{-e_k/T} · r / (1 - r),   r = (G_k / G_{k-1}) · e^{-d_k/T}
/// ```
///
/// and summation stops once that bound, weighted by `(1 + (e_k - e_0)/T)²`
/// to cover the second moment, drops below `tail_rel_tol` of the partial sum.
/// A finite iterator is summed exactly.
pub fn sum_levels<I>(shells: I, t: f64, settings: &SeriesSettings) -> Result<Moments>
where
    I: IntoIterator,
    I::Item: AsRef<[Level]>,
{
    require_temperature(t)?;
    if !(settings.tail_rel_tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tail_rel_tol",
            value: settings.tail_rel_tol,
            reason: "must be positive",
        });
    }

    let mut reference: Option<f64> = None;
    let (mut s0, mut s1, mut s2) = (0.0, 0.0, 0.0);
    let mut terms: u64 = 0;
    // (min energy, total degeneracy) of the previous shell
    let mut prev: Option<(f64, f64)> = None;
    // the last two spacings, most recent first
    let mut increments: [Option<f64>; 2] = [None, None];
    let mut prev_ratio: Option<f64> = None;

    for (index, shell) in shells.into_iter().enumerate() {
        let shell = shell.as_ref();
        if shell.is_empty() {
            continue;
        }
        let e_min = shell.iter().map(|l| l.energy).fold(f64::INFINITY, f64::min);
        let e0 = *reference.get_or_insert(e_min);
        let mut degeneracy = 0.0;
        for level in shell {
            terms += 1;
            if terms > settings.max_terms {
                return Err(Error::MaxTermsExceeded {
                    max_terms: settings.max_terms,
                });
            }
            let g = level.degeneracy as f64;
            let eps = (level.energy - e0) / t;
            let w = g * (-eps).exp();
            s0 += w;
            s1 += w * eps;
            s2 += w * eps * eps;
            degeneracy += g;
        }

        if let Some((e_prev, g_prev)) = prev {
            let increment = e_min - e_prev;
            if let Some(before) = increments[1] {
                let slack = 1e-12 * e_min.abs().max(1.0);
                if increment <= 0.0 || increment + slack < before {
                    return Err(Error::NonMonotoneTail {
                        shell: index,
                        increment,
                        previous: before,
                    });
                }
            }
            let ratio = degeneracy / g_prev;
            let ratio_ok = prev_ratio.is_none_or(|r| ratio <= r * (1.0 + 1e-12));
            prev_ratio = Some(ratio);
            increments = [Some(increment), increments[0]];

            let spacing = increments[1].map_or(increment, |b| b.min(increment));
            let r = ratio * (-spacing / t).exp();
            if ratio_ok && increments[1].is_some() && spacing > 0.0 && r < 1.0 {
                let eps = (e_min - e0) / t;
                let tail = degeneracy * (-eps).exp() * r / (1.0 - r);
                if tail * (1.0 + eps).powi(2) <= settings.tail_rel_tol * s0 {
                    return Ok(finish(e0, t, s0, s1, s2));
                }
            }
        }
        prev = Some((e_min, degeneracy));
    }

    match reference {
        Some(e0) => Ok(finish(e0, t, s0, s1, s2)),
        None => Ok(Moments {
            ln_z: f64::NEG_INFINITY,
            mean: 0.0,
            variance: 0.0,
        }),
    }
}

fn finish(e0: f64, t: f64, s0: f64, s1: f64, s2: f64) -> Moments {
    let mean_eps = s1 / s0;
    let var_eps = (s2 / s0 - mean_eps * mean_eps).max(0.0);
    Moments {
        ln_z: s0.ln() - e0 / t,
        mean: e0 + t * mean_eps,
        variance: t * t * var_eps,
    }
}
