use super::brackets::{BracketSet, DeformationParams};
use super::pairing::cached_pairing_table;
use crate::error::{Error, Result};

/// Largest dimension for the unreduced `(2D)!` permutation sum.
pub const MAX_BRUTEFORCE_DIM: usize = 3;

/// Jacobian `∂(X, P)/∂(x, p)` from the bracket values at `(x, p)`, summed
/// over the `(2D-1)!!` signed pairings of phase indices.
pub fn jacobian_generic(brackets: &BracketSet, x: &[f64], p: &[f64]) -> Result<f64> {
    let table = cached_pairing_table(brackets.dim())?;
    let values = brackets.evaluate(x, p)?;
    Ok(table.pfaffian(|a, b| values.get(a, b)))
}

/// Same Jacobian from the full Levi-Civita sum
/// `1/(2^D D!) Σ_σ sgn(σ) {A_σ1, A_σ2} ... {A_σ(2D-1), A_σ(2D)}`.
///
/// Independent of the pairing table; used as its oracle.
pub fn jacobian_bruteforce(brackets: &BracketSet, x: &[f64], p: &[f64]) -> Result<f64> {
    let dim = brackets.dim();
    if dim > MAX_BRUTEFORCE_DIM {
        return Err(Error::DimensionTooLarge {
            dim,
            max: MAX_BRUTEFORCE_DIM,
        });
    }
    let values = brackets.evaluate(x, p)?;
    let n = 2 * dim;
    let mut perm: Vec<usize> = (0..n).collect();
    let term = |perm: &[usize]| -> f64 {
        perm.chunks_exact(2)
            .map(|c| values.get(c[0], c[1]))
            .product()
    };

    // Heap's algorithm; each swap flips the parity.
    let mut sum = term(&perm);
    let mut sign = 1.0;
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            sum += sign * term(&perm);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }

    let norm = (1..=dim).fold(1.0, |acc, k| acc * 2.0 * k as f64);
    Ok(sum / norm)
}

/// Closed form of the Kempf Jacobian, `(1 + βP²)² (1 + (β + β')P²)`.
///
/// Written for three dimensions; independent of position.
pub fn kempf_jacobian(params: &DeformationParams, p_squared: f64) -> f64 {
    let a = 1.0 + params.beta * p_squared;
    a * a * (1.0 + (params.beta + params.beta_prime) * p_squared)
}

/// First-order Jacobian for brackets close to canonical:
/// `1 + Σ_i ({X_i, P_i} - 1)`.
pub fn linearized_jacobian(brackets: &BracketSet, x: &[f64], p: &[f64]) -> f64 {
    1.0 + (0..brackets.dim())
        .map(|i| brackets.xp(i, i, x, p) - 1.0)
        .sum::<f64>()
}
