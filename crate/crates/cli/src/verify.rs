use std::fmt;

use dthermo_core::deformation::{
    jacobian_bruteforce, jacobian_generic, kempf_brackets, kempf_jacobian, pairing_table,
    MAX_BRUTEFORCE_DIM,
};
use dthermo_core::DeformationParams;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const VERIFY_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub dim: usize,
    pub trials: usize,
    pub seed: u64,
    pub pairings: usize,
    /// Max relative deviation of the pairing sum from the permutation sum.
    pub max_dev_bruteforce: f64,
    /// Max relative deviation from the closed Kempf form (three dimensions).
    pub max_dev_closed_form: Option<f64>,
}

impl VerifyReport {
    pub fn max_deviation(&self) -> f64 {
        self.max_dev_bruteforce
            .max(self.max_dev_closed_form.unwrap_or(0.0))
    }

    pub fn passed(&self) -> bool {
        self.max_deviation() <= VERIFY_TOLERANCE
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "dim={} trials={} seed={} pairings={}",
            self.dim, self.trials, self.seed, self.pairings
        )?;
        writeln!(
            f,
            "max relative deviation, pairing vs permutation sum: {:.3e}",
            self.max_dev_bruteforce
        )?;
        if let Some(d) = self.max_dev_closed_form {
            writeln!(
                f,
                "max relative deviation, pairing sum vs closed form: {d:.3e}"
            )?;
        }
        write!(
            f,
            "{} (max {:.3e}, tolerance {:.0e})",
            if self.passed() { "PASS" } else { "FAIL" },
            self.max_deviation(),
            VERIFY_TOLERANCE
        )
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Compares the Jacobian routines on `trials` seeded Kempf phase points with
/// `β, β' ∈ [0, 0.1)` and coordinates in `[-3, 3)`.
pub fn cmd_jacobian_verify(dim: usize, trials: usize, seed: u64) -> Result<VerifyReport, String> {
    if dim == 0 || dim > MAX_BRUTEFORCE_DIM {
        return Err(format!(
            "dimension must be between 1 and {MAX_BRUTEFORCE_DIM} for the permutation oracle, got {dim}"
        ));
    }
    let pairings = pairing_table(dim).map_err(|e| e.to_string())?.len();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut brute_dev: f64 = 0.0;
    let mut closed_dev: f64 = 0.0;
    for _ in 0..trials {
        let beta = rng.gen_range(0.0..0.1);
        let beta_prime = rng.gen_range(0.0..0.1);
        let x: Vec<f64> = (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let p: Vec<f64> = (0..dim).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let params = DeformationParams::new(beta, beta_prime, 1.0).map_err(|e| e.to_string())?;
        let brackets = kempf_brackets(&params, dim).map_err(|e| e.to_string())?;
        let generic = jacobian_generic(&brackets, &x, &p).map_err(|e| e.to_string())?;
        let brute = jacobian_bruteforce(&brackets, &x, &p).map_err(|e| e.to_string())?;
        brute_dev = brute_dev.max(rel(generic, brute));
        if dim == 3 {
            let p2: f64 = p.iter().map(|c| c * c).sum();
            closed_dev = closed_dev.max(rel(generic, kempf_jacobian(&params, p2)));
        }
    }
    Ok(VerifyReport {
        dim,
        trials,
        seed,
        pairings,
        max_dev_bruteforce: brute_dev,
        max_dev_closed_form: (dim == 3).then_some(closed_dev),
    })
}
