use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Kempf deformation parameters together with the reduced Planck constant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeformationParams {
    pub beta: f64,
    pub beta_prime: f64,
    pub hbar: f64,
}

impl DeformationParams {
    pub fn new(beta: f64, beta_prime: f64, hbar: f64) -> Result<Self> {
        let params = Self {
            beta,
            beta_prime,
            hbar,
        };
        params.validate()?;
        Ok(params)
    }

    /// Undeformed algebra with the given `hbar`.
    pub fn canonical(hbar: f64) -> Result<Self> {
        Self::new(0.0, 0.0, hbar)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.beta.is_finite() && self.beta >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: self.beta,
                reason: "must be finite and non-negative",
            });
        }
        if !(self.beta_prime.is_finite() && self.beta_prime >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "beta_prime",
                value: self.beta_prime,
                reason: "must be finite and non-negative",
            });
        }
        if !(self.hbar.is_finite() && self.hbar > 0.0) {
            return Err(Error::InvalidParameter {
                name: "hbar",
                value: self.hbar,
                reason: "must be finite and positive",
            });
        }
        Ok(())
    }

    /// `hbar * sqrt(beta)`, the smallest attainable position uncertainty.
    pub fn minimal_length(&self) -> f64 {
        self.hbar * self.beta.sqrt()
    }

    pub fn is_deformed(&self) -> bool {
        self.beta > 0.0 || self.beta_prime > 0.0
    }
}

/// A bracket function `(i, j, X, P) -> value` with zero-based particle indices.
pub type BracketFn = Arc<dyn Fn(usize, usize, &[f64], &[f64]) -> f64 + Send + Sync>;

/// Deformed Poisson brackets of one particle in `dim` dimensions.
///
/// `xp(i, j)` gives `{X_i, P_j}` for every `i, j`. The antisymmetric tables
/// `xx` and `pp` are only ever queried with `i < j`; the lower triangle is
/// obtained by negation, so antisymmetry holds by construction.
#[derive(Clone)]
pub struct BracketSet {
    dim: usize,
    xp: BracketFn,
    xx: BracketFn,
    pp: BracketFn,
}

impl fmt::Debug for BracketSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BracketSet")
            .field("dim", &self.dim)
            .finish_non_exhaustive()
    }
}

impl BracketSet {
    pub fn new(dim: usize, xp: BracketFn, xx: BracketFn, pp: BracketFn) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(Self { dim, xp, xx, pp })
    }

    /// Canonical brackets `{X_i, P_j} = δ_ij`, all others zero.
    pub fn canonical(dim: usize) -> Result<Self> {
        Self::new(
            dim,
            Arc::new(|i, j, _, _| if i == j { 1.0 } else { 0.0 }),
            Arc::new(|_, _, _, _| 0.0),
            Arc::new(|_, _, _, _| 0.0),
        )
    }

    /// Position-independent brackets read from a `2D x 2D` antisymmetric
    /// table indexed in phase order `X_1, P_1, X_2, P_2, ...`.
    pub fn constant(dim: usize, table: Vec<f64>) -> Result<Self> {
        let n = 2 * dim;
        if table.len() != n * n {
            return Err(Error::PhasePointLength {
                expected: n * n,
                got: table.len(),
            });
        }
        let table: Arc<[f64]> = table.into();
        let (t1, t2, t3) = (table.clone(), table.clone(), table);
        Self::new(
            dim,
            Arc::new(move |i, j, _, _| t1[(2 * i) * n + 2 * j + 1]),
            Arc::new(move |i, j, _, _| t2[(2 * i) * n + 2 * j]),
            Arc::new(move |i, j, _, _| t3[(2 * i + 1) * n + 2 * j + 1]),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `{X_i, P_j}`.
    pub fn xp(&self, i: usize, j: usize, x: &[f64], p: &[f64]) -> f64 {
        (self.xp)(i, j, x, p)
    }

    /// `{X_i, X_j}` for any `i, j`.
    pub fn xx(&self, i: usize, j: usize, x: &[f64], p: &[f64]) -> f64 {
        antisymmetric(&self.xx, i, j, x, p)
    }

    /// `{P_i, P_j}` for any `i, j`.
    pub fn pp(&self, i: usize, j: usize, x: &[f64], p: &[f64]) -> f64 {
        antisymmetric(&self.pp, i, j, x, p)
    }

    /// Evaluates every bracket at `(x, p)` into a dense phase-space table.
    pub fn evaluate(&self, x: &[f64], p: &[f64]) -> Result<BracketValues> {
        let d = self.dim;
        for v in [x, p] {
            if v.len() != d {
                return Err(Error::PhasePointLength {
                    expected: d,
                    got: v.len(),
                });
            }
        }
        let n = 2 * d;
        let mut table = vec![0.0; n * n];
        let mut put = |a: usize, b: usize, v: f64| {
            table[a * n + b] = v;
            table[b * n + a] = -v;
        };
        for i in 0..d {
            for j in 0..d {
                let v = checked("xp", i, j, (self.xp)(i, j, x, p))?;
                put(2 * i, 2 * j + 1, v);
            }
            for j in i + 1..d {
                let v = checked("xx", i, j, (self.xx)(i, j, x, p))?;
                put(2 * i, 2 * j, v);
                let v = checked("pp", i, j, (self.pp)(i, j, x, p))?;
                put(2 * i + 1, 2 * j + 1, v);
            }
        }
        Ok(BracketValues { dim: d, table })
    }
}

fn antisymmetric(f: &BracketFn, i: usize, j: usize, x: &[f64], p: &[f64]) -> f64 {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => f(i, j, x, p),
        Greater => -f(j, i, x, p),
        Equal => 0.0,
    }
}

fn checked(kind: &'static str, i: usize, j: usize, value: f64) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFiniteBracket { kind, i, j, value })
    }
}

/// Brackets `{A_a, A_b}` at one phase point, where `A_{2i} = X_i` and
/// `A_{2i+1} = P_i` (zero-based).
#[derive(Debug, Clone, PartialEq)]
pub struct BracketValues {
    dim: usize,
    table: Vec<f64>,
}

impl BracketValues {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, a: usize, b: usize) -> f64 {
        self.table[a * 2 * self.dim + b]
    }

    /// Row-major `2D x 2D` antisymmetric table.
    pub fn as_slice(&self) -> &[f64] {
        &self.table
    }
}

/// Classical limit of the Kempf algebra in `dim` dimensions:
///
/// ```text
/// {X_i, P_j} = (1 + βP²) δ_ij + β' P_i P_j
/// {P_i, P_j} = 0
/// {X_i, X_j} = (2β − β' + (2β + β') βP²) / (1 + βP²) · (P_i X_j − P_j X_i)
/// ```
pub fn kempf_brackets(params: &DeformationParams, dim: usize) -> Result<BracketSet> {
    params.validate()?;
    let DeformationParams {
        beta, beta_prime, ..
    } = *params;
    BracketSet::new(
        dim,
        Arc::new(move |i, j, _, p| {
            let p2 = norm_sq(p);
            let diag = if i == j { 1.0 + beta * p2 } else { 0.0 };
            diag + beta_prime * p[i] * p[j]
        }),
        Arc::new(move |i, j, x, p| {
            let p2 = norm_sq(p);
            let coeff = (2.0 * beta - beta_prime + (2.0 * beta + beta_prime) * beta * p2)
                / (1.0 + beta * p2);
            coeff * (p[i] * x[j] - p[j] * x[i])
        }),
        Arc::new(|_, _, _, _| 0.0),
    )
}

pub(crate) fn norm_sq(v: &[f64]) -> f64 {
    v.iter().map(|c| c * c).sum()
}
