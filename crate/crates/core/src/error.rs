use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("dimension {dim} exceeds the supported maximum of {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("phase point has {got} components, expected {expected}")]
    PhasePointLength { expected: usize, got: usize },

    #[error("bracket {kind}({i},{j}) evaluated to a non-finite value {value}")]
    NonFiniteBracket {
        kind: &'static str,
        i: usize,
        j: usize,
        value: f64,
    },

    #[error("quadrature did not converge after {subdivisions} subdivisions (residual estimate {residual:e})")]
    QuadratureNonConvergence { subdivisions: usize, residual: f64 },

    #[error("integrand returned a non-finite value at P = {at}")]
    NonFiniteIntegrand { at: f64 },

    #[error("level sum exceeded {max_terms} terms before the tail bound was met")]
    MaxTermsExceeded { max_terms: u64 },

    #[error(
        "level spacing stopped growing at shell {shell} (increment {increment} after {previous})"
    )]
    NonMonotoneTail {
        shell: usize,
        increment: f64,
        previous: f64,
    },

    #[error("negative variance {variance:e} at T = {temperature}")]
    NegativeVariance { variance: f64, temperature: f64 },

    #[error("invalid quantum numbers n = {n}, l = {l}")]
    InvalidQuantumNumbers { n: u32, l: u32 },

    #[error("non-positive energy {energy} at n = {n}, l = {l}")]
    NonPositiveEnergy { n: u32, l: u32, energy: f64 },

    #[error("high-temperature limit requires beta > 0")]
    ZeroDeformation,
}

pub(crate) fn require_temperature(t: f64) -> Result<()> {
    if t.is_finite() && t > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name: "T",
            value: t,
            reason: "temperature must be positive and finite",
        })
    }
}
