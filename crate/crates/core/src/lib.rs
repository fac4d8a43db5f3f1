//! Thermodynamics of particles obeying deformed commutation relations with
//! a minimal length.
//!
//! - [`deformation`]: deformed Poisson brackets and the Jacobian identity
//!   `J = Pf{A_a, A_b}`.
//! - [`semiclassical`]: `Z = ∫ e^{-H/T} (dX)(dP)/J` for the ideal gas,
//!   isotropic oscillator and power-law models.
//! - [`quantum_spectrum`]: exact deformed oscillator levels and their
//!   partition sum.
//! - [`asymptotics`]: closed-form low- and high-temperature limits.
//! - [`numerics`]: quadrature, level sums and canonical moments.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod asymptotics;
pub mod deformation;
mod error;
pub mod numerics;
pub mod quantum_spectrum;
pub mod semiclassical;

pub use deformation::{BracketSet, DeformationParams, PairingTable};
pub use error::{Error, Result};
pub use numerics::{Moments, QuadratureSettings, SeriesSettings};
pub use quantum_spectrum::{OscillatorQuantumParams, SpectrumLevel};
pub use semiclassical::{IdealGas, Method, Oscillator, PowerLaw, SystemModel, ThermoPoint};
