//! Deformed Poisson brackets and the phase-space Jacobian they induce.
//!
//! For deformed brackets `{X_i, P_j} = f_ij`, `{X_i, X_j} = g_ij`,
//! `{P_i, P_j} = h_ij` there always exist canonical variables `(x, p)`, but
//! the semiclassical measure `(dX)(dP)/J` only needs
//! `J = ∂(X, P)/∂(x, p)`, which is a signed sum of bracket products and so
//! never requires those variables explicitly.

mod brackets;
mod jacobian;
mod pairing;

pub use brackets::{kempf_brackets, BracketFn, BracketSet, BracketValues, DeformationParams};
pub use jacobian::{
    jacobian_bruteforce, jacobian_generic, kempf_jacobian, linearized_jacobian, MAX_BRUTEFORCE_DIM,
};
pub use pairing::{
    double_factorial_odd, pairing_table, permutation_sign, PairingEntry, PairingTable,
    MAX_PAIRING_DIM,
};
