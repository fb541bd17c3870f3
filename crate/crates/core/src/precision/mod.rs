//! Arbitrary-precision floating backbone: the evaluation context, complex
//! arithmetic, the Γ family, the Euler–Maclaurin reference zeta and
//! quadrature.

mod complex;
mod context;
mod gamma;
mod oracle;
mod quadrature;

pub use complex::{format_float, MPComplex};
pub use context::{PrecisionContext, MIN_GUARD_BITS, MIN_TARGET_BITS};
pub use gamma::{digamma, euler_gamma, gamma, ln2, log_gamma, pi, polygamma, rgamma};
pub use oracle::{hurwitz_zeta_oracle, riemann_zeta_oracle};
pub use quadrature::quadrature;

pub(crate) use gamma::{digamma_p, gamma_p, polygamma_p, rgamma_p};
#[cfg(test)]
pub(crate) use gamma::log_gamma_p;

/// Real floats at the given precision.
pub type MPReal = rug::Float;
