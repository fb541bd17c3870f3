//! Nörlund polynomials `B_n^(α)` (generalized Bernoulli numbers) and the
//! convergent series they induce for the Hurwitz and Riemann zeta functions,
//! polygamma functions, Dirichlet L-functions and Stieltjes constants.
//!
//! The crate is split along the arithmetic it uses:
//!
//! * [`exact`] holds everything computed without rounding: Stirling and
//!   Bernoulli numbers, harmonic numbers and the Nörlund polynomials
//!   themselves, all over [`exact::BigRational`].
//! * [`precision`] is the floating-point backbone: [`precision::MPComplex`],
//!   Γ/ψ/ψ⁽ᵐ⁾, an independent Euler–Maclaurin Hurwitz zeta used as ground
//!   truth, and tanh-sinh quadrature.
//! * [`series`] evaluates ζ(s,a), ψ⁽ⁿ⁾, ln Γ, Dirichlet L-functions, Euler
//!   sums and the Rubinstein coefficients from Nörlund coefficients.
//! * [`stieltjes`] computes γ₀(a), γ₁(a), γ₂(a) several independent ways.
//! * [`gen_stirling`] extends Stirling numbers of the first kind to a complex
//!   first argument and checks the Beta-function identities they rest on.
//! * [`verify`] collects every identity into runnable suites, and [`cli`]
//!   wraps the lot in the `norlund` binary.
//!
//! ```
//! use norlund::precision::{MPComplex, PrecisionContext};
//! use norlund::series::riemann_zeta;
//!
//! let ctx = PrecisionContext::new(64).unwrap();
//! let z = riemann_zeta(&MPComplex::from_f64(ctx.working_bits(), -2.0, 0.0), &ctx).unwrap();
//! assert!(z.value.abs().to_f64() < 1e-18);
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod gen_stirling;
pub mod precision;
pub mod series;
pub mod stieltjes;
pub mod verify;

pub use error::{Error, Result};
