//! Identity suites with residuals, run by the `verify` command and the tests.

use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

mod appendix;
mod exact;
mod series;
mod stieltjes;

pub use appendix::{appendix_a, appendix_b, recursion_grid};
pub use exact::{dalpha_digamma_form, exact_suite};
pub use series::{
    consistency_identities, dirichlet_beta_values, euler_sums, negative_integer_values, oracle_agreement,
    series_suite, trivial_zeros, SeriesGrid,
};
pub use stieltjes::{constants, cross_method, dalpha_finite_difference, gamma1_methods, gamma2_check, stieltjes_suite};

/// Outcome of one identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityResult {
    pub suite: String,
    pub name: String,
    /// Relative or absolute residual as stated by the check; 0 for exact ones.
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl IdentityResult {
    pub fn new(suite: &str, name: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self {
            suite: suite.to_string(),
            name: name.into(),
            residual,
            tolerance,
            passed: residual.is_finite() && residual <= tolerance,
            note: None,
        }
    }

    /// An exact check: residual 0 when it holds, 1 otherwise.
    pub fn exact(suite: &str, name: impl Into<String>, holds: bool) -> Self {
        Self::new(suite, name, if holds { 0.0 } else { 1.0 }, 0.0)
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// A named group of checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    All,
    Exact,
    Series,
    Stieltjes,
    AppendixA,
    AppendixB,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Suite::All,
            "exact" => Suite::Exact,
            "series" => Suite::Series,
            "stieltjes" => Suite::Stieltjes,
            "appendixA" => Suite::AppendixA,
            "appendixB" => Suite::AppendixB,
            _ => return Err(Error::InvalidArgument(format!("unknown suite '{s}'"))),
        })
    }
}

/// Runs `suite`; `seed` fixes every random point.
pub fn run(suite: Suite, ctx: &PrecisionContext, seed: u64) -> Result<Vec<IdentityResult>> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Exact {
        out.extend(exact_suite());
    }
    if all || suite == Suite::Series {
        out.extend(series_suite(ctx, seed, SeriesGrid::default())?);
    }
    if all || suite == Suite::Stieltjes {
        out.extend(stieltjes_suite(ctx)?);
    }
    if all || suite == Suite::AppendixA {
        out.extend(appendix_a(ctx)?);
    }
    if all || suite == Suite::AppendixB {
        out.extend(appendix_b(ctx, seed, 50)?);
    }
    Ok(out)
}
