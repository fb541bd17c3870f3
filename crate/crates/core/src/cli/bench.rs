use std::time::Instant;

use clap::Args;
use rug::Float;
use serde::Serialize;

use super::eval::render;
use crate::error::{Error, Result};
use crate::precision::{hurwitz_zeta_oracle, MPComplex, PrecisionContext};
use crate::series::hurwitz_zeta;

#[derive(Clone, Debug, Args)]
pub struct BenchArgs {
    /// Real parts of `s`: a value or `lo:hi:count`.
    #[arg(long, default_value = "-5:5:11", allow_hyphen_values = true)]
    pub s_re: String,
    /// Imaginary parts of `s`: a value or `lo:hi:count`.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub s_im: String,
    /// Values of `a > 0`: a value or `lo:hi:count`.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub a: String,
}

/// One grid point. `error` is `|ζ − oracle|/max(1, |oracle|)`.
#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub s: String,
    pub a: String,
    pub terms_used: usize,
    /// Wall time of the series evaluation in seconds.
    pub time: f64,
    pub error: f64,
    pub converged: bool,
    /// `ok`, or why the row has no converged value.
    pub status: String,
}

/// `v` or `lo:hi:count`, endpoints included; `count = 0` is empty.
pub fn parse_range(text: &str) -> Result<Vec<f64>> {
    let bad = || Error::InvalidArgument(format!("not a value or lo:hi:count range: {text:?}"));
    let parts: Vec<&str> = text.split(':').collect();
    match parts.as_slice() {
        [v] => Ok(vec![v.trim().parse().map_err(|_| bad())?]),
        [lo, hi, n] => {
            let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            if !lo.is_finite() || !hi.is_finite() {
                return Err(bad());
            }
            Ok(match n {
                0 => Vec::new(),
                1 => vec![lo],
                _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
            })
        }
        _ => Err(bad()),
    }
}

fn point(s: &MPComplex, a: f64, ctx: &PrecisionContext) -> BenchRow {
    let p = ctx.working_bits();
    let af = Float::with_val(p, a);
    let start = Instant::now();
    let result = hurwitz_zeta(s, &MPComplex::from_real(af.clone()), ctx);
    let time = start.elapsed().as_secs_f64();
    let (eval, status) = match result {
        Ok(e) => (Some(e), "ok".to_string()),
        Err(Error::NonConvergence(e)) => (Some(*e), "nonconvergence".to_string()),
        Err(e) => (None, e.to_string()),
    };
    let error = match (&eval, hurwitz_zeta_oracle(s, &af, ctx)) {
        (Some(e), Ok(o)) => {
            let scale = o.abs().to_f64().max(1.0);
            (&e.value - &o).abs().to_f64() / scale
        }
        _ => f64::NAN,
    };
    BenchRow {
        s: render(s, ctx),
        a: format!("{a}"),
        terms_used: eval.as_ref().map_or(0, |e| e.terms_used),
        time,
        error,
        converged: eval.as_ref().is_some_and(|e| e.converged),
        status,
    }
}

/// Rows in the order `s_re`, then `s_im`, then `a`; the point `s = 1` is skipped.
pub fn bench(args: &BenchArgs, ctx: &PrecisionContext) -> Result<Vec<BenchRow>> {
    let (re, im, a) = (parse_range(&args.s_re)?, parse_range(&args.s_im)?, parse_range(&args.a)?);
    let p = ctx.working_bits();
    let mut rows = Vec::new();
    for &x in &re {
        for &y in &im {
            if x == 1.0 && y == 0.0 {
                continue;
            }
            let s = MPComplex::from_f64(p, x, y);
            for &av in &a {
                rows.push(point(&s, av, ctx));
            }
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("2").unwrap(), [2.0]);
        assert_eq!(parse_range("-1:1:3").unwrap(), [-1.0, 0.0, 1.0]);
        assert!(parse_range("0:1:0").unwrap().is_empty());
        assert!(parse_range("0:1").is_err());
    }

    #[test]
    fn real_line_converges() {
        let ctx = PrecisionContext::new(64).unwrap();
        let args = BenchArgs { s_re: "-5:5:11".into(), s_im: "0".into(), a: "1".into() };
        let rows = bench(&args, &ctx).unwrap();
        assert_eq!(rows.len(), 10);
        for r in &rows {
            assert!(r.converged && r.error < 1e-17, "{r:?}");
        }
    }

    #[test]
    fn failures_become_rows() {
        let ctx = PrecisionContext::new(64).unwrap().with_max_terms(2).unwrap();
        let args = BenchArgs { s_re: "0.5".into(), s_im: "20".into(), a: "-1:0.3:2".into() };
        let rows = bench(&args, &ctx).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(!rows[0].converged && rows[0].error.is_nan());
        assert_eq!(rows[1].status, "nonconvergence");
    }
}
