use clap::Args;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{format_rational, norlund_poly, parse_rational};
use crate::gen_stirling::stirling1_complex;
use crate::precision::{format_float, hurwitz_zeta_oracle, MPComplex, PrecisionContext};
use crate::series::{
    digamma_series, dirichlet_beta, dirichlet_l, hurwitz_zeta, log_gamma_series, polygamma_series, riemann_zeta,
    DirichletCharacter, SeriesEvaluation,
};
use crate::stieltjes::{gamma0, gamma1, gamma1_binomial, gamma1_hyp, gamma2, laurent_fit, StieltjesResult};

/// Functions known to `eval`, with required and optional arguments.
const FUNCTIONS: &[(&str, &[&str], &[&str])] = &[
    ("zeta", &["s"], &[]),
    ("hurwitz", &["s", "a"], &[]),
    ("oracle", &["s", "a"], &[]),
    ("beta", &["s"], &[]),
    ("dirichlet", &["s", "chi"], &[]),
    ("digamma", &["a"], &[]),
    ("polygamma", &["n", "a"], &[]),
    ("lngamma", &["a"], &[]),
    ("stieltjes", &["n", "a"], &["method"]),
    ("stirling1", &["lambda", "k"], &[]),
    ("norlund", &["n", "alpha"], &[]),
];

#[derive(Clone, Debug, Args)]
pub struct EvalArgs {
    /// zeta, hurwitz, oracle, beta, dirichlet, digamma, polygamma, lngamma,
    /// stieltjes, stirling1 or norlund
    pub function: String,
    /// Argument `s`, real or `a+bi`.
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
    /// Shift `a`, or the argument of digamma, polygamma and lngamma; real or `a+bi`.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<String>,
    /// Order: of the polygamma, of the Stieltjes constant, or the index of `B_n^(α)`.
    #[arg(long)]
    pub n: Option<u32>,
    /// Second index of `s(λ,k)`.
    #[arg(long)]
    pub k: Option<u32>,
    /// First argument `λ` of `s(λ,k)`, real or `a+bi`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Exact rational `α` of `B_n^(α)`, e.g. `-3/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    /// Character table `χ(1),…,χ(m)`, comma separated, e.g. `1,0,-1,0`.
    #[arg(long, allow_hyphen_values = true)]
    pub chi: Option<String>,
    /// Stieltjes method: series (default), binomial, integral or fit.
    #[arg(long)]
    pub method: Option<String>,
}

impl EvalArgs {
    fn given(&self) -> Vec<&'static str> {
        let mut g = Vec::new();
        let flags: [(&'static str, bool); 8] = [
            ("s", self.s.is_some()),
            ("a", self.a.is_some()),
            ("n", self.n.is_some()),
            ("k", self.k.is_some()),
            ("lambda", self.lambda.is_some()),
            ("alpha", self.alpha.is_some()),
            ("chi", self.chi.is_some()),
            ("method", self.method.is_some()),
        ];
        for (name, set) in flags {
            if set {
                g.push(name);
            }
        }
        g
    }

    fn check_arity(&self) -> Result<()> {
        let Some((_, required, optional)) = FUNCTIONS.iter().find(|f| f.0 == self.function) else {
            let names: Vec<_> = FUNCTIONS.iter().map(|f| f.0).collect();
            return Err(Error::InvalidArgument(format!(
                "unknown function '{}', expected one of {}",
                self.function,
                names.join(", ")
            )));
        };
        let given = self.given();
        if let Some(m) = required.iter().find(|r| !given.contains(r)) {
            return Err(Error::InvalidArgument(format!("{} needs --{m}", self.function)));
        }
        if let Some(x) = given.iter().find(|g| !required.contains(g) && !optional.contains(g)) {
            return Err(Error::InvalidArgument(format!("{} takes no --{x}", self.function)));
        }
        Ok(())
    }
}

/// One evaluated value with the fields every output format carries.
#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    /// Decimal `a` or `a+bi` that parses back to the same value at
    /// `precision_bits`; an exact rational for `norlund`.
    pub value: String,
    pub precision_bits: u32,
    pub terms_used: usize,
    pub tail_estimate: f64,
    pub converged: bool,
}

/// `z` rounded to the target precision, with enough digits to read it back.
pub(crate) fn render(z: &MPComplex, ctx: &PrecisionContext) -> String {
    let t = ctx.target_bits();
    let digits = ctx.round_trip_digits();
    let re = format_float(&Float::with_val(t, &z.re), digits);
    if z.im.is_zero() {
        return re;
    }
    let im = format_float(&Float::with_val(t, &z.im), digits);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

impl Evaluation {
    pub fn from_series(e: &SeriesEvaluation, ctx: &PrecisionContext) -> Self {
        Evaluation {
            value: render(&e.value, ctx),
            precision_bits: ctx.target_bits(),
            terms_used: e.terms_used,
            tail_estimate: e.tail_estimate.to_f64(),
            converged: e.converged,
        }
    }

    fn from_stieltjes(r: &StieltjesResult, ctx: &PrecisionContext) -> Self {
        Evaluation {
            value: render(&MPComplex::from_real(r.value.clone()), ctx),
            precision_bits: ctx.target_bits(),
            terms_used: r.terms_used,
            tail_estimate: r.tail_estimate.to_f64(),
            converged: true,
        }
    }

    fn closed(z: &MPComplex, ctx: &PrecisionContext) -> Self {
        Evaluation {
            value: render(z, ctx),
            precision_bits: ctx.target_bits(),
            terms_used: 0,
            tail_estimate: 0.0,
            converged: true,
        }
    }
}

fn complex(name: &str, v: &Option<String>, ctx: &PrecisionContext) -> Result<MPComplex> {
    let text = v.as_deref().ok_or_else(|| Error::InvalidArgument(format!("missing --{name}")))?;
    MPComplex::parse(text, ctx.working_bits())
}

fn real(name: &str, v: &Option<String>, ctx: &PrecisionContext) -> Result<Float> {
    let z = complex(name, v, ctx)?;
    if !z.im.is_zero() {
        return Err(Error::InvalidArgument(format!("--{name} must be real")));
    }
    Ok(z.re)
}

fn character(text: &str, ctx: &PrecisionContext) -> Result<DirichletCharacter> {
    let values = text
        .split(',')
        .map(|v| MPComplex::parse(v, ctx.working_bits()))
        .collect::<Result<Vec<_>>>()?;
    DirichletCharacter::new(values.len(), values)
}

pub fn evaluate(args: &EvalArgs, ctx: &PrecisionContext) -> Result<Evaluation> {
    args.check_arity()?;
    let series = |e: Result<SeriesEvaluation>| e.map(|e| Evaluation::from_series(&e, ctx));
    match args.function.as_str() {
        "zeta" => series(riemann_zeta(&complex("s", &args.s, ctx)?, ctx)),
        "hurwitz" => series(hurwitz_zeta(&complex("s", &args.s, ctx)?, &complex("a", &args.a, ctx)?, ctx)),
        "oracle" => {
            let z = hurwitz_zeta_oracle(&complex("s", &args.s, ctx)?, &real("a", &args.a, ctx)?, ctx)?;
            Ok(Evaluation::closed(&z, ctx))
        }
        "beta" => series(dirichlet_beta(&complex("s", &args.s, ctx)?, ctx)),
        "dirichlet" => {
            let chi = character(args.chi.as_deref().unwrap_or_default(), ctx)?;
            series(dirichlet_l(&complex("s", &args.s, ctx)?, &chi, ctx))
        }
        "digamma" => {
            // the series gives ψ(a) − ln a
            let a = complex("a", &args.a, ctx)?;
            series(digamma_series(&a, ctx).map(|mut e| {
                e.value = &e.value + &a.ln();
                e
            }))
        }
        "polygamma" => series(polygamma_series(args.n.unwrap_or_default(), &complex("a", &args.a, ctx)?, ctx)),
        // the series gives ln Γ(x+1)
        "lngamma" => series(log_gamma_series(&complex("a", &args.a, ctx)?.add_i64(-1), ctx)),
        "stieltjes" => {
            let a = real("a", &args.a, ctx)?;
            let n = args.n.unwrap_or_default();
            let method = args.method.as_deref().unwrap_or("series");
            let r = match (n, method) {
                (0, "series") => return Ok(Evaluation::closed(&MPComplex::from_real(gamma0(&a, ctx)?), ctx)),
                (1, "series") => gamma1(&a, ctx)?,
                (1, "binomial") => gamma1_binomial(&a, ctx)?,
                (1, "integral") => gamma1_hyp(&a, ctx)?,
                (2, "series") => gamma2(&a, ctx)?,
                (0..=2, "fit") => laurent_fit(n, &a, ctx)?,
                (3.., _) => return Err(Error::Range(format!("Stieltjes constants cover n ≤ 2, got {n}"))),
                _ => {
                    return Err(Error::InvalidArgument(format!("method '{method}' is not available for n = {n}")))
                }
            };
            Ok(Evaluation::from_stieltjes(&r, ctx))
        }
        "stirling1" => {
            let z = stirling1_complex(&complex("lambda", &args.lambda, ctx)?, args.k.unwrap_or_default(), ctx)?;
            Ok(Evaluation::closed(&z, ctx))
        }
        "norlund" => {
            let n = args.n.unwrap_or_default() as usize;
            let alpha = parse_rational(args.alpha.as_deref().unwrap_or_default())?;
            super::table::check_n_max(n)?;
            Ok(Evaluation {
                value: format_rational(&norlund_poly(n).eval(&alpha)),
                precision_bits: ctx.target_bits(),
                terms_used: 0,
                tail_estimate: 0.0,
                converged: true,
            })
        }
        _ => unreachable!("arity check rejects unknown names"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::pi;

    fn args(function: &str) -> EvalArgs {
        EvalArgs {
            function: function.into(),
            s: None,
            a: None,
            n: None,
            k: None,
            lambda: None,
            alpha: None,
            chi: None,
            method: None,
        }
    }

    #[test]
    fn zeta_two_round_trips_to_pi_squared_over_six() {
        let ctx = PrecisionContext::default();
        let e = evaluate(&EvalArgs { s: Some("2".into()), ..args("zeta") }, &ctx).unwrap();
        let back = Float::with_val(128, Float::parse(&e.value).unwrap());
        let want = Float::with_val(128, pi(256).square() / 6u32);
        assert_eq!(back, want);
        assert!(e.converged);
    }

    #[test]
    fn hurwitz_at_zero() {
        let ctx = PrecisionContext::default();
        let e = evaluate(&EvalArgs { s: Some("0".into()), a: Some("0.75".into()), ..args("hurwitz") }, &ctx).unwrap();
        assert_eq!(e.value, format_float(&Float::with_val(128, -0.25), ctx.round_trip_digits()));
    }

    #[test]
    fn gamma_family_values() {
        let ctx = PrecisionContext::new(64).unwrap();
        let e = evaluate(&EvalArgs { a: Some("1".into()), ..args("digamma") }, &ctx).unwrap();
        assert!((Float::parse(&e.value).map(|v| Float::with_val(64, v)).unwrap().to_f64() + 0.5772156649015329).abs() < 1e-15);
        // ln Γ(1/2) = ln √π
        let e = evaluate(&EvalArgs { a: Some("0.5".into()), ..args("lngamma") }, &ctx).unwrap();
        assert!((Float::parse(&e.value).map(|v| Float::with_val(64, v)).unwrap().to_f64() - 0.5723649429247001).abs() < 1e-15);
    }

    #[test]
    fn norlund_is_exact() {
        let ctx = PrecisionContext::default();
        let e = evaluate(&EvalArgs { n: Some(3), alpha: Some("3".into()), ..args("norlund") }, &ctx).unwrap();
        assert_eq!(e.value, "-9/4");
    }

    #[test]
    fn arity() {
        let ctx = PrecisionContext::default();
        let e = evaluate(&EvalArgs { s: Some("2".into()), a: Some("1".into()), ..args("zeta") }, &ctx);
        assert!(matches!(e, Err(Error::InvalidArgument(_))));
        let e = evaluate(&args("hurwitz"), &ctx);
        assert!(matches!(e, Err(Error::InvalidArgument(_))));
    }
}
