//! The `norlund` command line: `eval`, `table`, `verify` and `bench`.
//!
//! Exit codes: 0 success, 1 usage or range error, 2 non-convergence or a
//! failed identity, 3 pole or domain error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

mod bench;
mod eval;
mod output;
mod table;

pub use bench::{parse_range, BenchRow};
pub use eval::Evaluation;

#[derive(Debug, Parser)]
#[command(name = "norlund", version, about = "Nörlund polynomials and the zeta-type series they generate")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Options shared by every command.
#[derive(Clone, Debug, Args)]
pub struct CliConfig {
    /// Target precision in bits (at least 24).
    #[arg(long = "prec", global = true, default_value_t = 128, value_parser = clap::value_parser!(u32).range(24..))]
    pub precision_bits: u32,
    /// Cap on the terms of any one series.
    #[arg(long, global = true)]
    pub max_terms: Option<usize>,
    #[arg(long = "format", global = true, value_enum, default_value_t = Format::Plain)]
    pub output_format: Format,
    /// Seed of the random identity grids.
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Write the output to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

impl CliConfig {
    pub fn context(&self) -> Result<PrecisionContext> {
        let ctx = PrecisionContext::new(self.precision_bits)?;
        match self.max_terms {
            Some(m) => ctx.with_max_terms(m),
            None => Ok(ctx),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function.
    Eval(eval::EvalArgs),
    /// Print an exact table.
    Table(table::TableArgs),
    /// Run an identity suite; exits 0 iff every identity passes.
    Verify {
        /// all, exact, series, stieltjes, appendixA or appendixB
        #[arg(default_value = "all")]
        suite: String,
    },
    /// Time the Nörlund series against the Euler–Maclaurin oracle on a grid.
    Bench(bench::BenchArgs),
}

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, stderr: String::new(), code: 0 }
    }

    fn error(e: &Error) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: e.exit_code() }
    }
}

/// Parses `args` (program name first) and runs the command. Output is
/// returned rather than printed, except that `--out` writes the file.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            };
        }
    };
    let mut outcome = execute(&cli);
    if let Some(path) = &cli.config.out {
        if outcome.code == 0 || !outcome.stdout.is_empty() {
            if let Err(e) = std::fs::write(path, &outcome.stdout) {
                return Outcome::error(&Error::Io(e));
            }
            outcome.stdout.clear();
        }
    }
    outcome
}

fn execute(cli: &Cli) -> Outcome {
    let cfg = &cli.config;
    let ctx = match cfg.context() {
        Ok(c) => c,
        Err(e) => return Outcome::error(&e),
    };
    match &cli.command {
        Command::Eval(a) => match eval::evaluate(a, &ctx) {
            Ok(v) => {
                let code = if v.converged { 0 } else { 2 };
                Outcome { stdout: output::evaluation(&v, cfg.output_format), stderr: String::new(), code }
            }
            Err(Error::NonConvergence(partial)) => {
                let v = Evaluation::from_series(&partial, &ctx);
                Outcome {
                    stdout: output::evaluation(&v, cfg.output_format),
                    stderr: format!("error: {}\n", Error::NonConvergence(partial)),
                    code: 2,
                }
            }
            Err(e) => Outcome::error(&e),
        },
        Command::Table(a) => match table::table(a) {
            Ok(t) => Outcome::ok(output::table(&t, cfg.output_format)),
            Err(e) => Outcome::error(&e),
        },
        Command::Verify { suite } => {
            let suite = match suite.parse() {
                Ok(s) => s,
                Err(e) => return Outcome::error(&e),
            };
            match crate::verify::run(suite, &ctx, cfg.seed) {
                Ok(results) => {
                    let code = if results.iter().all(|r| r.passed) { 0 } else { 2 };
                    Outcome { stdout: output::report(&results, cfg.output_format), stderr: String::new(), code }
                }
                Err(e) => Outcome::error(&e),
            }
        }
        Command::Bench(a) => match bench::bench(a, &ctx) {
            Ok(rows) => Outcome::ok(output::bench(&rows, cfg.output_format)),
            Err(e) => Outcome::error(&e),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Outcome {
        run(std::iter::once("norlund").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(cli(&["eval"]).code, 1);
        assert_eq!(cli(&["eval", "zeta"]).code, 1);
        assert_eq!(cli(&["eval", "zeta", "--s", "x"]).code, 1);
        assert_eq!(cli(&["--prec", "10", "eval", "zeta", "--s", "2"]).code, 1);
        assert_eq!(cli(&["frobnicate"]).code, 1);
        assert_eq!(cli(&["verify", "nope"]).code, 1);
        assert_eq!(cli(&["--help"]).code, 0);
    }

    #[test]
    fn domain_errors_exit_three() {
        assert_eq!(cli(&["eval", "zeta", "--s", "1"]).code, 3);
        assert_eq!(cli(&["eval", "hurwitz", "--s", "2", "--a", "-1"]).code, 3);
    }

    #[test]
    fn non_convergence_exits_two_with_partial_value() {
        let o = cli(&["--max-terms", "3", "--format", "json", "eval", "hurwitz", "--s", "0.5+20i", "--a", "0.3"]);
        assert_eq!(o.code, 2, "{o:?}");
        let v: serde_json::Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v["converged"], false);
    }

    #[test]
    fn out_writes_file() {
        let path = std::env::temp_dir().join(format!("norlund-cli-{}.csv", std::process::id()));
        let o = cli(&["--format", "csv", "--out", path.to_str().unwrap(), "table", "stirling2", "--n-max", "4"]);
        assert_eq!(o.code, 0);
        assert!(o.stdout.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        std::fs::remove_file(&path).unwrap();
        assert!(text.starts_with("n,k,value\n"));
    }
}
