use clap::{Args, ValueEnum};
use rug::Rational;

use crate::error::{Error, Result};
use crate::exact::{
    bernoulli_number, format_rational, norlund_number, norlund_poly, p_constant, stirling1, stirling2, DEFAULT_LIMIT,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum TableKind {
    /// Coefficients of `B_n^(α)` in powers of `α`.
    Norlund,
    /// Bernoulli numbers `B_n`.
    Bernoulli,
    /// Signed Stirling numbers of the first kind `s(n,k)`, `k = 0..n`.
    Stirling1,
    /// Stirling numbers of the second kind `S(n,k)`, `k = 0..n`.
    Stirling2,
    /// The constants `p_n`, `n ≥ 2`.
    PConstants,
    /// Nörlund numbers `B_n^(n)`.
    NorlundNumbers,
}

#[derive(Clone, Debug, Args)]
pub struct TableArgs {
    pub kind: TableKind,
    /// Last row index.
    #[arg(long, default_value_t = 10)]
    pub n_max: usize,
}

/// Rows `(n, entries)`; `entries[k]` is the `k`-th column.
pub type Table = Vec<(usize, Vec<String>)>;

pub(crate) fn check_n_max(n: usize) -> Result<()> {
    if n > DEFAULT_LIMIT {
        return Err(Error::Range(format!("tables stop at n = {DEFAULT_LIMIT}, got {n}")));
    }
    Ok(())
}

fn row(values: impl IntoIterator<Item = Rational>) -> Vec<String> {
    values.into_iter().map(|v| format_rational(&v)).collect()
}

pub fn table(args: &TableArgs) -> Result<Table> {
    check_n_max(args.n_max)?;
    let first = if args.kind == TableKind::PConstants { 2 } else { 0 };
    (first..=args.n_max)
        .map(|n| {
            let entries = match args.kind {
                TableKind::Norlund => row(norlund_poly(n).coeffs().iter().cloned()),
                TableKind::Bernoulli => row([bernoulli_number(n)]),
                TableKind::Stirling1 => row((0..=n).map(|k| Rational::from(stirling1(n, k)))),
                TableKind::Stirling2 => row((0..=n).map(|k| Rational::from(stirling2(n, k)))),
                TableKind::PConstants => row([p_constant(n)?]),
                TableKind::NorlundNumbers => row([norlund_number(n)]),
            };
            Ok((n, entries))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(kind: TableKind, n_max: usize) -> Table {
        table(&TableArgs { kind, n_max }).unwrap()
    }

    #[test]
    fn documented_rows() {
        // B_3^(α) = −α²(α−1)/8
        assert_eq!(t(TableKind::Norlund, 3)[3].1, ["0", "0", "1/8", "-1/8"]);
        let nn: Vec<_> = t(TableKind::NorlundNumbers, 3).into_iter().map(|r| r.1[0].clone()).collect();
        assert_eq!(nn, ["1", "-1/2", "5/6", "-9/4"]);
        assert_eq!(t(TableKind::Stirling2, 4)[4].1, ["0", "1", "7", "6", "1"]);
        assert_eq!(t(TableKind::PConstants, 3)[0].0, 2);
    }

    #[test]
    fn range() {
        let e = table(&TableArgs { kind: TableKind::Bernoulli, n_max: DEFAULT_LIMIT + 1 });
        assert!(matches!(e, Err(Error::Range(_))));
    }
}
