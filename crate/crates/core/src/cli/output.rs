use serde::Serialize;

use super::bench::BenchRow;
use super::eval::Evaluation;
use super::table::Table;
use super::Format;
use crate::verify::IdentityResult;

fn csv<R: Serialize>(rows: &[R], header: &[&str]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.serialize(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Left-aligned columns separated by two spaces.
fn columns(rows: &[Vec<String>]) -> String {
    let n = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..n)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|c| c.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for r in rows {
        let cells: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, c)| if j + 1 == r.len() { c.clone() } else { format!("{c:<w$}", w = widths[j]) })
            .collect();
        out.push_str(&cells.join("  "));
        out.push('\n');
    }
    out
}

const EVAL_FIELDS: [&str; 5] = ["value", "precision_bits", "terms_used", "tail_estimate", "converged"];

pub fn evaluation(e: &Evaluation, format: Format) -> String {
    match format {
        Format::Json => json(e),
        Format::Csv => csv(std::slice::from_ref(e), &EVAL_FIELDS),
        Format::Plain => {
            let values = [
                e.value.clone(),
                e.precision_bits.to_string(),
                e.terms_used.to_string(),
                format!("{:e}", e.tail_estimate),
                e.converged.to_string(),
            ];
            let rows: Vec<Vec<String>> =
                EVAL_FIELDS.iter().zip(values).map(|(k, v)| vec![k.to_string(), v]).collect();
            columns(&rows)
        }
    }
}

#[derive(Serialize)]
struct TableRow<'a> {
    n: usize,
    values: &'a [String],
}

pub fn table(t: &Table, format: Format) -> String {
    match format {
        Format::Json => {
            let rows: Vec<TableRow> = t.iter().map(|(n, v)| TableRow { n: *n, values: v }).collect();
            json(&rows)
        }
        Format::Csv => {
            let cells: Vec<(usize, usize, &String)> =
                t.iter().flat_map(|(n, v)| v.iter().enumerate().map(move |(k, x)| (*n, k, x))).collect();
            csv(&cells, &["n", "k", "value"])
        }
        Format::Plain => {
            let rows: Vec<Vec<String>> = t
                .iter()
                .map(|(n, v)| std::iter::once(n.to_string()).chain(v.iter().cloned()).collect())
                .collect();
            columns(&rows)
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    passed: bool,
    total: usize,
    failed: usize,
    results: &'a [IdentityResult],
}

#[derive(Serialize)]
struct FlatResult<'a> {
    suite: &'a str,
    name: &'a str,
    residual: f64,
    tolerance: f64,
    passed: bool,
    note: &'a str,
}

pub fn report(results: &[IdentityResult], format: Format) -> String {
    let failed = results.iter().filter(|r| !r.passed).count();
    match format {
        Format::Json => json(&Report { passed: failed == 0, total: results.len(), failed, results }),
        Format::Csv => {
            let flat: Vec<FlatResult> = results
                .iter()
                .map(|r| FlatResult {
                    suite: &r.suite,
                    name: &r.name,
                    residual: r.residual,
                    tolerance: r.tolerance,
                    passed: r.passed,
                    note: r.note.as_deref().unwrap_or(""),
                })
                .collect();
            csv(&flat, &["suite", "name", "residual", "tolerance", "passed", "note"])
        }
        Format::Plain => {
            let mut rows: Vec<Vec<String>> = results
                .iter()
                .map(|r| {
                    vec![
                        if r.passed { "PASS" } else { "FAIL" }.to_string(),
                        r.suite.clone(),
                        format!("{:.3e}", r.residual),
                        format!("{:.3e}", r.tolerance),
                        r.name.clone(),
                    ]
                })
                .collect();
            rows.insert(0, ["", "suite", "residual", "tolerance", "identity"].map(String::from).to_vec());
            let mut out = columns(&rows);
            out.push_str(&format!("{} of {} passed\n", results.len() - failed, results.len()));
            out
        }
    }
}

const BENCH_FIELDS: [&str; 7] = ["s", "a", "terms_used", "time", "error", "converged", "status"];

pub fn bench(rows: &[BenchRow], format: Format) -> String {
    match format {
        Format::Json => json(rows),
        Format::Csv | Format::Plain => csv(rows, &BENCH_FIELDS),
    }
}
