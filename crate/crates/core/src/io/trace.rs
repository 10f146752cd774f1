use std::fmt::Write as _;

use crate::io::number::format_g17;
use crate::iteration::{IterationRecord, IterationTrace};

pub const TRACE_HEADER: &str = "n,sigma,sigma_ratio,max,min,length,displacement";

/// One row of the spacing-statistics table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceRow {
    pub n: usize,
    pub sigma: f64,
    /// `sigma^n / sigma^(n-1)`; `None` for the first record or when the
    /// previous sigma is zero.
    pub sigma_ratio: Option<f64>,
    pub max: f64,
    pub min: f64,
    pub length: f64,
    pub displacement: Option<f64>,
}

/// Table rows for consecutive records. Ratios are taken between neighbouring
/// records, so filter the rows afterwards rather than the records before.
pub fn trace_rows(records: &[IterationRecord]) -> Vec<TraceRow> {
    let mut prev_sigma: Option<f64> = None;
    records
        .iter()
        .map(|r| {
            let sigma_ratio = prev_sigma.filter(|&p| p > 0.0).map(|p| r.stats.sigma / p);
            prev_sigma = Some(r.stats.sigma);
            TraceRow {
                n: r.n,
                sigma: r.stats.sigma,
                sigma_ratio,
                max: r.stats.max,
                min: r.stats.min,
                length: r.length,
                displacement: r.displacement,
            }
        })
        .collect()
}

/// CSV with header [`TRACE_HEADER`]; undefined ratios and the initial
/// displacement are left blank.
pub fn write_rows_csv(rows: &[TraceRow]) -> String {
    let mut out = String::from(TRACE_HEADER);
    out.push('\n');
    let opt = |v: Option<f64>| v.map(format_g17).unwrap_or_default();
    for r in rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{}",
            r.n,
            format_g17(r.sigma),
            opt(r.sigma_ratio),
            format_g17(r.max),
            format_g17(r.min),
            format_g17(r.length),
            opt(r.displacement),
        )
        .expect("writing to a String");
    }
    out
}

pub fn write_trace_csv(trace: &IterationTrace) -> String {
    write_rows_csv(&trace_rows(&trace.records))
}

/// Human-readable table in the layout `n | sigma | ratio | max | min`, with
/// `-` where the ratio is undefined.
pub fn format_stats_table(rows: &[TraceRow]) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>5}  {:>14}  {:>14}  {:>12}  {:>12}",
        "n", "sigma", "sigma/prev", "max", "min"
    )
    .expect("writing to a String");
    for r in rows {
        let ratio = r
            .sigma_ratio
            .map(|v| format!("{v:.6}"))
            .unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:>5}  {:>14.6e}  {:>14}  {:>12.8}  {:>12.8}",
            r.n, r.sigma, ratio, r.max, r.min
        )
        .expect("writing to a String");
    }
    out
}
