//! Table, JSON and CSV renderings of reports and sweeps.
//!
//! Machine formats are loss-free: big integers are decimal strings and the
//! Harary index is a reduced `p/q` string. They never carry timings, so the
//! same input always renders to the same bytes.

use std::fmt::Write as _;
use std::io;
use std::time::Duration;

use divprime_core::{Factorization, IndexName, IndexReport, SweepSummary, VerificationResult};
use serde::Serialize;

/// Fixed CSV column order.
pub const CSV_COLUMNS: [&str; 14] = [
    "n",
    "D",
    "edges",
    "degree_sum",
    "wiener",
    "harary",
    "hyper_wiener",
    "zagreb1",
    "zagreb2",
    "gutman",
    "schultz",
    "eccentric_connectivity",
    "diameter",
    "status",
];

#[derive(Debug, Serialize)]
pub struct ReportRecord {
    pub n: String,
    pub source: &'static str,
    pub divisor_count: String,
    pub edge_count: String,
    pub degree_sum: String,
    pub wiener: String,
    pub harary: String,
    pub hyper_wiener: String,
    pub zagreb1: String,
    pub zagreb2: String,
    pub gutman: String,
    pub schultz: String,
    pub eccentric_connectivity: String,
    pub diameter: Option<u32>,
}

impl From<&IndexReport> for ReportRecord {
    fn from(r: &IndexReport) -> Self {
        ReportRecord {
            n: r.n.to_string(),
            source: r.source.as_str(),
            divisor_count: r.divisor_count.to_string(),
            edge_count: r.edge_count.to_string(),
            degree_sum: r.degree_sum.to_string(),
            wiener: r.wiener.to_string(),
            harary: r.harary.to_string(),
            hyper_wiener: r.hyper_wiener.to_string(),
            zagreb1: r.zagreb1.to_string(),
            zagreb2: r.zagreb2.to_string(),
            gutman: r.gutman.to_string(),
            schultz: r.schultz.to_string(),
            eccentric_connectivity: r.eccentric_connectivity.to_string(),
            diameter: r.diameter,
        }
    }
}

#[derive(Debug, Serialize)]
struct ComparisonRecord {
    index: &'static str,
    closed_form: String,
    oracle: String,
    equal: bool,
}

#[derive(Debug, Serialize)]
struct VerificationRecord {
    n: String,
    status: &'static str,
    closed_form: ReportRecord,
    oracle: Option<ReportRecord>,
    oracle_skipped_reason: Option<String>,
    comparisons: Vec<ComparisonRecord>,
}

impl From<&VerificationResult> for VerificationRecord {
    fn from(v: &VerificationResult) -> Self {
        VerificationRecord {
            n: v.n.to_string(),
            status: v.status.as_str(),
            closed_form: (&v.closed_form).into(),
            oracle: v.oracle.as_ref().map(Into::into),
            oracle_skipped_reason: v.oracle_skipped_reason.clone(),
            comparisons: v
                .comparisons
                .iter()
                .map(|c| ComparisonRecord {
                    index: c.index.as_str(),
                    closed_form: c.closed_form.to_string(),
                    oracle: c.oracle.to_string(),
                    equal: c.equal,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Serialize)]
struct SummaryRecord {
    lo: u64,
    hi: u64,
    total: u64,
    verified: u64,
    mismatches: u64,
    skipped: u64,
    mismatching_n: Vec<u64>,
    max_divisor_count: String,
}

impl From<&SweepSummary> for SummaryRecord {
    fn from(s: &SweepSummary) -> Self {
        SummaryRecord {
            lo: s.lo,
            hi: s.hi,
            total: s.total(),
            verified: s.verified,
            mismatches: s.mismatched,
            skipped: s.skipped,
            mismatching_n: s.mismatching_n.clone(),
            max_divisor_count: s.max_divisor_count.to_string(),
        }
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

pub fn report_json(report: &IndexReport) -> String {
    to_json_line(&ReportRecord::from(report))
}

pub fn verification_json(result: &VerificationResult) -> String {
    to_json_line(&VerificationRecord::from(result))
}

pub fn summary_json(summary: &SweepSummary) -> String {
    to_json_line(&SummaryRecord::from(summary))
}

/// One CSV row: closed-form values, the oracle's diameter when it ran, and
/// `status` (`closed_form` when no verification was attempted).
pub fn csv_row(report: &IndexReport, diameter: Option<u32>, status: &str) -> [String; 14] {
    [
        report.n.to_string(),
        report.divisor_count.to_string(),
        report.edge_count.to_string(),
        report.degree_sum.to_string(),
        report.wiener.to_string(),
        report.harary.to_string(),
        report.hyper_wiener.to_string(),
        report.zagreb1.to_string(),
        report.zagreb2.to_string(),
        report.gutman.to_string(),
        report.schultz.to_string(),
        report.eccentric_connectivity.to_string(),
        diameter.map(|d| d.to_string()).unwrap_or_default(),
        status.to_owned(),
    ]
}

pub fn verification_csv_row(result: &VerificationResult) -> [String; 14] {
    let diameter = result.oracle.as_ref().and_then(|o| o.diameter);
    csv_row(&result.closed_form, diameter, result.status.as_str())
}

/// CSV writer with the header already emitted.
pub fn csv_writer<W: io::Write>(out: W) -> csv::Result<csv::Writer<W>> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_COLUMNS)?;
    Ok(w)
}

fn label(index: IndexName) -> &'static str {
    match index {
        IndexName::EdgeCount => "edges |E|",
        IndexName::DegreeSum => "degree sum",
        IndexName::Wiener => "Wiener W",
        IndexName::Harary => "Harary H",
        IndexName::HyperWiener => "hyper-Wiener WW",
        IndexName::Zagreb1 => "first Zagreb M1",
        IndexName::Zagreb2 => "second Zagreb M2",
        IndexName::Gutman => "Gutman Gut",
        IndexName::Schultz => "Schultz S",
        IndexName::EccentricConnectivity => "eccentric connectivity",
    }
}

fn table_value(report: &IndexReport, index: IndexName) -> String {
    match index {
        IndexName::Harary => format!("{} ({:.6})", report.harary, report.harary.to_f64()),
        _ => report.value(index).to_string(),
    }
}

fn format_duration(d: Duration) -> String {
    format!("{:.3} ms", d.as_secs_f64() * 1e3)
}

pub fn report_table(f: &Factorization, report: &IndexReport) -> String {
    let mut out = String::new();
    writeln!(out, "n = {} = {}", report.n, f).unwrap();
    writeln!(out, "{:<24}{}", "divisors D", report.divisor_count).unwrap();
    for index in IndexName::ALL {
        writeln!(out, "{:<24}{}", label(index), table_value(report, index)).unwrap();
    }
    out
}

pub fn verification_table(f: &Factorization, result: &VerificationResult) -> String {
    let Some(oracle) = &result.oracle else {
        let mut out = report_table(f, &result.closed_form);
        writeln!(
            out,
            "oracle skipped: {}",
            result.oracle_skipped_reason.as_deref().unwrap_or("")
        )
        .unwrap();
        return out;
    };
    let mut out = String::new();
    writeln!(out, "n = {} = {}", result.n, f).unwrap();
    writeln!(out, "{:<24}{:<28}{:<28}", "", "closed form", "oracle").unwrap();
    writeln!(
        out,
        "{:<24}{:<28}{:<28}",
        "divisors D", result.closed_form.divisor_count, oracle.divisor_count
    )
    .unwrap();
    for c in &result.comparisons {
        writeln!(
            out,
            "{:<24}{:<28}{:<28}{}",
            label(c.index),
            table_value(&result.closed_form, c.index),
            table_value(oracle, c.index),
            if c.equal { "ok" } else { "MISMATCH" }
        )
        .unwrap();
    }
    if let Some(d) = oracle.diameter {
        writeln!(out, "{:<24}{:<28}{}", "diameter", "", d).unwrap();
    }
    writeln!(out, "status: {}", result.status).unwrap();
    writeln!(
        out,
        "closed form {}, oracle {}",
        format_duration(result.elapsed_closed_form),
        result
            .elapsed_oracle
            .map(format_duration)
            .unwrap_or_default()
    )
    .unwrap();
    out.lines()
        .map(|l| l.trim_end().to_owned() + "\n")
        .collect()
}

pub fn summary_table(summary: &SweepSummary) -> String {
    let mut out = String::new();
    writeln!(out, "range [{}, {}]: {}", summary.lo, summary.hi, summary).unwrap();
    writeln!(out, "max D {}", summary.max_divisor_count).unwrap();
    if !summary.mismatching_n.is_empty() {
        let list: Vec<_> = summary.mismatching_n.iter().map(u64::to_string).collect();
        writeln!(out, "mismatching n: {}", list.join(", ")).unwrap();
    }
    writeln!(out, "elapsed {}", format_duration(summary.elapsed)).unwrap();
    out
}

/// One table line for a mismatching `n` seen during a sweep.
pub fn mismatch_line(result: &VerificationResult) -> String {
    let parts: Vec<_> = result
        .mismatches()
        .map(|c| {
            format!(
                "{} closed_form={} oracle={}",
                c.index, c.closed_form, c.oracle
            )
        })
        .collect();
    format!("mismatch at n = {}: {}\n", result.n, parts.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use divprime_core::{closed_form, verify::verify_factorization};

    fn f(n: u64) -> Factorization {
        Factorization::from_u64(n).unwrap()
    }

    #[test]
    fn json_report_uses_strings() {
        let json = report_json(&closed_form::report(&f(12)));
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["wiener"], "23");
        assert_eq!(v["harary"], "11/1");
        assert_eq!(v["source"], "closed_form");
        assert!(v["diameter"].is_null());
    }

    #[test]
    fn csv_row_matches_columns() {
        let r = verify_factorization(&f(30), 100);
        let row = verification_csv_row(&r);
        assert_eq!(row.len(), CSV_COLUMNS.len());
        assert_eq!(row[9], "361");
        assert_eq!(row[5], "41/2");
        assert_eq!(row[12], "2");
        assert_eq!(row[13], "verified");
    }

    #[test]
    fn table_shows_harary_decimal() {
        let t = report_table(&f(8), &closed_form::report(&f(8)));
        assert!(t.contains("9/2 (4.500000)"), "{t}");
        assert!(t.starts_with("n = 8 = 2^3\n"));
    }

    #[test]
    fn verification_json_lists_ten_comparisons() {
        let v: serde_json::Value =
            serde_json::from_str(&verification_json(&verify_factorization(&f(30), 100))).unwrap();
        assert_eq!(v["status"], "verified");
        assert_eq!(v["comparisons"].as_array().unwrap().len(), 10);
        assert_eq!(v["oracle"]["gutman"], "361");
    }
}
