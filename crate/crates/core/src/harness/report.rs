//! Suite reports and their serialized forms.
//!
//! JSON and CSV write every floating-point number with 17 significant
//! digits, so re-reading reproduces the doubles bit-exactly and identical
//! configurations produce byte-identical artifacts (the timestamp is the
//! only run-dependent field, and the CSV omits it).

use std::collections::BTreeMap;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::chifn::BoundRecord;
use crate::error::{Error, Result};
use crate::lindelof::MuEstimate;

use super::sweep::SweepConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
    Markdown,
}

impl std::str::FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "markdown" | "md" => Ok(ReportFormat::Markdown),
            other => Err(Error::Usage(format!("unknown format '{other}'"))),
        }
    }
}

/// Aggregate over one check's records.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub records: usize,
    pub failures: usize,
    pub worst_margin: f64,
    pub worst_sigma: f64,
    pub worst_tau: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub tool_version: String,
    pub config_echo: SweepConfig,
    pub records: Vec<BoundRecord>,
    pub summaries: BTreeMap<String, CheckSummary>,
    /// Observed supremum of |chi| / tau^(1/2-sigma) over the sweep, when the
    /// affine-exponent check ran.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub observed_ratio_sup: Option<f64>,
    pub mu_estimates: Vec<MuEstimate>,
    pub timestamp: String,
}

impl SuiteReport {
    pub fn total_failures(&self) -> usize {
        self.summaries.values().map(|s| s.failures).sum()
    }

    pub(crate) fn summarize(records: &[BoundRecord]) -> BTreeMap<String, CheckSummary> {
        let mut out: BTreeMap<String, CheckSummary> = BTreeMap::new();
        for r in records {
            let entry = out.entry(r.check_id.clone()).or_insert(CheckSummary {
                records: 0,
                failures: 0,
                worst_margin: f64::INFINITY,
                worst_sigma: f64::NAN,
                worst_tau: f64::NAN,
            });
            entry.records += 1;
            if !r.pass {
                entry.failures += 1;
            }
            if r.reason.is_none() && r.margin < entry.worst_margin {
                entry.worst_margin = r.margin;
                entry.worst_sigma = r.sigma;
                entry.worst_tau = r.tau;
            }
        }
        // checks whose every record errored get a neutral worst point
        for s in out.values_mut() {
            if s.worst_margin == f64::INFINITY {
                s.worst_margin = 0.0;
                s.worst_sigma = 0.0;
                s.worst_tau = 0.0;
            }
        }
        out
    }
}

/// Current UTC instant as RFC 3339, from the system clock.
pub(crate) fn utc_timestamp() -> String {
    let secs = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let days = (secs / 86400) as i64;
    let rem = secs % 86400;
    let (h, m, s) = (rem / 3600, (rem % 3600) / 60, rem % 60);
    // civil date from day count (proleptic Gregorian)
    let z = days + 719_468;
    let era = z.div_euclid(146_097);
    let doe = z.rem_euclid(146_097);
    let yoe = (doe - doe / 1460 + doe / 36_524 - doe / 146_096) / 365;
    let doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    let mp = (5 * doy + 2) / 153;
    let day = doy - (153 * mp + 2) / 5 + 1;
    let month = if mp < 10 { mp + 3 } else { mp - 9 };
    let year = yoe + era * 400 + i64::from(month <= 2);
    format!("{year:04}-{month:02}-{day:02}T{h:02}:{m:02}:{s:02}Z")
}

/// 17-significant-digit float serialization (serde_json formatter hook).
struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

fn fmt_f64(value: f64) -> String {
    format!("{value:.16e}")
}

pub fn render_json(report: &SuiteReport) -> Result<String> {
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigitFormatter);
    report
        .serialize(&mut ser)
        .map_err(|e| Error::Usage(format!("serialization failed: {e}")))?;
    Ok(String::from_utf8(buf).expect("serde_json emits utf-8"))
}

pub fn read_report_json(text: &str) -> Result<SuiteReport> {
    serde_json::from_str(text).map_err(|e| Error::Usage(format!("invalid report JSON: {e}")))
}

pub fn render_csv(report: &SuiteReport) -> String {
    let mut out = String::from("check_id,sigma,tau,lhs,rhs,margin,pass\n");
    for r in &report.records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.check_id,
            fmt_f64(r.sigma),
            fmt_f64(r.tau),
            fmt_f64(r.lhs),
            fmt_f64(r.rhs),
            fmt_f64(r.margin),
            r.pass
        ));
    }
    out
}

pub fn render_markdown(report: &SuiteReport) -> String {
    let mut out = String::new();
    out.push_str("# Bounds suite report\n\n");
    out.push_str(&format!("- tool version: {}\n", report.tool_version));
    out.push_str(&format!("- timestamp: {}\n", report.timestamp));
    out.push_str(&format!("- records: {}\n", report.records.len()));
    out.push_str(&format!("- failures: {}\n", report.total_failures()));
    if let Some(sup) = report.observed_ratio_sup {
        out.push_str(&format!(
            "- observed sup of |chi| tau^(sigma-1/2): {sup:.6}\n"
        ));
    }
    for (id, s) in &report.summaries {
        out.push_str(&format!("\n## {id}\n\n"));
        out.push_str("| records | failures | worst margin | at sigma | at tau |\n");
        out.push_str("|---|---|---|---|---|\n");
        out.push_str(&format!(
            "| {} | {} | {:.6e} | {:.6} | {:.6} |\n",
            s.records, s.failures, s.worst_margin, s.worst_sigma, s.worst_tau
        ));
        let failures: Vec<&BoundRecord> = report
            .records
            .iter()
            .filter(|r| r.check_id == *id && !r.pass)
            .take(20)
            .collect();
        if !failures.is_empty() {
            out.push_str("\n| sigma | tau | lhs | rhs | margin | reason |\n");
            out.push_str("|---|---|---|---|---|---|\n");
            for r in failures {
                out.push_str(&format!(
                    "| {:.6} | {:.6} | {:.6e} | {:.6e} | {:.6e} | {} |\n",
                    r.sigma,
                    r.tau,
                    r.lhs,
                    r.rhs,
                    r.margin,
                    r.reason.as_deref().unwrap_or("")
                ));
            }
        }
    }
    if !report.mu_estimates.is_empty() {
        out.push_str("\n## mu estimates\n\n");
        out.push_str("| sigma | slope | residual rms | windows |\n");
        out.push_str("|---|---|---|---|\n");
        for e in &report.mu_estimates {
            out.push_str(&format!(
                "| {:.6} | {:.6} | {:.3e} | {} |\n",
                e.sigma,
                e.slope,
                e.residual_rms,
                e.window_maxima.len()
            ));
        }
    }
    out
}

/// Write the report in the chosen format.
pub fn write_report(report: &SuiteReport, format: ReportFormat, path: &Path) -> Result<()> {
    let body = match format {
        ReportFormat::Json => render_json(report)?,
        ReportFormat::Csv => render_csv(report),
        ReportFormat::Markdown => render_markdown(report),
    };
    let io_err = |e: std::io::Error| Error::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    };
    let mut file = std::fs::File::create(path).map_err(io_err)?;
    file.write_all(body.as_bytes()).map_err(io_err)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn timestamp_shape() {
        let t = utc_timestamp();
        assert_eq!(t.len(), 20);
        assert!(t.ends_with('Z'));
        assert_eq!(&t[4..5], "-");
        assert_eq!(&t[10..11], "T");
    }

    #[test]
    fn float_format_is_17_significant_digits() {
        assert_eq!(fmt_f64(0.5), "5.0000000000000000e-1");
        let x = std::f64::consts::PI;
        let back: f64 = fmt_f64(x).parse().unwrap();
        assert_eq!(back.to_bits(), x.to_bits());
    }
}
