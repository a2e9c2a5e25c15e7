//! Error-rate reports and their CSV, JSON and Markdown renderings.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::trial::TrialConfig;
use crate::error::ConfigError;

pub const CSV_HEADER: [&str; 10] =
    ["algo", "dist", "n", "seed", "zero_ulp", "one_ulp", "two_ulp", "three_plus_ulp", "max_ulp", "rejected"];

const BUCKET_LABELS: [&str; 4] = ["Zero ulp", "One ulp", "Two ulp", "Three+ ulp"];

/// Histogram of ulp distances for one output of an algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ChannelCounts {
    pub name: String,
    /// Counts at distance 0, 1, 2 and 3 or more.
    pub buckets: [u64; 4],
    pub max_ulp: u64,
}

impl ChannelCounts {
    pub fn new(name: &str) -> Self {
        ChannelCounts { name: name.to_string(), ..Default::default() }
    }

    pub fn add(&mut self, distance: u64) {
        self.buckets[distance.min(3) as usize] += 1;
        self.max_ulp = self.max_ulp.max(distance);
    }

    pub fn merge(&mut self, other: &ChannelCounts) {
        for (a, b) in self.buckets.iter_mut().zip(other.buckets) {
            *a += b;
        }
        self.max_ulp = self.max_ulp.max(other.max_ulp);
    }

    pub fn total(&self) -> u64 {
        self.buckets.iter().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRateReport {
    pub config: TrialConfig,
    pub channels: Vec<ChannelCounts>,
    /// Samples for which the kernel or the oracle raised an error.
    pub rejected: u64,
}

impl ErrorRateReport {
    /// Percentage of all `n` samples falling in `bucket` for `channel`.
    pub fn percent(&self, channel: usize, bucket: usize) -> f64 {
        100.0 * self.channels[channel].buckets[bucket] as f64 / self.config.n as f64
    }

    /// Buckets plus rejections account for every sample.
    pub fn is_consistent(&self) -> bool {
        self.channels.iter().all(|c| c.total() + self.rejected == self.config.n)
    }

    fn row_label(&self, channel: &ChannelCounts) -> String {
        if self.channels.len() == 1 {
            self.config.algorithm.to_string()
        } else {
            format!("{}:{}", self.config.algorithm, channel.name)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
    Markdown,
}

impl FromStr for ReportFormat {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            "md" | "markdown" => Ok(ReportFormat::Markdown),
            _ => Err(ConfigError::UnknownFormat(s.to_string())),
        }
    }
}

pub fn render_report(report: &ErrorRateReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        _ => render_reports(std::slice::from_ref(report), format),
    }
}

/// Renders several reports together; Markdown puts them side by side.
pub fn render_reports(reports: &[ErrorRateReport], format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => render_csv(reports),
        ReportFormat::Json => serde_json::to_string_pretty(reports).expect("reports serialize") + "\n",
        ReportFormat::Markdown => render_markdown(reports),
    }
}

fn render_csv(reports: &[ErrorRateReport]) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(CSV_HEADER).expect("in-memory write");
    for r in reports {
        for ch in &r.channels {
            let [zero, one, two, more] = ch.buckets;
            w.write_record([
                r.row_label(ch),
                r.config.distribution.to_string(),
                r.config.n.to_string(),
                r.config.seed.to_string(),
                zero.to_string(),
                one.to_string(),
                two.to_string(),
                more.to_string(),
                ch.max_ulp.to_string(),
                r.rejected.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

fn render_markdown(reports: &[ErrorRateReport]) -> String {
    let mut out = String::new();
    let Some(first) = reports.first() else {
        return out;
    };
    let c = &first.config;
    let _ = writeln!(out, "Error rate (%), {} n = {}, seed = {}, rng = {}", c.distribution, c.n, c.seed, c.rng);
    out.push('\n');
    let columns: Vec<(&ErrorRateReport, usize)> =
        reports.iter().flat_map(|r| (0..r.channels.len()).map(move |i| (r, i))).collect();
    out.push_str("| |");
    for (r, i) in &columns {
        let _ = write!(out, " {} |", r.row_label(&r.channels[*i]));
    }
    out.push_str("\n|---|");
    for _ in &columns {
        out.push_str("---|");
    }
    out.push('\n');
    for (b, label) in BUCKET_LABELS.iter().enumerate() {
        let _ = write!(out, "| {label} |");
        for (r, i) in &columns {
            let _ = write!(out, " {:.3} |", r.percent(*i, b));
        }
        out.push('\n');
    }
    out.push_str("| Max ulp |");
    for (r, i) in &columns {
        let _ = write!(out, " {} |", r.channels[*i].max_ulp);
    }
    out.push_str("\n| Rejected |");
    for (r, _) in &columns {
        let _ = write!(out, " {} |", r.rejected);
    }
    out.push('\n');
    out
}
