//! Experiment harness: seeded sampling, ulp histograms against the oracle,
//! report rendering and single-input inspection.

mod float_text;
mod inspect;
mod report;
mod sample;
mod trial;
mod ziggurat;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{ConfigError, FpError};
use crate::fast_rsqrt::{rcpsqrt331d, rcpsqrt331d_modified};
use crate::givens::{dlartg_compensated, dlartg_naive};
use crate::rhypot::{rhypot_compensated, rhypot_naive};
use crate::rsqrt::{rsqrt_compensated, rsqrt_modified, rsqrt_naive};

pub use float_text::{format_both, format_hex, parse_float};
pub use inspect::{inspect, InspectError, InspectInput, InspectionRecord, InspectionRow, ValueEcho};
pub use report::{render_report, render_reports, ChannelCounts, ErrorRateReport, ReportFormat};
pub use sample::{generate_pairs, generate_samples, Distribution, Sample, SampleStream, RNG_NAME};
pub use trial::{run_comparison, run_trial, run_trial_serial, Execution, TrialConfig, DEFAULT_CHUNK};

/// Which exact reference an algorithm is measured against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    Rsqrt,
    Rhypot,
    Givens,
}

impl OracleKind {
    pub fn arity(self) -> usize {
        match self {
            OracleKind::Rsqrt => 1,
            OracleKind::Rhypot | OracleKind::Givens => 2,
        }
    }

    pub fn channels(self) -> &'static [&'static str] {
        match self {
            OracleKind::Rsqrt | OracleKind::Rhypot => &["value"],
            OracleKind::Givens => &["cos", "sin"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AlgorithmId {
    #[serde(rename = "rsqrt-naive")]
    RsqrtNaive,
    #[serde(rename = "rsqrt-compensated")]
    RsqrtCompensated,
    #[serde(rename = "rsqrt-modified")]
    RsqrtModified,
    #[serde(rename = "rcpsqrt331d")]
    RcpSqrt331d,
    #[serde(rename = "rcpsqrt331d-modified")]
    RcpSqrt331dModified,
    #[serde(rename = "rhypot-naive")]
    RhypotNaive,
    #[serde(rename = "rhypot-compensated")]
    RhypotCompensated,
    #[serde(rename = "dlartg-naive")]
    DlartgNaive,
    #[serde(rename = "dlartg-compensated")]
    DlartgCompensated,
}

impl AlgorithmId {
    pub const ALL: [AlgorithmId; 9] = [
        AlgorithmId::RsqrtNaive,
        AlgorithmId::RsqrtCompensated,
        AlgorithmId::RsqrtModified,
        AlgorithmId::RcpSqrt331d,
        AlgorithmId::RcpSqrt331dModified,
        AlgorithmId::RhypotNaive,
        AlgorithmId::RhypotCompensated,
        AlgorithmId::DlartgNaive,
        AlgorithmId::DlartgCompensated,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmId::RsqrtNaive => "rsqrt-naive",
            AlgorithmId::RsqrtCompensated => "rsqrt-compensated",
            AlgorithmId::RsqrtModified => "rsqrt-modified",
            AlgorithmId::RcpSqrt331d => "rcpsqrt331d",
            AlgorithmId::RcpSqrt331dModified => "rcpsqrt331d-modified",
            AlgorithmId::RhypotNaive => "rhypot-naive",
            AlgorithmId::RhypotCompensated => "rhypot-compensated",
            AlgorithmId::DlartgNaive => "dlartg-naive",
            AlgorithmId::DlartgCompensated => "dlartg-compensated",
        }
    }

    pub fn oracle(self) -> OracleKind {
        match self {
            AlgorithmId::RsqrtNaive
            | AlgorithmId::RsqrtCompensated
            | AlgorithmId::RsqrtModified
            | AlgorithmId::RcpSqrt331d
            | AlgorithmId::RcpSqrt331dModified => OracleKind::Rsqrt,
            AlgorithmId::RhypotNaive | AlgorithmId::RhypotCompensated => OracleKind::Rhypot,
            AlgorithmId::DlartgNaive | AlgorithmId::DlartgCompensated => OracleKind::Givens,
        }
    }

    /// Runs the kernel on one sample. Outputs beyond the algorithm's channel
    /// count are unspecified.
    pub fn eval(self, sample: Sample) -> Result<[f64; 2], FpError> {
        let (x, y) = match sample {
            Sample::Single(x) => (x, 0.0),
            Sample::Pair(x, y) => (x, y),
        };
        let one = |v: f64| [v, 0.0];
        Ok(match self {
            AlgorithmId::RsqrtNaive => one(rsqrt_naive(x)?),
            AlgorithmId::RsqrtCompensated => one(rsqrt_compensated(x)?),
            AlgorithmId::RsqrtModified => one(rsqrt_modified(x)?),
            AlgorithmId::RcpSqrt331d => one(rcpsqrt331d(x)?),
            AlgorithmId::RcpSqrt331dModified => one(rcpsqrt331d_modified(x)?),
            AlgorithmId::RhypotNaive => one(rhypot_naive(x, y)?),
            AlgorithmId::RhypotCompensated => one(rhypot_compensated(x, y)?),
            AlgorithmId::DlartgNaive => {
                let r = dlartg_naive(x, y)?;
                [r.c, r.s]
            }
            AlgorithmId::DlartgCompensated => {
                let r = dlartg_compensated(x, y)?;
                [r.c, r.s]
            }
        })
    }
}

impl fmt::Display for AlgorithmId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmId {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, ConfigError> {
        AlgorithmId::ALL
            .into_iter()
            .find(|a| a.name() == s.trim())
            .ok_or_else(|| ConfigError::UnknownAlgorithm(s.to_string()))
    }
}
