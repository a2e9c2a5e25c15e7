//! Runs every applicable kernel and the oracle on one input and reports
//! outputs, bit patterns and ulp distances.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::float_text::format_hex;
use super::{AlgorithmId, OracleKind, Sample};
use crate::error::{FpError, OracleError};
use crate::fp::ulp_distance;
use crate::oracle::{rn_givens_ref, rn_rhypot_ref, rn_rsqrt_ref};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InspectInput {
    Single(f64),
    Pair(f64, f64),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InspectError {
    #[error("{algorithm}: {source}")]
    Kernel { algorithm: AlgorithmId, source: FpError },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// A value in decimal, hexadecimal-significand and raw-bits form.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ValueEcho {
    pub value: f64,
    pub decimal: String,
    pub hex: String,
    pub bits: String,
}

impl ValueEcho {
    pub fn new(value: f64) -> Self {
        ValueEcho {
            value,
            decimal: format!("{value:?}"),
            hex: format_hex(value),
            bits: format!("0x{:016x}", value.to_bits()),
        }
    }
}

impl fmt::Display for ValueEcho {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<24} {:<26} {}", self.decimal, self.hex, self.bits)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InspectionRow {
    pub algorithm: AlgorithmId,
    pub channel: &'static str,
    pub output: ValueEcho,
    pub ulps: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InspectionRecord {
    pub inputs: Vec<(&'static str, ValueEcho)>,
    pub oracle: Vec<(&'static str, ValueEcho)>,
    pub rows: Vec<InspectionRow>,
}

impl InspectionRecord {
    pub fn row(&self, algorithm: AlgorithmId, channel: &str) -> Option<&InspectionRow> {
        self.rows.iter().find(|r| r.algorithm == algorithm && r.channel == channel)
    }
}

const SINGLE: [AlgorithmId; 5] = [
    AlgorithmId::RsqrtNaive,
    AlgorithmId::RsqrtCompensated,
    AlgorithmId::RsqrtModified,
    AlgorithmId::RcpSqrt331d,
    AlgorithmId::RcpSqrt331dModified,
];

const PAIR: [AlgorithmId; 4] = [
    AlgorithmId::RhypotNaive,
    AlgorithmId::RhypotCompensated,
    AlgorithmId::DlartgNaive,
    AlgorithmId::DlartgCompensated,
];

pub fn inspect(input: InspectInput) -> Result<InspectionRecord, InspectError> {
    let (sample, algorithms, inputs): (Sample, &[AlgorithmId], _) = match input {
        InspectInput::Single(x) => (Sample::Single(x), &SINGLE, vec![("x", ValueEcho::new(x))]),
        InspectInput::Pair(f, g) => {
            (Sample::Pair(f, g), &PAIR, vec![("f", ValueEcho::new(f)), ("g", ValueEcho::new(g))])
        }
    };
    // Kernels first so that a domain error is attributed to the kernel.
    let outputs = algorithms
        .iter()
        .map(|&a| a.eval(sample).map_err(|source| InspectError::Kernel { algorithm: a, source }))
        .collect::<Result<Vec<_>, _>>()?;
    let mut oracle = Vec::new();
    let mut rows = Vec::new();
    let mut refs: Vec<(OracleKind, [f64; 2])> = Vec::new();
    for (&a, out) in algorithms.iter().zip(outputs) {
        let kind = a.oracle();
        let want = match refs.iter().find(|(k, _)| *k == kind) {
            Some((_, w)) => *w,
            None => {
                let w = match (kind, sample) {
                    (OracleKind::Rsqrt, Sample::Single(x)) => [rn_rsqrt_ref(x)?, 0.0],
                    (OracleKind::Rhypot, Sample::Pair(x, y)) => [rn_rhypot_ref(x, y)?, 0.0],
                    (OracleKind::Givens, Sample::Pair(f, g)) => {
                        let (c, s) = rn_givens_ref(f, g)?;
                        [c, s]
                    }
                    _ => unreachable!("algorithm lists match input arity"),
                };
                let labels: &[&'static str] = match kind {
                    OracleKind::Rsqrt => &["rsqrt"],
                    OracleKind::Rhypot => &["rhypot"],
                    OracleKind::Givens => &["cos", "sin"],
                };
                for (i, l) in labels.iter().enumerate() {
                    oracle.push((*l, ValueEcho::new(w[i])));
                }
                refs.push((kind, w));
                w
            }
        };
        for (i, &channel) in kind.channels().iter().enumerate() {
            let ulps = ulp_distance(out[i], want[i]).map_err(|source| InspectError::Kernel { algorithm: a, source })?;
            rows.push(InspectionRow { algorithm: a, channel, output: ValueEcho::new(out[i]), ulps });
        }
    }
    Ok(InspectionRecord { inputs, oracle, rows })
}

impl fmt::Display for InspectionRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, v) in &self.inputs {
            writeln!(f, "input  {name:<27} {v}")?;
        }
        for (name, v) in &self.oracle {
            writeln!(f, "oracle {name:<27} {v}")?;
        }
        for r in &self.rows {
            let label =
                if r.channel == "value" { r.algorithm.to_string() } else { format!("{}:{}", r.algorithm, r.channel) };
            writeln!(f, "{label:<34} {}  {} ulp", r.output, r.ulps)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::pow2;

    #[test]
    fn counterexample_input() {
        let rec = inspect(InspectInput::Single(1.0 - pow2(-52))).unwrap();
        assert_eq!(rec.row(AlgorithmId::RsqrtCompensated, "value").unwrap().ulps, 1);
        assert_eq!(rec.row(AlgorithmId::RsqrtCompensated, "value").unwrap().output.value, 1.0);
        assert_eq!(rec.row(AlgorithmId::RsqrtModified, "value").unwrap().ulps, 0);
        assert_eq!(rec.row(AlgorithmId::RcpSqrt331dModified, "value").unwrap().ulps, 0);
    }

    #[test]
    fn exact_input() {
        let rec = inspect(InspectInput::Single(4.0)).unwrap();
        for r in &rec.rows {
            assert_eq!(r.output.value, 0.5, "{}", r.algorithm);
            assert_eq!(r.ulps, 0);
        }
        let text = rec.to_string();
        assert!(text.contains("0x1p-1"));
    }

    #[test]
    fn pair_input() {
        let rec = inspect(InspectInput::Pair(3.0, 4.0)).unwrap();
        assert_eq!(rec.row(AlgorithmId::DlartgCompensated, "cos").unwrap().ulps, 0);
        assert_eq!(rec.row(AlgorithmId::DlartgCompensated, "sin").unwrap().ulps, 0);
        assert_eq!(rec.row(AlgorithmId::RhypotCompensated, "value").unwrap().ulps, 0);
        assert_eq!(rec.oracle.len(), 3);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(inspect(InspectInput::Single(-1.0)), Err(InspectError::Kernel { .. })));
        assert!(matches!(inspect(InspectInput::Pair(0.0, 0.0)), Err(InspectError::Kernel { .. })));
    }
}
