//! Trial execution: every sample is run through the selected kernels and the
//! exact oracle, and ulp distances are tallied per output channel.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{ChannelCounts, ErrorRateReport};
use super::sample::{Distribution, Sample, SampleStream, RNG_NAME};
use super::{AlgorithmId, OracleKind};
use crate::error::ConfigError;
use crate::fp::ulp_distance;
use crate::oracle::{rn_givens_ref, rn_rhypot_ref, rn_rsqrt_ref};

/// Samples per parallel work unit.
pub const DEFAULT_CHUNK: u64 = 1 << 14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub algorithm: AlgorithmId,
    pub distribution: Distribution,
    pub n: u64,
    pub seed: u64,
    pub rng: String,
}

impl TrialConfig {
    pub fn new(algorithm: AlgorithmId, distribution: Distribution, n: u64, seed: u64) -> Self {
        TrialConfig { algorithm, distribution, n, seed, rng: RNG_NAME.to_string() }
    }

    fn validate(&self) -> Result<(), ConfigError> {
        if self.n == 0 {
            return Err(ConfigError::EmptyTrial);
        }
        if self.rng != RNG_NAME {
            return Err(ConfigError::UnknownRng(self.rng.clone()));
        }
        self.distribution.validate()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Serial,
    /// Chunks of the given size processed on the rayon pool.
    Parallel {
        chunk: u64,
    },
}

#[derive(Debug, Clone, Default)]
struct Tally {
    channels: Vec<ChannelCounts>,
    rejected: u64,
}

impl Tally {
    fn new(kind: OracleKind) -> Self {
        Tally { channels: kind.channels().iter().map(|c| ChannelCounts::new(c)).collect(), rejected: 0 }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.channels.iter_mut().zip(other.channels) {
            a.merge(&b);
        }
        self.rejected += other.rejected;
        self
    }
}

fn reference(kind: OracleKind, sample: Sample) -> Option<[f64; 2]> {
    match (kind, sample) {
        (OracleKind::Rsqrt, Sample::Single(x)) => rn_rsqrt_ref(x).ok().map(|v| [v, 0.0]),
        (OracleKind::Rhypot, Sample::Pair(x, y)) => rn_rhypot_ref(x, y).ok().map(|v| [v, 0.0]),
        (OracleKind::Givens, Sample::Pair(f, g)) => rn_givens_ref(f, g).ok().map(|(c, s)| [c, s]),
        _ => None,
    }
}

fn record(tally: &mut Tally, algorithm: AlgorithmId, sample: Sample, reference: Option<[f64; 2]>) {
    let (Some(want), Ok(got)) = (reference, algorithm.eval(sample)) else {
        tally.rejected += 1;
        return;
    };
    let mut distances = [0u64; 2];
    for (i, d) in distances.iter_mut().enumerate().take(tally.channels.len()) {
        match ulp_distance(got[i], want[i]) {
            Ok(v) => *d = v,
            Err(_) => {
                tally.rejected += 1;
                return;
            }
        }
    }
    for (ch, d) in tally.channels.iter_mut().zip(distances) {
        ch.add(d);
    }
}

fn run_range(
    kind: OracleKind,
    algorithms: &[AlgorithmId],
    dist: Distribution,
    seed: u64,
    start: u64,
    len: u64,
) -> Vec<Tally> {
    let mut tallies = vec![Tally::new(kind); algorithms.len()];
    let stream = SampleStream::new(dist, seed, kind.arity(), start, len).expect("validated distribution");
    for sample in stream {
        let want = reference(kind, sample);
        for (tally, &alg) in tallies.iter_mut().zip(algorithms) {
            record(tally, alg, sample, want);
        }
    }
    tallies
}

fn merge_all(a: Vec<Tally>, b: Vec<Tally>) -> Vec<Tally> {
    a.into_iter().zip(b).map(|(x, y)| x.merge(y)).collect()
}

/// Runs several algorithms that share an oracle on the same sample stream,
/// evaluating the oracle once per sample.
pub fn run_comparison(
    algorithms: &[AlgorithmId],
    distribution: Distribution,
    n: u64,
    seed: u64,
    execution: Execution,
) -> Result<Vec<ErrorRateReport>, ConfigError> {
    let Some(&first) = algorithms.first() else {
        return Ok(Vec::new());
    };
    let kind = first.oracle();
    if let Some(other) = algorithms.iter().find(|a| a.oracle() != kind) {
        return Err(ConfigError::MixedOracles(first.to_string(), other.to_string()));
    }
    for &a in algorithms {
        TrialConfig::new(a, distribution, n, seed).validate()?;
    }
    let tallies = match execution {
        Execution::Serial => run_range(kind, algorithms, distribution, seed, 0, n),
        Execution::Parallel { chunk } => {
            let chunk = chunk.max(1);
            let chunks = n.div_ceil(chunk);
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let start = c * chunk;
                    run_range(kind, algorithms, distribution, seed, start, chunk.min(n - start))
                })
                .reduce(|| vec![Tally::new(kind); algorithms.len()], merge_all)
        }
    };
    Ok(algorithms
        .iter()
        .zip(tallies)
        .map(|(&a, t)| ErrorRateReport {
            config: TrialConfig::new(a, distribution, n, seed),
            channels: t.channels,
            rejected: t.rejected,
        })
        .collect())
}

/// Chunk-parallel trial.
pub fn run_trial(config: &TrialConfig) -> Result<ErrorRateReport, ConfigError> {
    run_one(config, Execution::Parallel { chunk: DEFAULT_CHUNK })
}

/// Single-threaded trial; produces the same report as [`run_trial`].
pub fn run_trial_serial(config: &TrialConfig) -> Result<ErrorRateReport, ConfigError> {
    run_one(config, Execution::Serial)
}

fn run_one(config: &TrialConfig, execution: Execution) -> Result<ErrorRateReport, ConfigError> {
    config.validate()?;
    let mut reports = run_comparison(&[config.algorithm], config.distribution, config.n, config.seed, execution)?;
    Ok(reports.remove(0))
}
