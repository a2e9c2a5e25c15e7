//! Seeded input streams.
//!
//! Samples are drawn from ChaCha8 so that sample `i` of a stream depends
//! only on the seed and `i`. Uniform samples consume a fixed number of
//! 64-bit words each. Normal samples use rejection, so each one owns a
//! block of `NORMAL_BLOCK_WORDS` words starting at a position fixed by `i`.
//! Chunks of a trial seek straight to their first sample.

use std::fmt;
use std::str::FromStr;

use rand::RngCore;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ziggurat;
use crate::error::ConfigError;
use crate::fp::pow2;

/// Name of the generator, echoed in every report.
pub const RNG_NAME: &str = "chacha8";

/// Input distribution. Uniform ranges are half-open `[lo, hi)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Distribution {
    Uniform { lo: f64, hi: f64 },
    Normal { mean: f64, stddev: f64 },
}

impl Distribution {
    pub fn uniform(lo: f64, hi: f64) -> Result<Self, ConfigError> {
        let d = Distribution::Uniform { lo, hi };
        d.validate()?;
        Ok(d)
    }

    pub fn normal(mean: f64, stddev: f64) -> Result<Self, ConfigError> {
        let d = Distribution::Normal { mean, stddev };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        let bad = |why| Err(ConfigError::Distribution(self.to_string(), why));
        match *self {
            Distribution::Uniform { lo, hi } => {
                if !lo.is_finite() || !hi.is_finite() || !(hi - lo).is_finite() {
                    return bad("bounds must be finite");
                }
                if lo >= hi {
                    return bad("need lo < hi");
                }
            }
            Distribution::Normal { mean, stddev } => {
                if !mean.is_finite() || !stddev.is_finite() {
                    return bad("parameters must be finite");
                }
                if stddev <= 0.0 {
                    return bad("need stddev > 0");
                }
            }
        }
        Ok(())
    }

    /// 32-bit word position at which sample `index` starts.
    fn word_pos(&self, arity: usize, index: u64) -> u128 {
        match self {
            Distribution::Uniform { .. } => index as u128 * arity as u128 * 2,
            Distribution::Normal { .. } => index as u128 * NORMAL_BLOCK_WORDS,
        }
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distribution::Uniform { lo, hi } => write!(f, "uniform:{lo:?},{hi:?}"),
            Distribution::Normal { mean, stddev } => write!(f, "normal:{mean:?},{stddev:?}"),
        }
    }
}

impl FromStr for Distribution {
    type Err = ConfigError;

    /// `uniform:<lo>,<hi>` or `normal:<mean>,<stddev>`.
    fn from_str(s: &str) -> Result<Self, ConfigError> {
        let bad = |why| ConfigError::Distribution(s.to_string(), why);
        let (kind, params) = s.split_once(':').ok_or_else(|| bad("expected <kind>:<a>,<b>"))?;
        let (a, b) = params.split_once(',').ok_or_else(|| bad("expected two parameters"))?;
        let a = super::parse_float(a).map_err(|_| bad("unparseable parameter"))?;
        let b = super::parse_float(b).map_err(|_| bad("unparseable parameter"))?;
        match kind.trim() {
            "uniform" | "u" => Distribution::uniform(a, b),
            "normal" | "n" => Distribution::normal(a, b),
            _ => Err(bad("kind must be uniform or normal")),
        }
    }
}

impl TryFrom<String> for Distribution {
    type Error = ConfigError;

    fn try_from(s: String) -> Result<Self, ConfigError> {
        s.parse()
    }
}

impl From<Distribution> for String {
    fn from(d: Distribution) -> String {
        d.to_string()
    }
}

/// One draw: a single input or an `(x, y)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Sample {
    Single(f64),
    Pair(f64, f64),
}

/// 32-bit words reserved for each normal sample.
const NORMAL_BLOCK_WORDS: u128 = 1 << 20;

/// Deterministic stream of `n` samples starting at sample index `start`.
pub struct SampleStream {
    rng: ChaCha8Rng,
    dist: Distribution,
    arity: usize,
    index: u64,
    remaining: u64,
}

impl SampleStream {
    pub fn new(dist: Distribution, seed: u64, arity: usize, start: u64, n: u64) -> Result<Self, ConfigError> {
        dist.validate()?;
        assert!(arity == 1 || arity == 2, "arity must be 1 or 2");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_word_pos(dist.word_pos(arity, start));
        Ok(SampleStream { rng, dist, arity, index: start, remaining: n })
    }

    /// `k * 2^-53` for the top 53 bits of the next word, in `[0, 1)`.
    fn unit(&mut self) -> f64 {
        (self.rng.next_u64() >> 11) as f64 * pow2(-53)
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        let u = self.unit();
        let mut v = lo + (hi - lo) * u;
        if v >= hi {
            v = hi.next_down();
        }
        if v == 0.0 {
            // keep zero out of the stream; it is a pole of every kernel
            v = (lo + (hi - lo) * pow2(-53)).min(hi.next_down());
        }
        v
    }

    fn normal(&mut self, mean: f64, stddev: f64) -> f64 {
        mean + stddev * ziggurat::standard_normal(&mut self.rng)
    }
}

impl Iterator for SampleStream {
    type Item = Sample;

    fn next(&mut self) -> Option<Sample> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        if let Distribution::Normal { .. } = self.dist {
            self.rng.set_word_pos(self.dist.word_pos(self.arity, self.index));
        }
        self.index += 1;
        Some(match (self.dist, self.arity) {
            (Distribution::Uniform { lo, hi }, 1) => Sample::Single(self.uniform(lo, hi)),
            (Distribution::Uniform { lo, hi }, _) => {
                let x = self.uniform(lo, hi);
                Sample::Pair(x, self.uniform(lo, hi))
            }
            (Distribution::Normal { mean, stddev }, 1) => Sample::Single(self.normal(mean, stddev)),
            (Distribution::Normal { mean, stddev }, _) => {
                let x = self.normal(mean, stddev);
                Sample::Pair(x, self.normal(mean, stddev))
            }
        })
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.remaining as usize;
        (n, Some(n))
    }
}

/// `n` single inputs.
pub fn generate_samples(dist: Distribution, n: u64, seed: u64) -> Result<Vec<f64>, ConfigError> {
    Ok(SampleStream::new(dist, seed, 1, 0, n)?
        .map(|s| match s {
            Sample::Single(x) => x,
            Sample::Pair(x, _) => x,
        })
        .collect())
}

/// `n` input pairs drawn from two independent streams.
pub fn generate_pairs(dist: Distribution, n: u64, seed: u64) -> Result<Vec<(f64, f64)>, ConfigError> {
    Ok(SampleStream::new(dist, seed, 2, 0, n)?
        .map(|s| match s {
            Sample::Pair(x, y) => (x, y),
            Sample::Single(x) => (x, x),
        })
        .collect())
}
