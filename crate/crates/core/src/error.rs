use thiserror::Error;

/// Errors raised by the binary64 primitives and the kernels.
#[derive(Debug, Clone, Copy, PartialEq, Error)]
pub enum FpError {
    #[error("domain error: {0}")]
    Domain(&'static str),
    #[error("range error: {0}")]
    Range(&'static str),
    #[error("fused multiply-add is not single-rounding (probe returned {got:e})")]
    FmaNotFused { got: f64 },
}

impl FpError {
    pub fn is_domain(&self) -> bool {
        matches!(self, FpError::Domain(_))
    }
}

/// Errors raised by the exact rounding oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("oracle domain error: {0}")]
    Domain(&'static str),
    #[error("correctly rounded result overflows binary64")]
    Overflow,
    #[error("oracle search left the +/-{steps} ulp window around estimate {estimate:e}")]
    SearchExhausted { estimate: f64, steps: u32 },
}

/// Errors raised while configuring or running a trial.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),
    #[error("invalid distribution `{0}`: {1}")]
    Distribution(String, &'static str),
    #[error("sample count must be at least 1")]
    EmptyTrial,
    #[error("unknown report format `{0}` (expected csv, json or md)")]
    UnknownFormat(String),
    #[error("unsupported generator `{0}`")]
    UnknownRng(String),
    #[error("algorithms {0} and {1} cannot share a trial (different input arity or oracle)")]
    MixedOracles(String, String),
    #[error("cannot parse `{0}` as a binary64 value")]
    BadFloat(String),
}
