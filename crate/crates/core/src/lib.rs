//! FMA-compensated kernels for the reciprocal square root, the reciprocal
//! hypotenuse and Givens rotation generation, an exact correct-rounding
//! oracle built on dyadic rationals, and a seeded harness that measures the
//! kernels' ulp error rates against the oracle.

pub mod dyadic;
pub mod error;
pub mod fast_rsqrt;
pub mod fp;
pub mod givens;
pub mod harness;
pub mod oracle;
pub mod rhypot;
pub mod rsqrt;

pub use dyadic::DyadicRational;
pub use error::{ConfigError, FpError, OracleError};
pub use givens::GivensRotation;
pub use rsqrt::{CompensationTriple, RsqrtVariant};
