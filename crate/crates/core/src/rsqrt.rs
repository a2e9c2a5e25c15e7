//! Reciprocal square root kernels: naive, compensated (one exact Newton
//! step) and modified (Halley-corrected compensation).

use serde::{Deserialize, Serialize};

use crate::error::FpError;
use crate::fp::{fma_rn, pow2, scale_pow2, split_pow4};

/// Smallest input accepted by the unscaled kernels, 2^-510.
pub const KERNEL_MIN: f64 = pow2(-510);
/// Largest input accepted by the unscaled kernels, 2^510.
pub const KERNEL_MAX: f64 = pow2(510);

pub(crate) fn check_kernel_domain(x: f64) -> Result<(), FpError> {
    if (KERNEL_MIN..=KERNEL_MAX).contains(&x) {
        Ok(())
    } else {
        Err(FpError::Domain("rsqrt kernels need x in [2^-510, 2^510]"))
    }
}

/// Residual terms of the compensated Newton step.
///
/// With `r = RN(1/x)` and `y = RN(sqrt(r))`, `sigma` and `tau` are exact and
/// `nu_bar` is the correctly rounded `(1 - x*y^2)/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CompensationTriple {
    /// `1/2 - (x/2) * r`
    pub sigma: f64,
    /// `y^2 - r`
    pub tau: f64,
    /// `sigma - (x/2) * tau`
    pub nu_bar: f64,
}

/// `RN(sqrt(RN(1/x)))`.
pub fn rsqrt_naive(x: f64) -> Result<f64, FpError> {
    check_kernel_domain(x)?;
    Ok((1.0 / x).sqrt())
}

#[inline]
fn compensation_with_mxhalf(mxhalf: f64, r: f64, y: f64) -> CompensationTriple {
    let sigma = fma_rn(mxhalf, r, 0.5);
    let tau = fma_rn(y, y, -r);
    let nu_bar = fma_rn(mxhalf, tau, sigma);
    CompensationTriple { sigma, tau, nu_bar }
}

/// The three FMA lines of the compensated step, in order.
pub fn compensation_terms(x: f64, r: f64, y: f64) -> CompensationTriple {
    compensation_with_mxhalf(-0.5 * x, r, y)
}

/// One exact Newton step applied to the naive estimate. The result is at
/// most one ulp from the correctly rounded value.
pub fn rsqrt_compensated(x: f64) -> Result<f64, FpError> {
    check_kernel_domain(x)?;
    let r = 1.0 / x;
    let y = r.sqrt();
    let mxhalf = -0.5 * x;
    let t = compensation_with_mxhalf(mxhalf, r, y);
    Ok(fma_rn(y, t.nu_bar, y))
}

/// Second-order correction `nu = nu_bar * (1 + 1.5 * nu_bar)`.
#[inline]
pub(crate) fn halley_correction(nu_bar: f64) -> f64 {
    fma_rn(1.5 * nu_bar, nu_bar, nu_bar)
}

/// Compensation with the Halley-corrected residual.
pub fn rsqrt_modified(x: f64) -> Result<f64, FpError> {
    check_kernel_domain(x)?;
    let r = 1.0 / x;
    let y = r.sqrt();
    let mxhalf = -0.5 * x;
    let t = compensation_with_mxhalf(mxhalf, r, y);
    let nu = halley_correction(t.nu_bar);
    Ok(fma_rn(y, nu, y))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RsqrtVariant {
    Naive,
    Compensated,
    Modified,
}

impl RsqrtVariant {
    pub const ALL: [RsqrtVariant; 3] = [RsqrtVariant::Naive, RsqrtVariant::Compensated, RsqrtVariant::Modified];

    pub fn eval(self, x: f64) -> Result<f64, FpError> {
        match self {
            RsqrtVariant::Naive => rsqrt_naive(x),
            RsqrtVariant::Compensated => rsqrt_compensated(x),
            RsqrtVariant::Modified => rsqrt_modified(x),
        }
    }
}

/// Any positive finite input (subnormals included): the kernel runs on the
/// `[1, 4)` mantissa and the result is rescaled by an exact power of two.
pub fn rsqrt_full_range(x: f64, variant: RsqrtVariant) -> Result<f64, FpError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(FpError::Domain("rsqrt needs a positive finite input"));
    }
    let scaled = split_pow4(x)?;
    let y = scale_pow2(variant.eval(scaled.m)?, -scaled.k);
    if y.is_infinite() || y < f64::MIN_POSITIVE {
        return Err(FpError::Range("rescaled rsqrt result left the normal range"));
    }
    Ok(y)
}
