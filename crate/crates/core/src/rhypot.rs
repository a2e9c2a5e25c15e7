//! Reciprocal hypotenuse `1/sqrt(x^2 + y^2)`.

use serde::{Deserialize, Serialize};

use crate::error::FpError;
use crate::fp::{fma_rn, pow2, scale_pow2, split_pow4};

/// `s + s_e` approximates `x^2 + y^2` with relative error `O(u^2)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SumSquares {
    pub s: f64,
    pub s_e: f64,
}

/// Window for the rounded sum of squares inside which every FMA residual of
/// the compensated kernels is exact and nothing over- or underflows.
pub(crate) const SAFE_SUM_MIN: f64 = pow2(-960);
pub(crate) const SAFE_SUM_MAX: f64 = pow2(960);

#[inline]
fn sum_squares_unchecked(x: f64, y: f64) -> SumSquares {
    let x_sq = x * x;
    let y_sq = y * y;
    let s = x_sq + y_sq;
    let s_e = ((y_sq - (s - x_sq)) + fma_rn(x, x, -x_sq)) + fma_rn(y, y, -y_sq);
    SumSquares { s, s_e }
}

/// Rounded `x^2 + y^2` plus its recovered error. Needs `x >= y >= 0`.
pub fn sum_squares_ee(x: f64, y: f64) -> Result<SumSquares, FpError> {
    if !(x.is_finite() && y.is_finite() && y >= 0.0 && x >= y) {
        return Err(FpError::Domain("sum_squares_ee needs finite x >= y >= 0"));
    }
    Ok(sum_squares_unchecked(x, y))
}

/// `RN(sqrt(RN(1 / RN(RN(x^2) + RN(y^2)))))`.
pub fn rhypot_naive(x: f64, y: f64) -> Result<f64, FpError> {
    check_inputs(x, y)?;
    let s = x * x + y * y;
    if !s.is_normal() {
        return Err(FpError::Range("x^2 + y^2 is not a normal number"));
    }
    let r = 1.0 / s;
    if !r.is_normal() {
        return Err(FpError::Range("1/(x^2 + y^2) is not a normal number"));
    }
    Ok(r.sqrt())
}

pub(crate) fn check_inputs(x: f64, y: f64) -> Result<(), FpError> {
    if !x.is_finite() || !y.is_finite() {
        return Err(FpError::Domain("non-finite input"));
    }
    if x == 0.0 && y == 0.0 {
        return Err(FpError::Domain("both inputs are zero"));
    }
    Ok(())
}

/// Shared front half of the compensated rhypot and Givens kernels.
///
/// Returns `(rho, w)` with `rho = RN(sqrt(RN(1/s)))` and
/// `w ~ 1 - (x^2 + y^2) * rho^2`, or `None` when `s` is outside the safe
/// window. Needs `x >= y >= 0`.
#[inline]
pub(crate) fn residual(x: f64, y: f64) -> Option<(f64, f64)> {
    let SumSquares { s, s_e } = sum_squares_unchecked(x, y);
    if !(SAFE_SUM_MIN..=SAFE_SUM_MAX).contains(&s) {
        return None;
    }
    let r = 1.0 / s;
    let sigma = fma_rn(-r, s_e, fma_rn(-r, s, 1.0));
    let rho = r.sqrt();
    let tau = fma_rn(-rho, rho, r);
    // 1 - S*rho^2 = (1 - S*r) + S*(r - rho^2)
    Some((rho, fma_rn(s, tau, sigma)))
}

/// `(|a|, |b|)` ordered as `(big, small)`.
#[inline]
pub(crate) fn ordered_abs(a: f64, b: f64) -> (f64, f64) {
    let (a, b) = (a.abs(), b.abs());
    if a < b {
        (b, a)
    } else {
        (a, b)
    }
}

/// Compensated reciprocal hypotenuse. Symmetric in its arguments and
/// independent of their signs.
pub fn rhypot_compensated(x: f64, y: f64) -> Result<f64, FpError> {
    check_inputs(x, y)?;
    let (x, y) = ordered_abs(x, y);
    if let Some((rho, w)) = residual(x, y) {
        return Ok(fma_rn(rho, w * 0.5, rho));
    }
    // Rescale so the larger input lies in [1, 4), then undo it exactly.
    let k = split_pow4(x)?.k;
    let (xs, ys) = (scale_pow2(x, -2 * k), scale_pow2(y, -2 * k));
    let (rho, w) = residual(xs, ys).ok_or(FpError::Range("rescaled sum of squares out of range"))?;
    let out = scale_pow2(fma_rn(rho, w * 0.5, rho), -2 * k);
    if !out.is_normal() {
        return Err(FpError::Range("reciprocal hypotenuse is not a normal number"));
    }
    Ok(out)
}
