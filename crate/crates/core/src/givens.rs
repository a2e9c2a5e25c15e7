//! Real Givens rotation generation `(c, s)` with `c*f + s*g = sqrt(f^2+g^2)`
//! and `-s*f + c*g = 0`.
//!
//! Sign convention: `c` carries the sign of `f` and `s` the sign of `g`.
//! Exceptional inputs are handled first: `g = 0` gives `(1, 0)` for any `f`,
//! and `f = 0` gives `(0, sign(g))`.

use serde::{Deserialize, Serialize};

use crate::error::FpError;
use crate::fp::{fma_rn, scale_pow2, split_pow4};
use crate::rhypot::{check_inputs, ordered_abs, residual};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GivensRotation {
    pub c: f64,
    pub s: f64,
}

fn exceptional(f: f64, g: f64) -> Result<Option<GivensRotation>, FpError> {
    check_inputs(f, g)?;
    if g == 0.0 {
        return Ok(Some(GivensRotation { c: 1.0, s: 0.0 }));
    }
    if f == 0.0 {
        return Ok(Some(GivensRotation { c: 0.0, s: 1.0f64.copysign(g) }));
    }
    Ok(None)
}

/// `h = RN(sqrt(RN(f^2 + g^2)))`, `c = RN(f/h)`, `s = RN(g/h)`.
pub fn dlartg_naive(f: f64, g: f64) -> Result<GivensRotation, FpError> {
    if let Some(rot) = exceptional(f, g)? {
        return Ok(rot);
    }
    let sum = f * f + g * g;
    if !sum.is_normal() {
        return Err(FpError::Range("f^2 + g^2 is not a normal number"));
    }
    let h = sum.sqrt();
    Ok(GivensRotation { c: f / h, s: g / h })
}

#[inline]
fn compensated_core(f: f64, g: f64, x: f64, y: f64) -> Option<GivensRotation> {
    let (rho, w) = residual(x, y)?;
    let nu_bar = (rho * w) * 0.5;
    Some(GivensRotation { c: fma_rn(f, rho, f * nu_bar), s: fma_rn(g, rho, g * nu_bar) })
}

/// Multiplies `f` and `g` by the compensated reciprocal hypotenuse, folding
/// the correction term into the final FMAs.
pub fn dlartg_compensated(f: f64, g: f64) -> Result<GivensRotation, FpError> {
    if let Some(rot) = exceptional(f, g)? {
        return Ok(rot);
    }
    let (x, y) = ordered_abs(f, g);
    if let Some(rot) = compensated_core(f, g, x, y) {
        return Ok(rot);
    }
    // (c, s) is invariant under scaling both inputs by a power of two.
    let k = split_pow4(x)?.k;
    let (fs, gs) = (scale_pow2(f, -2 * k), scale_pow2(g, -2 * k));
    let (xs, ys) = ordered_abs(fs, gs);
    compensated_core(fs, gs, xs, ys).ok_or(FpError::Range("rescaled sum of squares out of range"))
}
