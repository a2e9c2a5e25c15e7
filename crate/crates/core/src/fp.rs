//! Binary64 primitives shared by the kernels and the oracle.
//!
//! Everything here assumes IEEE-754 binary64 with round-to-nearest,
//! ties-to-even. [`check_fma`] verifies at runtime that the platform FMA
//! rounds once.

use crate::error::FpError;

const MANTISSA_MASK: u64 = (1 << 52) - 1;
const EXPONENT_MASK: u64 = 0x7ff << 52;
const SIGN_MASK: u64 = 1 << 63;

/// Unit roundoff of binary64, 2^-53.
pub const UNIT_ROUNDOFF: f64 = 1.1102230246251565e-16;

/// Fused multiply-add: `RN(a * b + c)` with a single rounding.
///
/// `f64::mul_add` lowers to the hardware instruction when the target has one
/// and otherwise to the C library `fma`, which is correctly rounded.
#[inline(always)]
pub fn fma_rn(a: f64, b: f64, c: f64) -> f64 {
    a.mul_add(b, c)
}

/// Returns an error unless [`fma_rn`] rounds exactly once.
///
/// The probe `(1 + 2^-30)^2 - 1` is exactly `2^-29 + 2^-60`, which is
/// representable; a multiply followed by an add loses the `2^-60` term.
pub fn check_fma() -> Result<(), FpError> {
    let a = 1.0 + pow2(-30);
    let expected = pow2(-29) + pow2(-60);
    let got = fma_rn(std::hint::black_box(a), std::hint::black_box(a), -1.0);
    if got.to_bits() == expected.to_bits() {
        Ok(())
    } else {
        Err(FpError::FmaNotFused { got })
    }
}

/// `2^k` as a binary64, for `k` in `[-1074, 1023]`.
///
/// # Panics
///
/// Panics if `2^k` is not representable.
#[inline]
pub const fn pow2(k: i32) -> f64 {
    assert!(k >= -1074 && k <= 1023, "2^k out of binary64 range");
    if k >= -1022 {
        f64::from_bits(((k + 1023) as u64) << 52)
    } else {
        f64::from_bits(1u64 << (k + 1074))
    }
}

/// Multiplies `x` by `2^k`. Exact whenever the result is a normal number.
pub fn scale_pow2(mut x: f64, mut k: i32) -> f64 {
    while k > 1023 {
        x *= pow2(1023);
        k -= 1023;
    }
    while k < -1022 {
        // Stop short of the subnormal range so only the last step can round.
        x *= pow2(-1022);
        k += 1022;
        if x == 0.0 {
            return x;
        }
    }
    x * pow2(k)
}

/// Bit pattern of `x`.
#[inline]
pub fn to_bits(x: f64) -> u64 {
    x.to_bits()
}

/// Value with bit pattern `bits`.
#[inline]
pub fn from_bits(bits: u64) -> f64 {
    f64::from_bits(bits)
}

/// Decomposes a positive finite `x` into an integer significand in
/// `[2^52, 2^53)` and an exponent such that `x = sig * 2^(exp - 52)`.
/// Subnormals are renormalized.
pub(crate) fn normalize(x: f64) -> (u64, i32) {
    let bits = x.to_bits() & !SIGN_MASK;
    let biased = ((bits & EXPONENT_MASK) >> 52) as i32;
    let mant = bits & MANTISSA_MASK;
    if biased == 0 {
        let shift = mant.leading_zeros() as i32 - 11;
        (mant << shift, -1022 - shift)
    } else {
        (mant | (1 << 52), biased - 1023)
    }
}

/// Exponent `e` such that `|x|` lies in `[2^e, 2^(e+1))`.
pub fn exponent(x: f64) -> Result<i32, FpError> {
    if !x.is_finite() || x == 0.0 {
        return Err(FpError::Domain("exponent of zero or non-finite value"));
    }
    Ok(normalize(x).1)
}

/// Unit in the last place: `2^(e-52)` for `|x|` in `[2^e, 2^(e+1))`.
///
/// For subnormal `x` this is the subnormal spacing `2^-1074`.
pub fn ulp_of(x: f64) -> Result<f64, FpError> {
    if !x.is_finite() || x == 0.0 {
        return Err(FpError::Domain("ulp of zero or non-finite value"));
    }
    let biased = ((x.to_bits() & EXPONENT_MASK) >> 52) as i32;
    Ok(pow2((biased.max(1) - 1023 - 52).max(-1074)))
}

#[inline]
fn ordered(x: f64) -> i64 {
    let bits = x.to_bits();
    if bits & SIGN_MASK == 0 {
        bits as i64
    } else {
        -((bits & !SIGN_MASK) as i64)
    }
}

/// Number of representable steps between `a` and `b`.
///
/// Both zeros map to the same point. Values of opposite nonzero sign are a
/// domain error.
pub fn ulp_distance(a: f64, b: f64) -> Result<u64, FpError> {
    if a.is_nan() || b.is_nan() {
        return Err(FpError::Domain("ulp distance involving NaN"));
    }
    if (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0) {
        return Err(FpError::Domain("ulp distance across a sign change"));
    }
    Ok(ordered(a).abs_diff(ordered(b)))
}

/// `x = m * 4^k` with `m` in `[1, 4)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledValue {
    pub m: f64,
    pub k: i32,
}

impl ScaledValue {
    /// `m * 4^k`, exact unless the result leaves the normal range.
    pub fn reconstruct(&self) -> f64 {
        scale_pow2(self.m, 2 * self.k)
    }
}

/// Splits a positive finite `x` (subnormals allowed) into `m * 4^k`.
pub fn split_pow4(x: f64) -> Result<ScaledValue, FpError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(FpError::Domain("split_pow4 requires a positive finite value"));
    }
    let (sig, e) = normalize(x);
    let k = e.div_euclid(2);
    let m_exp = (e - 2 * k) as u64; // 0 or 1
    let m = f64::from_bits((sig & MANTISSA_MASK) | ((1023 + m_exp) << 52));
    Ok(ScaledValue { m, k })
}
