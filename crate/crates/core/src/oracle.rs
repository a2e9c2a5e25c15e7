//! Correctly rounded references for `1/sqrt(x)`, `1/sqrt(x^2+y^2)` and the
//! Givens pair `(f, g)/sqrt(f^2+g^2)`.
//!
//! None of these targets is a dyadic rational, but each can be compared
//! exactly with any dyadic `m > 0` by squaring: `1/sqrt(x) > m` iff
//! `1 > m^2 * x`. The oracle starts from a floating-point estimate and moves
//! one ulp at a time until both neighbouring midpoints bracket the target.
//! The comparisons that stop the search are returned as a [`Certificate`].

use std::cmp::Ordering;

use log::warn;

use crate::dyadic::DyadicRational;
use crate::error::OracleError;
use crate::fp::{exponent, scale_pow2, split_pow4};

/// Maximum number of one-ulp moves away from the starting estimate.
pub const MAX_SEARCH_STEPS: u32 = 4;

/// Exact comparisons proving that `value` is the rounded target.
///
/// `lower`/`upper` are the midpoints between `value` and its neighbours;
/// the `*_cmp` fields record `target.cmp(midpoint)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub value: f64,
    pub lower: Option<DyadicRational>,
    pub lower_cmp: Option<Ordering>,
    pub upper: DyadicRational,
    pub upper_cmp: Ordering,
}

impl Certificate {
    /// True when the target lies strictly between the midpoints.
    pub fn is_strict(&self) -> bool {
        self.upper_cmp == Ordering::Less && self.lower_cmp.is_none_or(|c| c == Ordering::Greater)
    }

    /// True when the target sits exactly on one of the midpoints.
    pub fn is_tie(&self) -> bool {
        self.upper_cmp == Ordering::Equal || self.lower_cmp == Some(Ordering::Equal)
    }

    /// True when `value` is the round-to-nearest-even image of the target.
    pub fn is_correctly_rounded(&self) -> bool {
        let even = self.value.to_bits() & 1 == 0;
        self.is_strict()
            || (self.upper_cmp != Ordering::Greater && self.lower_cmp != Some(Ordering::Less) && self.is_tie() && even)
    }
}

/// A correctly rounded value together with its certificate.
#[derive(Debug, Clone, PartialEq)]
pub struct Rounded {
    pub value: f64,
    pub certificate: Certificate,
    /// True when the target was an exact midpoint and ties-to-even decided.
    pub tie: bool,
}

fn midpoint(a: f64, b: f64) -> DyadicRational {
    let da = DyadicRational::from_f64(a).expect("finite");
    let db = DyadicRational::from_f64(b).expect("finite");
    (&da + &db).half()
}

fn upper_midpoint(y: f64) -> DyadicRational {
    if y == f64::MAX {
        // halfway to 2^1024
        let dy = DyadicRational::from_f64(y).expect("finite");
        &dy + &DyadicRational::new(1, 970)
    } else {
        midpoint(y, y.next_up())
    }
}

/// Evaluates the exact comparisons around a nonnegative candidate.
///
/// `cmp_target(m)` must return `target.cmp(m)` for a positive dyadic `m`.
pub fn certify<F>(value: f64, cmp_target: F) -> Certificate
where
    F: Fn(&DyadicRational) -> Ordering,
{
    let upper = upper_midpoint(value);
    let upper_cmp = cmp_target(&upper);
    let (lower, lower_cmp) = if value > 0.0 {
        let m = midpoint(value.next_down(), value);
        let c = cmp_target(&m);
        (Some(m), Some(c))
    } else {
        (None, None)
    };
    Certificate { value, lower, lower_cmp, upper, upper_cmp }
}

/// Rounds a positive target given an estimate within a few ulps of it.
fn round_positive<F>(estimate: f64, cmp_target: F) -> Result<Rounded, OracleError>
where
    F: Fn(&DyadicRational) -> Ordering,
{
    let start = if estimate.is_nan() || estimate < 0.0 { 0.0 } else { estimate.min(f64::MAX) };
    let mut y = start;
    for _ in 0..=MAX_SEARCH_STEPS {
        // Only compute the side that might move us; the other is computed
        // once we stop.
        let upper = upper_midpoint(y);
        let upper_cmp = cmp_target(&upper);
        if upper_cmp == Ordering::Greater {
            if y == f64::MAX {
                return Err(OracleError::Overflow);
            }
            y = y.next_up();
            continue;
        }
        let (lower, lower_cmp) = if y > 0.0 {
            let m = midpoint(y.next_down(), y);
            let c = cmp_target(&m);
            if c == Ordering::Less {
                y = y.next_down();
                continue;
            }
            (Some(m), Some(c))
        } else {
            (None, None)
        };
        let cert = Certificate { value: y, lower, lower_cmp, upper, upper_cmp };
        if !cert.is_tie() {
            return Ok(Rounded { value: y, certificate: cert, tie: false });
        }
        let neighbour = if cert.upper_cmp == Ordering::Equal { y.next_up() } else { y.next_down() };
        let value = if y.to_bits() & 1 == 0 { y } else { neighbour };
        warn!("exact midpoint encountered between {y:e} and {neighbour:e}; rounding to even {value:e}");
        let certificate = if value == y { cert } else { certify(value, &cmp_target) };
        return Ok(Rounded { value, certificate, tie: true });
    }
    Err(OracleError::SearchExhausted { estimate, steps: MAX_SEARCH_STEPS })
}

fn exact(x: f64) -> DyadicRational {
    DyadicRational::from_f64(x).expect("caller checked finiteness")
}

/// `1.cmp(m^2 * s)`, i.e. `(1/sqrt(s)).cmp(m)`.
fn rsqrt_cmp(s: &DyadicRational) -> impl Fn(&DyadicRational) -> Ordering + '_ {
    let one = DyadicRational::one();
    move |m| one.cmp(&(&m.square() * s))
}

/// Correctly rounded `1/sqrt(x)` with its certificate.
pub fn rsqrt_ref_certified(x: f64) -> Result<Rounded, OracleError> {
    if !(x.is_finite() && x > 0.0) {
        return Err(OracleError::Domain("rsqrt reference needs a positive finite input"));
    }
    let scaled = split_pow4(x).expect("positive finite");
    let estimate = scale_pow2((1.0 / scaled.m).sqrt(), -scaled.k);
    let dx = exact(x);
    round_positive(estimate, rsqrt_cmp(&dx))
}

/// `RN(1/sqrt(x))`.
pub fn rn_rsqrt_ref(x: f64) -> Result<f64, OracleError> {
    rsqrt_ref_certified(x).map(|r| r.value)
}

/// Re-derives the certificate of an arbitrary candidate `y` for `1/sqrt(x)`.
pub fn certify_rsqrt(x: f64, y: f64) -> Result<Certificate, OracleError> {
    if !(x.is_finite() && x > 0.0 && y.is_finite() && y >= 0.0) {
        return Err(OracleError::Domain("certify_rsqrt needs positive finite x and finite y >= 0"));
    }
    Ok(certify(y, rsqrt_cmp(&exact(x))))
}

/// Exact `x^2 + y^2`.
pub fn exact_sum_squares(x: f64, y: f64) -> Result<DyadicRational, OracleError> {
    if !x.is_finite() || !y.is_finite() {
        return Err(OracleError::Domain("non-finite input"));
    }
    if x == 0.0 && y == 0.0 {
        return Err(OracleError::Domain("both inputs are zero"));
    }
    let (dx, dy) = (exact(x), exact(y));
    Ok(&dx.square() + &dy.square())
}

/// Orders `(|a|, |b|)` as `(big, small)` and returns `small / big` together
/// with the exponent of `big`, for overflow-free float estimates.
fn ratio_and_scale(a: f64, b: f64) -> (f64, f64, i32) {
    let (a, b) = (a.abs(), b.abs());
    let (big, small) = if a >= b { (a, b) } else { (b, a) };
    let e = exponent(big).expect("nonzero");
    (scale_pow2(big, -e), small / big, e)
}

/// Correctly rounded `1/sqrt(x^2 + y^2)` with its certificate.
pub fn rhypot_ref_certified(x: f64, y: f64) -> Result<Rounded, OracleError> {
    let s = exact_sum_squares(x, y)?;
    let (big, q, e) = ratio_and_scale(x, y);
    let estimate = scale_pow2(1.0 / (big * (1.0 + q * q).sqrt()), -e);
    round_positive(estimate, rsqrt_cmp(&s))
}

/// `RN(1/sqrt(x^2 + y^2))`.
pub fn rn_rhypot_ref(x: f64, y: f64) -> Result<f64, OracleError> {
    rhypot_ref_certified(x, y).map(|r| r.value)
}

pub fn certify_rhypot(x: f64, y: f64, rho: f64) -> Result<Certificate, OracleError> {
    if !(rho.is_finite() && rho >= 0.0) {
        return Err(OracleError::Domain("candidate must be finite and nonnegative"));
    }
    let s = exact_sum_squares(x, y)?;
    Ok(certify(rho, rsqrt_cmp(&s)))
}

/// `(num^2).cmp(m^2 * s)`, i.e. `(|num|/sqrt(s)).cmp(m)`.
fn quotient_cmp<'a>(num_sq: &'a DyadicRational, s: &'a DyadicRational) -> impl Fn(&DyadicRational) -> Ordering + 'a {
    move |m| num_sq.cmp(&(&m.square() * s))
}

/// Correctly rounded `num / sqrt(s)` where `s = num^2 + other^2`.
fn givens_component(num: f64, other: f64, s: &DyadicRational) -> Result<Rounded, OracleError> {
    if num == 0.0 {
        let certificate = certify(0.0, |_| Ordering::Less);
        return Ok(Rounded { value: 0.0, certificate, tie: false });
    }
    let (a, b) = (num.abs(), other.abs());
    let estimate = if a >= b {
        let q = b / a;
        1.0 / (1.0 + q * q).sqrt()
    } else {
        let q = a / b;
        q / (1.0 + q * q).sqrt()
    };
    let num_sq = exact(num).square();
    let mut r = round_positive(estimate, quotient_cmp(&num_sq, s))?;
    if num < 0.0 {
        r.value = -r.value;
        r.certificate.value = r.value;
    }
    Ok(r)
}

/// Correctly rounded Givens pair `(f, g) / sqrt(f^2 + g^2)`.
///
/// Certificates are stated for the magnitudes; the sign is that of the
/// corresponding input.
pub fn givens_ref_certified(f: f64, g: f64) -> Result<(Rounded, Rounded), OracleError> {
    let s = exact_sum_squares(f, g)?;
    let c = givens_component(f, g, &s)?;
    let sn = givens_component(g, f, &s)?;
    Ok((c, sn))
}

/// `(RN(f/sqrt(f^2+g^2)), RN(g/sqrt(f^2+g^2)))`.
pub fn rn_givens_ref(f: f64, g: f64) -> Result<(f64, f64), OracleError> {
    givens_ref_certified(f, g).map(|(c, s)| (c.value, s.value))
}

/// Certificate for a candidate `|c|` of `|f| / sqrt(f^2 + g^2)`.
pub fn certify_givens_component(f: f64, g: f64, c: f64) -> Result<Certificate, OracleError> {
    if !c.is_finite() {
        return Err(OracleError::Domain("candidate must be finite"));
    }
    let s = exact_sum_squares(f, g)?;
    if f == 0.0 {
        return Ok(certify(c.abs(), |_| Ordering::Less));
    }
    let num_sq = exact(f).square();
    Ok(certify(c.abs(), quotient_cmp(&num_sq, &s)))
}
