//! Exact dyadic rationals `mantissa * 2^exponent` over unbounded integers.
//!
//! Every finite binary64 value is a dyadic rational, and the set is closed
//! under addition, subtraction and multiplication, so sums of products of
//! floats can be evaluated and compared with no rounding at all.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::FpError;
use crate::fp::{normalize, scale_pow2};

/// `mantissa * 2^exponent`, kept canonical: the mantissa is odd, or zero with
/// exponent 0. Canonical form makes structural equality value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DyadicRational {
    mantissa: BigInt,
    exponent: i64,
}

impl DyadicRational {
    pub fn zero() -> Self {
        DyadicRational { mantissa: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        DyadicRational { mantissa: BigInt::one(), exponent: 0 }
    }

    /// Builds `mantissa * 2^exponent` and canonicalizes it.
    pub fn new(mantissa: impl Into<BigInt>, exponent: i64) -> Self {
        Self::canonical(mantissa.into(), exponent)
    }

    fn canonical(mantissa: BigInt, exponent: i64) -> Self {
        match mantissa.trailing_zeros() {
            None => Self::zero(),
            Some(0) => DyadicRational { mantissa, exponent },
            Some(tz) => DyadicRational { mantissa: mantissa >> tz, exponent: exponent + tz as i64 },
        }
    }

    /// Exact value of a finite binary64. Both zeros map to zero.
    pub fn from_f64(x: f64) -> Result<Self, FpError> {
        if !x.is_finite() {
            return Err(FpError::Domain("non-finite value has no dyadic form"));
        }
        if x == 0.0 {
            return Ok(Self::zero());
        }
        let (sig, e) = normalize(x);
        let m = BigInt::from(sig);
        Ok(Self::canonical(if x < 0.0 { -m } else { m }, e as i64 - 52))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn exponent(&self) -> i64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.mantissa.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        DyadicRational { mantissa: self.mantissa.abs(), exponent: self.exponent }
    }

    /// `self * 2^k`, exact.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        DyadicRational { mantissa: self.mantissa.clone(), exponent: self.exponent + k }
    }

    pub fn half(&self) -> Self {
        self.mul_pow2(-1)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Position of the leading bit: `|self|` lies in `[2^t, 2^(t+1))`.
    fn top_bit(&self) -> i64 {
        self.mantissa.bits() as i64 - 1 + self.exponent
    }

    fn cmp_magnitude(&self, other: &Self) -> Ordering {
        let (ta, tb) = (self.top_bit(), other.top_bit());
        if ta != tb {
            return ta.cmp(&tb);
        }
        let a = self.mantissa.magnitude();
        let b = other.mantissa.magnitude();
        match self.exponent.cmp(&other.exponent) {
            Ordering::Equal => a.cmp(b),
            Ordering::Greater => (a << (self.exponent - other.exponent) as u64).cmp(b),
            Ordering::Less => a.cmp(&(b << (other.exponent - self.exponent) as u64)),
        }
    }

    /// Rounds to the nearest binary64, ties to even. Overflows to infinity
    /// and rounds into the subnormal range like the hardware would.
    pub fn round_to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let top = self.top_bit();
        let negative = self.signum() < 0;
        if top > 1023 {
            return if negative { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        let lsb = (top - 52).max(-1074);
        let shift = lsb - self.exponent;
        let mag = self.mantissa.magnitude();
        let q: BigUint = if shift <= 0 {
            mag << (-shift) as u64
        } else {
            let shift = shift as u64;
            let q = mag >> shift;
            let rem = mag - (&q << shift);
            let half = BigUint::one() << (shift - 1);
            match rem.cmp(&half) {
                Ordering::Greater => q + 1u32,
                Ordering::Equal if q.bit(0) => q + 1u32,
                _ => q,
            }
        };
        // q < 2^54, so the conversion is exact and only the scaling can round
        // (to infinity).
        let v = scale_pow2(q.to_u64().expect("rounded significand fits") as f64, lsb as i32);
        if negative {
            -v
        } else {
            v
        }
    }

    /// The binary64 equal to `self`, if there is one.
    pub fn to_f64_exact(&self) -> Option<f64> {
        let r = self.round_to_f64();
        (r.is_finite() && Self::from_f64(r).ok().as_ref() == Some(self)).then_some(r)
    }
}

impl TryFrom<f64> for DyadicRational {
    type Error = FpError;

    fn try_from(x: f64) -> Result<Self, FpError> {
        Self::from_f64(x)
    }
}

impl Ord for DyadicRational {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        match sa {
            0 => Ordering::Equal,
            1 => self.cmp_magnitude(other),
            _ => self.cmp_magnitude(other).reverse(),
        }
    }
}

impl PartialOrd for DyadicRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;

    fn add(self, rhs: &DyadicRational) -> DyadicRational {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (lo, hi) = if self.exponent <= rhs.exponent { (self, rhs) } else { (rhs, self) };
        let shift = (hi.exponent - lo.exponent) as u64;
        let sum = &lo.mantissa + (&hi.mantissa << shift);
        DyadicRational::canonical(sum, lo.exponent)
    }
}

impl<'a> Sub<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;

    fn sub(self, rhs: &DyadicRational) -> DyadicRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a DyadicRational> for &'a DyadicRational {
    type Output = DyadicRational;

    fn mul(self, rhs: &DyadicRational) -> DyadicRational {
        if self.is_zero() || rhs.is_zero() {
            return DyadicRational::zero();
        }
        // odd * odd is odd: already canonical
        DyadicRational { mantissa: &self.mantissa * &rhs.mantissa, exponent: self.exponent + rhs.exponent }
    }
}

impl Neg for &DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational { mantissa: -&self.mantissa, exponent: self.exponent }
    }
}

impl Neg for DyadicRational {
    type Output = DyadicRational;

    fn neg(self) -> DyadicRational {
        DyadicRational { mantissa: -self.mantissa, exponent: self.exponent }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<DyadicRational> for DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: DyadicRational) -> DyadicRational { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a DyadicRational> for DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: &DyadicRational) -> DyadicRational { (&self).$m(rhs) }
        }
        impl<'a> $tr<DyadicRational> for &'a DyadicRational {
            type Output = DyadicRational;
            fn $m(self, rhs: DyadicRational) -> DyadicRational { self.$m(&rhs) }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Debug for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*2^{}", self.mantissa, self.exponent)
    }
}

impl fmt::Display for DyadicRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
