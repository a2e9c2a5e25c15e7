//! Test-only exact arithmetic, written independently of the library oracle.
//!
//! `Exact` is a bare `m * 2^e` with no canonical form. Square-root targets
//! are evaluated as `isqrt(floor(p * 2^(2Q) / q))` with at least
//! `MIN_BITS` bits, then rounded; the truncation interval either rounds to
//! a single binary64 value or the case is reported as uncertain.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

pub const MIN_BITS: u64 = 170;

#[derive(Debug, Clone)]
pub struct Exact {
    pub m: BigInt,
    pub e: i64,
}

impl Exact {
    pub fn of(x: f64) -> Exact {
        assert!(x.is_finite());
        let bits = x.to_bits();
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (sig, e) = if biased == 0 { (frac, -1074) } else { (frac | (1 << 52), biased - 1075) };
        let m = BigInt::from(sig);
        Exact { m: if x.is_sign_negative() { -m } else { m }, e }
    }

    pub fn int(v: i64) -> Exact {
        Exact { m: BigInt::from(v), e: 0 }
    }

    fn aligned(&self, other: &Exact) -> (BigInt, BigInt, i64) {
        let e = self.e.min(other.e);
        ((&self.m) << (self.e - e) as usize, (&other.m) << (other.e - e) as usize, e)
    }

    pub fn add(&self, o: &Exact) -> Exact {
        let (a, b, e) = self.aligned(o);
        Exact { m: a + b, e }
    }

    pub fn sub(&self, o: &Exact) -> Exact {
        let (a, b, e) = self.aligned(o);
        Exact { m: a - b, e }
    }

    pub fn mul(&self, o: &Exact) -> Exact {
        Exact { m: &self.m * &o.m, e: self.e + o.e }
    }

    pub fn scale(&self, k: i64) -> Exact {
        Exact { m: self.m.clone(), e: self.e + k }
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn cmp(&self, o: &Exact) -> Ordering {
        let (a, b, _) = self.aligned(o);
        a.cmp(&b)
    }

    pub fn eq_f64(&self, x: f64) -> bool {
        self.cmp(&Exact::of(x)) == Ordering::Equal
    }
}

/// Outcome of the high-precision evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Eval {
    Certified(f64),
    /// The truncation interval contains a rounding midpoint.
    Uncertain,
}

impl Eval {
    pub fn negate_if(self, negative: bool) -> Eval {
        match self {
            Eval::Certified(v) if negative => Eval::Certified(-v),
            e => e,
        }
    }
}

fn ldexp(m: u64, k: i64) -> f64 {
    let mut v = m as f64;
    let mut k = k;
    while k > 0 {
        let step = k.min(1000);
        v *= f64::from_bits(((1023 + step) as u64) << 52);
        k -= step;
    }
    while k < 0 {
        let step = (-k).min(1000);
        v *= f64::from_bits(((1023 - step) as u64) << 52);
        k += step;
    }
    v
}

/// `RN(sqrt(p / q))` for positive `p`, `q`; normal results only.
pub fn sqrt_ratio(p: &Exact, q: &Exact) -> Eval {
    assert!(p.m.is_positive() && q.m.is_positive());
    let mut a = p.m.magnitude().clone();
    let b = q.m.magnitude().clone();
    let mut shift = p.e - q.e;
    if shift.rem_euclid(2) != 0 {
        a <<= 1usize;
        shift -= 1;
    }
    let half_exp = shift / 2;
    let lead = (a.bits() as i64 - b.bits() as i64) / 2;
    let q_bits = (MIN_BITS as i64 + 2 - lead).max(0);
    let t: BigUint = ((a << (2 * q_bits) as usize) / b).sqrt();
    assert!(t.bits() >= MIN_BITS);
    let drop = t.bits() - 53;
    let mut m: u64 = (&t >> drop as usize).try_into().unwrap();
    let rem: BigUint = &t - (BigUint::from(m) << drop as usize);
    let half = BigUint::one() << (drop - 1) as usize;
    match rem.cmp(&half) {
        Ordering::Equal => return Eval::Uncertain,
        Ordering::Greater => m += 1,
        Ordering::Less => {}
    }
    let v = ldexp(m, drop as i64 + half_exp - q_bits);
    assert!(v.is_normal(), "outside the normal range");
    Eval::Certified(v)
}

pub fn rsqrt_hp(x: f64) -> Eval {
    sqrt_ratio(&Exact::int(1), &Exact::of(x))
}

pub fn sum_sq(x: f64, y: f64) -> Exact {
    let (a, b) = (Exact::of(x), Exact::of(y));
    a.mul(&a).add(&b.mul(&b))
}

pub fn rhypot_hp(x: f64, y: f64) -> Eval {
    sqrt_ratio(&Exact::int(1), &sum_sq(x, y))
}

/// `(f, g) / sqrt(f^2 + g^2)` for nonzero `f`, `g`.
pub fn givens_hp(f: f64, g: f64) -> (Eval, Eval) {
    let s = sum_sq(f, g);
    let (ef, eg) = (Exact::of(f), Exact::of(g));
    (sqrt_ratio(&ef.mul(&ef), &s).negate_if(f < 0.0), sqrt_ratio(&eg.mul(&eg), &s).negate_if(g < 0.0))
}
