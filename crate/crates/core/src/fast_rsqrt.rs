//! Square-root-free reciprocal square root: a bit-level seed refined by two
//! polynomial steps, finished either with a plain Newton step or with the
//! modified compensation.

use crate::error::FpError;
use crate::fp::fma_rn;
use crate::rsqrt::{check_kernel_domain, halley_correction};

/// Seed and refinement constants, bit-exact.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MagicConstants {
    /// Lowest exponent bit: selects between the two seeds.
    pub branch_mask: u64,
    pub magic_a: i64,
    pub coeff_a1: f64,
    pub coeff_a2: f64,
    pub magic_b: i64,
    pub coeff_b1: f64,
    pub coeff_b2: f64,
    pub shared_coeff: f64,
}

#[allow(clippy::excessive_precision)]
pub const MAGIC: MagicConstants = MagicConstants {
    branch_mask: 0x0010000000000000,
    magic_a: 0x5fdb3d14170034b6,
    coeff_a1: 2.33124735553421569,
    coeff_a2: 1.07497362654295614,
    magic_b: 0x5fe33d18a2b9ef5f,
    coeff_b1: 0.82421942523718461,
    coeff_b2: 2.1499494964450325,
    shared_coeff: 1.5000000034937999,
};

/// Which seed a given input uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeedBranch {
    /// Odd biased exponent.
    A,
    /// Even biased exponent.
    B,
}

pub fn seed_branch(x: f64) -> SeedBranch {
    if x.to_bits() & MAGIC.branch_mask != 0 {
        SeedBranch::A
    } else {
        SeedBranch::B
    }
}

fn check_domain(x: f64) -> Result<(), FpError> {
    check_kernel_domain(x)
}

/// Seed plus both polynomial refinements. Returns `(y, mxhalf)`.
#[inline]
fn refine(x: f64) -> (f64, f64) {
    let i = x.to_bits() as i64;
    let y = if seed_branch(x) == SeedBranch::A {
        let y = f64::from_bits((MAGIC.magic_a - (i >> 1)) as u64);
        MAGIC.coeff_a1 * y * fma_rn(-x, y * y, MAGIC.coeff_a2)
    } else {
        let y = f64::from_bits((MAGIC.magic_b - (i >> 1)) as u64);
        MAGIC.coeff_b1 * y * fma_rn(-x, y * y, MAGIC.coeff_b2)
    };
    let mxhalf = -0.5 * x;
    let y = y * fma_rn(mxhalf, y * y, MAGIC.shared_coeff);
    (y, mxhalf)
}

/// The estimate before the final correction step.
pub fn rcpsqrt331d_estimate(x: f64) -> Result<f64, FpError> {
    check_domain(x)?;
    Ok(refine(x).0)
}

/// Seed, two refinements and one FMA Newton step.
pub fn rcpsqrt331d(x: f64) -> Result<f64, FpError> {
    check_domain(x)?;
    let (y, mxhalf) = refine(x);
    let r = fma_rn(mxhalf, y * y, 0.5);
    Ok(fma_rn(y, r, y))
}

/// Seed, two refinements, then the modified compensation in place of the
/// Newton step.
pub fn rcpsqrt331d_modified(x: f64) -> Result<f64, FpError> {
    check_domain(x)?;
    let (y, mxhalf) = refine(x);
    let r = 1.0 / x;
    let sigma = fma_rn(r, mxhalf, 0.5);
    let tau = fma_rn(y, y, -r);
    let nu_bar = fma_rn(mxhalf, tau, sigma);
    let nu = halley_correction(nu_bar);
    Ok(fma_rn(y, nu, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp::{pow2, ulp_distance, UNIT_ROUNDOFF};
    use crate::oracle::rn_rsqrt_ref;

    #[test]
    fn constants_are_bit_exact() {
        // bit patterns of the decimal literals, from an independent parser
        assert_eq!(MAGIC.coeff_a1.to_bits(), 0x4002a66503773f5e);
        assert_eq!(MAGIC.coeff_a2.to_bits(), 0x3ff133178ba10840);
        assert_eq!(MAGIC.coeff_b1.to_bits(), 0x3fea60016a83e45a);
        assert_eq!(MAGIC.coeff_b2.to_bits(), 0x40013318b8ba43c1);
        assert_eq!(MAGIC.shared_coeff.to_bits(), 0x3ff8000000f01794);
        assert_eq!(MAGIC.magic_a as u64, 0x5fdb3d14170034b6);
        assert_eq!(MAGIC.magic_b as u64, 0x5fe33d18a2b9ef5f);
    }

    #[test]
    fn branch_selection() {
        // biased exponent of [1, 2) is 1023 (odd)
        assert_eq!(seed_branch(1.5), SeedBranch::A);
        assert_eq!(seed_branch(0.75), SeedBranch::B);
        assert_eq!(seed_branch(3.0), SeedBranch::B);
    }

    #[test]
    fn examples() {
        assert!(ulp_distance(rcpsqrt331d(1.0).unwrap(), 1.0).unwrap() <= 1);
        for k in -200..=200 {
            let x = pow2(2 * k);
            assert!(ulp_distance(rcpsqrt331d(x).unwrap(), pow2(-k)).unwrap() <= 1);
        }
        assert_eq!(rcpsqrt331d_modified(4.0).unwrap(), 0.5);
        let x = 1.0 - 2.0 * UNIT_ROUNDOFF;
        assert_eq!(rcpsqrt331d_modified(x).unwrap(), rn_rsqrt_ref(x).unwrap());
        assert_eq!(rcpsqrt331d_modified(x).unwrap(), 1.0 + pow2(-52));
    }

    #[test]
    fn estimate_is_close() {
        for &x in &[0.5, 0.7, 1.0, 1.3, 1.999] {
            let y = rcpsqrt331d_estimate(x).unwrap();
            assert!((y * x.sqrt() - 1.0).abs() < 6e-9, "{x}");
        }
    }

    #[test]
    fn domain() {
        for x in [0.0, -2.0, f64::NAN, f64::INFINITY, f64::from_bits(1), pow2(600)] {
            assert!(rcpsqrt331d(x).is_err());
            assert!(rcpsqrt331d_modified(x).is_err());
        }
    }
}
