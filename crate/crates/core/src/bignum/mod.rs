//! Arbitrary-precision scalars and the polynomial kernels built on them.
//!
//! [`BigReal`] is a thin value type over a binary multiple-precision float
//! that remembers the precision it was created with. Decimal input and
//! output go through [`Decimal`], an exact digit string, so that printed
//! values never depend on how the binary mantissa happens to be laid out.

mod decimal;
mod poly;
mod real;

pub use decimal::{common_prefix_digits, decimal_places, significant_digits, Decimal};
pub use poly::{binomial_exact, cheb_even_values, cheb_sum_halved, cheb_t, cheb_t_prime};
pub use real::{decimal_capacity, BigReal};

use crate::error::{Error, Result};

pub const DEFAULT_GUARD_DIGITS: u32 = 20;
const MIN_TARGET_DIGITS: u32 = 10;
const MIN_GUARD_DIGITS: u32 = 10;
const GUARD_BITS: usize = 16;

/// Requested stable digits plus the guard digits carried during the
/// computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Precision {
    target_digits: u32,
    guard_digits: u32,
}

impl Precision {
    pub fn new(target_digits: u32, guard_digits: u32) -> Result<Self> {
        if target_digits < MIN_TARGET_DIGITS {
            return Err(Error::Precision(format!(
                "target_digits must be at least {MIN_TARGET_DIGITS}, got {target_digits}"
            )));
        }
        if guard_digits < MIN_GUARD_DIGITS {
            return Err(Error::Precision(format!(
                "guard_digits must be at least {MIN_GUARD_DIGITS}, got {guard_digits}"
            )));
        }
        Ok(Self {
            target_digits,
            guard_digits,
        })
    }

    pub fn with_target(target_digits: u32) -> Result<Self> {
        Self::new(target_digits, DEFAULT_GUARD_DIGITS)
    }

    /// Smallest precision whose working digits cover `digits`.
    ///
    /// Whenever `digits` is at least the smallest legal working precision,
    /// the result has exactly `digits` working digits.
    pub fn covering(digits: u32) -> Self {
        let working = digits.max(MIN_TARGET_DIGITS + MIN_GUARD_DIGITS);
        let guard = DEFAULT_GUARD_DIGITS.min(working - MIN_TARGET_DIGITS);
        Self {
            target_digits: working - guard,
            guard_digits: guard,
        }
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    /// Binary mantissa length, rounded up to whole 64-bit words.
    pub fn bits(&self) -> usize {
        let raw =
            (self.working_digits() as f64 * std::f64::consts::LOG2_10).ceil() as usize + GUARD_BITS;
        raw.div_ceil(64) * 64
    }

    pub fn zero(&self) -> BigReal {
        BigReal::zero(self.bits())
    }

    pub fn int(&self, v: i64) -> BigReal {
        BigReal::from_i64(v, self.bits())
    }

    pub fn parse(&self, text: &str) -> Result<BigReal> {
        BigReal::parse(text, self.bits())
    }

    /// `10^-k` at this precision.
    pub fn epsilon(&self, k: u32) -> BigReal {
        BigReal::pow10(-(k as i64), self.bits())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precision_bounds() {
        assert!(Precision::new(9, 20).is_err());
        assert!(Precision::new(10, 9).is_err());
        let p = Precision::with_target(40).unwrap();
        assert_eq!(p.working_digits(), 60);
        assert_eq!(p.bits() % 64, 0);
        assert!(decimal_capacity(p.bits()) >= 60);
    }

    #[test]
    fn covering_never_drops_below_request() {
        for d in [1, 18, 30, 55, 131] {
            assert!(Precision::covering(d).working_digits() >= d);
        }
        for d in [20, 25, 30, 131] {
            assert_eq!(Precision::covering(d).working_digits(), d);
        }
        assert_eq!(Precision::covering(131).guard_digits(), 20);
    }
}
