//! Chebyshev → Taylor conversion.
//!
//! With `m = n/d`, the monomial coefficient of `y^m` in `T_s(y)` is
//! `2^m · s/(s+m) · (−1)^{(s−m)/2} · C((s+m)/2, m)` for `s ≥ m`, `s ≡ m
//! (mod 2)`, which is always an integer. It is computed exactly and only
//! then multiplied into the floating coefficients.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::FeigenbaumSeries;
use crate::bignum::{binomial_exact, common_prefix_digits, BigReal};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct TaylorEntry {
    /// Power of `x`; always a positive multiple of `z`.
    pub exponent: usize,
    pub value: BigReal,
    /// Truncated-toward-zero digits of `value` considered reliable.
    pub stable_digits: String,
}

/// Taylor coefficients `b_n` of `g(x) = 1 + Σ b_n x^n`; `b_0 = 1` is
/// implicit.
#[derive(Debug, Clone)]
pub struct TaylorTable {
    pub z: u32,
    pub entries: Vec<TaylorEntry>,
    /// Set when the requested exponent range exceeds what the series
    /// can represent; the missing coefficients are exactly zero.
    pub truncated: bool,
}

impl TaylorTable {
    pub fn get(&self, exponent: usize) -> Option<&TaylorEntry> {
        self.entries.iter().find(|e| e.exponent == exponent)
    }

    /// `(exponent, stable digits)` rows.
    pub fn rows(&self) -> Vec<(usize, String)> {
        self.entries
            .iter()
            .map(|e| (e.exponent, e.stable_digits.clone()))
            .collect()
    }
}

/// Exact integer coefficient of `y^m` in `T_s(y)`.
pub(crate) fn monomial_coefficient(s: u64, m: u64) -> BigInt {
    if m > s || (s + m) % 2 != 0 {
        return BigInt::zero();
    }
    if s == 0 {
        return BigInt::from(1);
    }
    let h = (s + m) / 2;
    let numer: BigUint = (BigUint::from(1u32) << m as usize)
        * BigUint::from(s)
        * binomial_exact(h, m).expect("m <= h");
    let (q, r) = numer.div_rem(&BigUint::from(s + m));
    debug_assert!(r.is_zero(), "T_{s} coefficient of y^{m} must be integral");
    let q = BigInt::from(q);
    if ((s - m) / 2) % 2 == 1 {
        -q
    } else {
        q
    }
}

/// Taylor coefficients up to `max_exponent` (a multiple of `z`).
pub fn taylor_from_cheb(series: &FeigenbaumSeries, max_exponent: usize) -> Result<TaylorTable> {
    let z = series.z() as usize;
    let d = series.d() as usize;
    if max_exponent % z != 0 {
        return Err(Error::domain(format!(
            "max_exponent {max_exponent} is not a multiple of z = {z}"
        )));
    }
    let bits = series.precision().bits();
    let digits = series.precision().working_digits() as usize;
    let top_s = 2 * (series.order_n() - 1);
    let truncated = max_exponent > series.max_exponent();
    let mut entries = Vec::new();
    for exponent in (z..=max_exponent.min(series.max_exponent())).step_by(z) {
        let m = exponent / d;
        let mut value = BigReal::zero(bits);
        for s in (m..=top_s).step_by(2) {
            let coef = monomial_coefficient(s as u64, m as u64);
            value += &series.coeffs()[s / 2] * &BigReal::from_bigint(&coef, bits);
        }
        let stable_digits = value.to_string_digits(digits);
        entries.push(TaylorEntry {
            exponent,
            value,
            stable_digits,
        });
    }
    Ok(TaylorTable {
        z: series.z(),
        entries,
        truncated,
    })
}

/// Keeps only the digits on which two conversions agree, cutting the table
/// at the first exponent with no common digit.
pub fn stable_taylor(lower: &TaylorTable, higher: &TaylorTable) -> Result<TaylorTable> {
    if lower.z != higher.z {
        return Err(Error::domain(format!(
            "cannot compare Taylor tables for z = {} and z = {}",
            lower.z, higher.z
        )));
    }
    let mut entries = Vec::new();
    for a in &lower.entries {
        let Some(b) = higher.get(a.exponent) else {
            break;
        };
        let prefix = common_prefix_digits(&a.value, &b.value);
        if prefix.is_empty() {
            break;
        }
        entries.push(TaylorEntry {
            exponent: a.exponent,
            value: b.value.clone(),
            stable_digits: prefix,
        });
    }
    Ok(TaylorTable {
        z: lower.z,
        entries,
        truncated: lower.truncated || higher.truncated,
    })
}
