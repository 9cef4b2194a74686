use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use super::decimal::Decimal;
use crate::error::Result;

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: i64 = Word::BITS as i64;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Number of decimal digits a `bits`-bit mantissa reproduces exactly
/// through a decimal round trip.
pub fn decimal_capacity(bits: usize) -> usize {
    ((bits as f64 - 1.0) * std::f64::consts::LOG10_2).floor() as usize - 1
}

/// Arbitrary-precision real with an explicit mantissa length.
///
/// Binary operations round to the larger of the two operand precisions.
#[derive(Clone)]
pub struct BigReal {
    value: BigFloat,
    bits: usize,
}

impl BigReal {
    fn wrap(value: BigFloat, bits: usize) -> Self {
        debug_assert!(!value.is_nan(), "NaN produced at {bits} bits");
        Self { value, bits }
    }

    pub fn zero(bits: usize) -> Self {
        Self::from_i64(0, bits)
    }

    pub fn one(bits: usize) -> Self {
        Self::from_i64(1, bits)
    }

    pub fn from_i64(v: i64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, bits), bits)
    }

    /// `n * 2^scale`, rounded to `bits`.
    pub fn from_bigint_scaled(n: &BigInt, scale: i64, bits: usize) -> Self {
        if n.is_zero() {
            return Self::zero(bits);
        }
        let words = n.magnitude().to_u64_digits();
        let sign = if n.is_negative() {
            Sign::Neg
        } else {
            Sign::Pos
        };
        let exponent = words.len() as i64 * WORD_BITS + scale;
        let exponent = i32::try_from(exponent).expect("exponent out of range");
        let mut value = BigFloat::from_words(&words, sign, exponent);
        value.set_precision(bits, RM).expect("valid precision");
        Self::wrap(value, bits)
    }

    pub fn from_bigint(n: &BigInt, bits: usize) -> Self {
        Self::from_bigint_scaled(n, 0, bits)
    }

    pub fn from_biguint(n: &BigUint, bits: usize) -> Self {
        Self::from_bigint(&BigInt::from(n.clone()), bits)
    }

    /// `10^k`, correctly rounded.
    pub fn pow10(k: i64, bits: usize) -> Self {
        Decimal::from_parts(false, "1".into(), k + 1).to_real(bits)
    }

    pub fn parse(text: &str, bits: usize) -> Result<Self> {
        Ok(Decimal::parse(text)?.to_real(bits))
    }

    pub fn pi(bits: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(bits, RM)), bits)
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Same value re-rounded (or zero-extended) to `bits`.
    pub fn with_bits(&self, bits: usize) -> Self {
        let mut value = self.value.clone();
        value.set_precision(bits, RM).expect("valid precision");
        Self::wrap(value, bits)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.value.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.bits)
    }

    pub fn square(&self) -> Self {
        self * self
    }

    pub fn powi(&self, n: usize) -> Self {
        Self::wrap(self.value.powi(n, self.bits, RM), self.bits)
    }

    pub fn half(&self) -> Self {
        self.scale_pow2(-1)
    }

    /// Exact multiplication by `2^k`.
    pub fn scale_pow2(&self, k: i32) -> Self {
        match self.value.exponent() {
            Some(e) if !self.is_zero() => {
                let mut value = self.value.clone();
                value.set_exponent(e + k);
                Self::wrap(value, self.bits)
            }
            _ => self.clone(),
        }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self * &Self::from_i64(k, self.bits)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self / &Self::from_i64(k, self.bits)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.bits, RM), self.bits)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(
            with_consts(|cc| self.value.cos(self.bits, RM, cc)),
            self.bits,
        )
    }

    pub fn acos(&self) -> Self {
        Self::wrap(
            with_consts(|cc| self.value.acos(self.bits, RM, cc)),
            self.bits,
        )
    }

    /// Real `k`-th root of a non-negative value.
    pub fn root(&self, k: u32) -> Self {
        match k {
            1 => self.clone(),
            2 => self.sqrt(),
            _ if self.is_zero() => self.clone(),
            _ => {
                let exp = BigFloat::from_i64(1, self.bits).div(
                    &BigFloat::from_i64(k as i64, self.bits),
                    self.bits,
                    RM,
                );
                Self::wrap(
                    with_consts(|cc| self.value.pow(&exp, self.bits, RM, cc)),
                    self.bits,
                )
            }
        }
    }

    pub fn max_abs<'a>(values: impl IntoIterator<Item = &'a BigReal>, bits: usize) -> BigReal {
        values
            .into_iter()
            .map(BigReal::abs)
            .fold(BigReal::zero(bits), |acc, v| if v > acc { v } else { acc })
    }

    /// Approximate value; underflows to 0 and overflows to infinity.
    pub fn to_f64(&self) -> f64 {
        match self.value.as_raw_parts() {
            Some((words, _, sign, exponent, _)) if !self.is_zero() => {
                let top = *words.last().expect("normalized mantissa") as f64;
                let mag = top * 2f64.powi(exponent - WORD_BITS as i32);
                if sign == Sign::Neg {
                    -mag
                } else {
                    mag
                }
            }
            _ => 0.0,
        }
    }

    /// Exact value as `(mantissa, scale)` with `self = mantissa * 2^scale`.
    pub(crate) fn to_bigint_scaled(&self) -> (BigInt, i64) {
        match self.value.as_raw_parts() {
            Some((words, _, sign, exponent, _)) if !self.is_zero() => {
                let mag = BigUint::new(
                    words
                        .iter()
                        .flat_map(|w| [*w as u32, (*w >> 32) as u32])
                        .collect(),
                );
                let n = if sign == Sign::Neg {
                    -BigInt::from(mag)
                } else {
                    BigInt::from(mag)
                };
                (n, exponent as i64 - words.len() as i64 * WORD_BITS)
            }
            _ => (BigInt::zero(), 0),
        }
    }

    /// Correctly rounded decimal with `digits` significant digits.
    pub fn to_decimal(&self, digits: usize) -> Decimal {
        Decimal::from_real(self, digits)
    }

    /// Decimal rounded at this value's full decimal capacity.
    pub fn to_full_decimal(&self) -> Decimal {
        self.to_decimal(decimal_capacity(self.bits))
    }

    /// Fixed-point text truncated toward zero at `digits` significant
    /// digits.
    pub fn to_string_digits(&self, digits: usize) -> String {
        self.to_full_decimal().truncate(digits).to_fixed()
    }

    pub fn to_sci_string(&self, digits: usize) -> String {
        self.to_decimal(digits).to_scientific()
    }

    /// Integer `1` as a value sharing this precision.
    pub fn unit(&self) -> Self {
        Self::one(self.bits)
    }
}

impl Default for BigReal {
    fn default() -> Self {
        Self::zero(128)
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => f.write_str(&self.to_string_digits(p)),
            None => f.write_str(&self.to_full_decimal().to_fixed()),
        }
    }
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({}; {} bits)", self.to_sci_string(20), self.bits)
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.value.cmp(&other.value) == Some(0)
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

impl From<&BigReal> for f64 {
    fn from(v: &BigReal) -> f64 {
        v.to_f64()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $assign_trait:ident, $assign_method:ident) => {
        impl $trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let bits = self.bits.max(rhs.bits);
                BigReal::wrap(self.value.$method(&rhs.value, bits, RM), bits)
            }
        }
        impl $trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                self.$method(&rhs)
            }
        }
        impl $assign_trait<&BigReal> for BigReal {
            fn $assign_method(&mut self, rhs: &BigReal) {
                *self = (&*self).$method(rhs);
            }
        }
        impl $assign_trait<BigReal> for BigReal {
            fn $assign_method(&mut self, rhs: BigReal) {
                *self = (&*self).$method(&rhs);
            }
        }
    };
}

binop!(Add, add, AddAssign, add_assign);
binop!(Sub, sub, SubAssign, sub_assign);
binop!(Mul, mul, MulAssign, mul_assign);

impl Div<&BigReal> for &BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        let bits = self.bits.max(rhs.bits);
        BigReal::wrap(self.value.div(&rhs.value, bits, RM), bits)
    }
}

impl Div<BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        &self / &rhs
    }
}

impl Div<&BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: &BigReal) -> BigReal {
        &self / rhs
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(BigFloat::neg(&self.value), self.bits)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        -&self
    }
}

impl std::iter::Sum for BigReal {
    fn sum<I: Iterator<Item = BigReal>>(mut iter: I) -> BigReal {
        let first = iter.next().unwrap_or_default();
        iter.fold(first, |acc, v| acc + v)
    }
}
