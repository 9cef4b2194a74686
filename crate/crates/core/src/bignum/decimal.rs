use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::real::{decimal_capacity, BigReal};
use crate::error::{Error, Result};

/// Fixed-point notation is used down to this decimal exponent; smaller
/// magnitudes print in scientific form.
const FIXED_MIN_POINT: i64 = -60;

/// Exact finite decimal `±0.d₁d₂…dₖ × 10^point`.
///
/// `digits` carries no leading zeros; the empty string encodes zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Decimal {
    negative: bool,
    digits: String,
    point: i64,
}

impl Decimal {
    pub(crate) fn from_parts(negative: bool, digits: String, point: i64) -> Self {
        let lead = digits.bytes().take_while(|&b| b == b'0').count();
        let digits = digits[lead..].to_string();
        if digits.is_empty() {
            return Self::zero();
        }
        Self {
            negative,
            digits,
            point: point - lead as i64,
        }
    }

    pub fn zero() -> Self {
        Self {
            negative: false,
            digits: String::new(),
            point: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn is_negative(&self) -> bool {
        self.negative
    }

    pub fn digits(&self) -> &str {
        &self.digits
    }

    /// Position of the decimal point relative to the first digit.
    pub fn point(&self) -> i64 {
        self.point
    }

    /// Parses `[+-][int][.frac][e[+-]k]`; at least one digit is required.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |reason| Error::Decimal {
            text: text.to_string(),
            reason,
        };
        let s = text.trim();
        let (negative, s) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            Some(_) => (false, s),
            None => return Err(err("empty input")),
        };
        let (mantissa, exponent) = match s.find(['e', 'E']) {
            Some(i) => {
                let e = &s[i + 1..];
                let e: i64 = e.parse().map_err(|_| err("malformed exponent"))?;
                (&s[..i], e)
            }
            None => (s, 0),
        };
        let (int, frac) = match mantissa.split_once('.') {
            Some((a, b)) => (a, b),
            None => (mantissa, ""),
        };
        if int.is_empty() && frac.is_empty() {
            return Err(err("no digits"));
        }
        if !int.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
            return Err(err("unexpected character"));
        }
        let digits = format!("{int}{frac}");
        let mut d = Self::from_parts(negative, digits, int.len() as i64 + exponent);
        if d.is_zero() {
            d.negative = false;
        }
        Ok(d)
    }

    /// Correctly rounded (half away from zero) decimal of `x` with
    /// `sig` significant digits.
    pub(crate) fn from_real(x: &BigReal, sig: usize) -> Self {
        assert!(sig > 0, "at least one significant digit");
        let (n, scale) = x.to_bigint_scaled();
        if n.is_zero() {
            return Self::zero();
        }
        let negative = n.sign() == num_bigint::Sign::Minus;
        let mag = n.magnitude().clone();
        // log10|x| estimate; corrected below if off by one.
        let log2 = mag.bits() as i64 + scale - 1;
        let mut e10 = (log2 as f64 * std::f64::consts::LOG10_2).floor() as i64;
        loop {
            let k = sig as i64 - 1 - e10;
            let q = scaled_round(&mag, scale, k);
            let q_digits = q.to_string();
            if q_digits.len() > sig {
                e10 += 1;
                continue;
            }
            if q_digits.len() < sig {
                e10 -= 1;
                continue;
            }
            return Self::from_parts(negative, q_digits, e10 + 1);
        }
    }

    /// Nearest `bits`-bit binary value.
    pub fn to_real(&self, bits: usize) -> BigReal {
        if self.is_zero() {
            return BigReal::zero(bits);
        }
        let int: BigUint = self.digits.parse().expect("digit string");
        let exp10 = self.point - self.digits.len() as i64;
        let sign = |m: BigUint| {
            if self.negative {
                -BigInt::from(m)
            } else {
                BigInt::from(m)
            }
        };
        if exp10 >= 0 {
            let n = int * pow10(exp10 as u64);
            return BigReal::from_bigint(&sign(n), bits);
        }
        let den = pow10((-exp10) as u64);
        let shift = (bits as i64 + 2 + den.bits() as i64 - int.bits() as i64).max(0) + 1;
        let (mut q, r) = (int << shift as usize).div_rem(&den);
        let mut scale = -shift;
        if !r.is_zero() {
            // sticky bit keeps the final rounding correct
            q = (q << 1usize) | BigUint::one();
            scale -= 1;
        }
        BigReal::from_bigint_scaled(&sign(q), scale, bits)
    }

    /// Keeps the first `sig` significant digits (rounding toward zero).
    pub fn truncate(&self, sig: usize) -> Self {
        if self.digits.len() <= sig {
            return self.clone();
        }
        Self::from_parts(self.negative, self.digits[..sig].to_string(), self.point)
    }

    /// Plain positional notation, never an exponent.
    pub fn to_fixed(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        let len = self.digits.len() as i64;
        if self.point <= 0 {
            out.push_str("0.");
            out.extend(std::iter::repeat_n('0', (-self.point) as usize));
            out.push_str(&self.digits);
        } else if self.point < len {
            let (a, b) = self.digits.split_at(self.point as usize);
            out.push_str(a);
            out.push('.');
            out.push_str(b);
        } else {
            out.push_str(&self.digits);
            out.extend(std::iter::repeat_n('0', (self.point - len) as usize));
        }
        out
    }

    /// `d.ddd…e±k`.
    pub fn to_scientific(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let sign = if self.negative { "-" } else { "" };
        let (head, tail) = self.digits.split_at(1);
        let exp = self.point - 1;
        if tail.is_empty() {
            format!("{sign}{head}e{exp}")
        } else {
            format!("{sign}{head}.{tail}e{exp}")
        }
    }

    /// Fixed-point for moderate magnitudes, scientific for tiny ones.
    pub fn to_text(&self) -> String {
        if self.point < FIXED_MIN_POINT {
            self.to_scientific()
        } else {
            self.to_fixed()
        }
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn pow10(k: u64) -> BigUint {
    num_traits::pow(BigUint::from(10u32), k as usize)
}

/// `round(mag * 2^scale * 10^k)`, half away from zero.
fn scaled_round(mag: &BigUint, scale: i64, k: i64) -> BigUint {
    let mut num = mag.clone();
    let mut den = BigUint::one();
    if scale >= 0 {
        num <<= scale as usize;
    } else {
        den <<= (-scale) as usize;
    }
    if k >= 0 {
        num *= pow10(k as u64);
    } else {
        den *= pow10((-k) as u64);
    }
    let (q, r) = num.div_rem(&den);
    if r << 1usize >= den {
        q + 1u32
    } else {
        q
    }
}

/// Number of significant digits in a decimal string: every digit from the
/// first nonzero one onward.
pub fn significant_digits(text: &str) -> usize {
    text.bytes()
        .filter(u8::is_ascii_digit)
        .skip_while(|&b| b == b'0')
        .count()
}

/// Number of digits after the decimal point.
pub fn decimal_places(text: &str) -> usize {
    text.split_once('.')
        .map(|(_, frac)| frac.bytes().take_while(u8::is_ascii_digit).count())
        .unwrap_or(0)
}

/// Longest common fixed-point prefix of `a` and `b`, each printed at the
/// smaller of their decimal capacities and truncated toward zero.
///
/// Returns the empty string when the two disagree in sign or in their
/// leading significant digit, including across a power-of-ten boundary
/// such as `0.999…` against `1.000…`.
pub fn common_prefix_digits(a: &BigReal, b: &BigReal) -> String {
    let digits = decimal_capacity(a.bits().min(b.bits()));
    let sa = a.to_full_decimal().truncate(digits).to_fixed();
    let sb = b.to_full_decimal().truncate(digits).to_fixed();
    common_prefix_of_strings(&sa, &sb)
}

/// Common prefix of two fixed-point strings under the rules of
/// [`common_prefix_digits`].
pub(crate) fn common_prefix_of_strings(sa: &str, sb: &str) -> String {
    if sa == sb {
        return sa.to_string();
    }
    let len = sa
        .bytes()
        .zip(sb.bytes())
        .take_while(|(x, y)| x == y)
        .count();
    let prefix = sa[..len].trim_end_matches('.');
    if significant_digits(prefix) == 0 {
        return String::new();
    }
    prefix.to_string()
}
