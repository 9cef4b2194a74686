//! The even Chebyshev series model of `g`.
//!
//! `g(x) = Σ' t_n T_n(x^d)` with `d = z/2` and only even `n`, so every
//! power of `x` in the expansion is a multiple of `z`. Coefficients are
//! stored densely as `t_0, t_2, …, t_{2N-2}`.

mod checkpoint;
mod taylor;

pub use checkpoint::{read_checkpoint, write_checkpoint, CheckpointHeader};
pub(crate) use taylor::monomial_coefficient;
pub use taylor::{stable_taylor, taylor_from_cheb, TaylorEntry, TaylorTable};

use crate::bignum::{cheb_sum_halved, common_prefix_digits, BigReal, Precision};
use crate::error::{Error, Result};

pub(crate) fn validate_z(z: u32) -> Result<()> {
    if z < 2 || z % 2 != 0 {
        return Err(Error::domain(format!(
            "smoothness order z must be even and at least 2, got {z}"
        )));
    }
    Ok(())
}

/// Truncated even Chebyshev series for a fixed smoothness order `z`.
#[derive(Debug, Clone)]
pub struct FeigenbaumSeries {
    z: u32,
    coeffs: Vec<BigReal>,
    precision: Precision,
}

impl FeigenbaumSeries {
    /// `coeffs[i]` is `t_{2i}`; values are rounded to the working precision.
    pub fn new(z: u32, coeffs: Vec<BigReal>, precision: Precision) -> Result<Self> {
        validate_z(z)?;
        if coeffs.is_empty() {
            return Err(Error::domain("a series needs at least the t_0 coefficient"));
        }
        let bits = precision.bits();
        let coeffs = coeffs.into_iter().map(|c| c.with_bits(bits)).collect();
        Ok(Self {
            z,
            coeffs,
            precision,
        })
    }

    /// `g ≡ 1` (`t_0 = 2`), a trivial fixed point with `λ = −1`.
    pub fn constant(z: u32, order_n: usize, precision: Precision) -> Result<Self> {
        let mut coeffs = vec![precision.zero(); order_n.max(1)];
        coeffs[0] = precision.int(2);
        Self::new(z, coeffs, precision)
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    pub fn d(&self) -> u32 {
        self.z / 2
    }

    /// Number of retained even coefficients `N`.
    pub fn order_n(&self) -> usize {
        self.coeffs.len()
    }

    /// Highest power of `x` the series can represent.
    pub fn max_exponent(&self) -> usize {
        2 * (self.order_n() - 1) * self.d() as usize
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn coeffs(&self) -> &[BigReal] {
        &self.coeffs
    }

    /// `t_n` for even `n`, zero beyond the truncation.
    pub fn coeff(&self, n: usize) -> Option<BigReal> {
        if n % 2 != 0 {
            return None;
        }
        Some(
            self.coeffs
                .get(n / 2)
                .cloned()
                .unwrap_or_else(|| self.precision.zero()),
        )
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [BigReal] {
        &mut self.coeffs
    }

    pub fn with_precision(&self, precision: Precision) -> Self {
        Self::new(self.z, self.coeffs.clone(), precision).expect("validated")
    }

    /// `g(x) = Σ' t_n T_n(x^d)`; any real `x` is accepted.
    pub fn eval_g(&self, x: &BigReal) -> BigReal {
        let u = x.with_bits(self.precision.bits()).powi(self.d() as usize);
        cheb_sum_halved(&self.coeffs, &u, false)
    }

    /// `λ = −g(1) = −Σ' t_n`.
    pub fn lambda(&self) -> BigReal {
        let tail: BigReal = self.coeffs[1..]
            .iter()
            .fold(self.precision.zero(), |acc, c| acc + c);
        -(self.coeffs[0].half() + tail)
    }

    pub fn inverse_lambda(&self) -> BigReal {
        self.precision.int(1) / self.lambda()
    }

    /// `g(0) − 1 = Σ' (−1)^{n/2} t_n − 1`.
    pub fn g0_defect(&self) -> BigReal {
        let mut acc = &self.coeffs[0].half() - &self.precision.int(1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            if i % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        acc
    }

    /// Appends zero coefficients up to `new_n`.
    pub fn pad_order(&self, new_n: usize) -> Result<Self> {
        if new_n <= self.order_n() {
            return Err(Error::domain(format!(
                "cannot pad order {} to {new_n}",
                self.order_n()
            )));
        }
        let mut out = self.clone();
        out.coeffs.resize(new_n, self.precision.zero());
        Ok(out)
    }
}

/// Stable digits of one solution against a larger-order solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitReport {
    pub lower_order: usize,
    pub higher_order: usize,
    /// `(n, stable digits of t_n)`, cut at the first coefficient without
    /// any stable digit.
    pub coefficients: Vec<(usize, String)>,
    pub lambda: String,
    pub inverse_lambda: String,
}

impl DigitReport {
    pub fn compare(lower: &FeigenbaumSeries, higher: &FeigenbaumSeries) -> Self {
        let coefficients = lower
            .coeffs()
            .iter()
            .zip(higher.coeffs())
            .enumerate()
            .map(|(i, (a, b))| (2 * i, common_prefix_digits(a, b)))
            .take_while(|(_, s)| !s.is_empty())
            .collect();
        Self {
            lower_order: lower.order_n(),
            higher_order: higher.order_n(),
            coefficients,
            lambda: common_prefix_digits(&lower.lambda(), &higher.lambda()),
            inverse_lambda: common_prefix_digits(&lower.inverse_lambda(), &higher.inverse_lambda()),
        }
    }

    pub fn inverse_lambda_digits(&self) -> usize {
        crate::bignum::significant_digits(&self.inverse_lambda)
    }
}
