use crate::bignum::{BigReal, Precision};
use crate::error::{Error, Result};

/// Collocation abscissae `x_1 > x_2 > … > x_{N-1}` in `(0, 1)`.
#[derive(Debug, Clone)]
pub struct CollocationGrid {
    order_n: usize,
    d: u32,
    abscissae: Vec<BigReal>,
}

impl CollocationGrid {
    pub fn order_n(&self) -> usize {
        self.order_n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn abscissae(&self) -> &[BigReal] {
        &self.abscissae
    }
}

/// Points whose series arguments `x_j^d = cos(jπ/(2N))`, `j = 1 … N−1`,
/// form the positive half of the Chebyshev angle set.
///
/// `g` is even, so the full set `cos(jπ/N)` would produce every row
/// twice. Spacing the argument `x^d` rather than `x` itself keeps the
/// rows well separated when `d > 1`; for `d = 1` the two coincide.
pub fn make_grid(order_n: usize, d: u32, precision: Precision) -> Result<CollocationGrid> {
    if order_n < 4 {
        return Err(Error::domain(format!(
            "collocation needs order N >= 4, got {order_n}"
        )));
    }
    if d == 0 {
        return Err(Error::domain("d must be positive"));
    }
    let bits = precision.bits();
    let angle = BigReal::pi(bits).div_i64(2 * order_n as i64);
    let abscissae = (1..order_n)
        .map(|j| angle.mul_i64(j as i64).cos().root(d))
        .collect();
    Ok(CollocationGrid {
        order_n,
        d,
        abscissae,
    })
}
