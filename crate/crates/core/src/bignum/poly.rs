//! Chebyshev kernels and exact binomials.
//!
//! Even-index series `Σ' t_{2i} T_{2i}(u)` are evaluated as ordinary
//! Chebyshev series in `w = 2u² − 1`, using `T_{2i}(u) = T_i(w)`.

use num_bigint::BigUint;

use super::BigReal;
use crate::error::{Error, Result};

/// `T_n(u)` by the three-term recurrence; valid for any real `u`.
pub fn cheb_t(n: usize, u: &BigReal) -> BigReal {
    let mut prev = u.unit();
    if n == 0 {
        return prev;
    }
    let mut cur = u.clone();
    let two_u = u.scale_pow2(1);
    for _ in 1..n {
        let next = &(&two_u * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_n'(u) = n U_{n-1}(u)`. Returns 0 for `n = 0`.
pub fn cheb_t_prime(n: usize, u: &BigReal) -> BigReal {
    if n == 0 {
        return BigReal::zero(u.bits());
    }
    let mut prev = u.unit();
    let two_u = u.scale_pow2(1);
    let mut cur = two_u.clone();
    if n == 1 {
        return prev;
    }
    for _ in 2..n {
        let next = &(&two_u * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur.mul_i64(n as i64)
}

/// `T_0(u), T_2(u), …, T_{2(count-1)}(u)`.
pub fn cheb_even_values(u: &BigReal, count: usize) -> Vec<BigReal> {
    let w = &u.square().scale_pow2(1) - &u.unit();
    let two_w = w.scale_pow2(1);
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(u.unit());
    if count == 1 {
        return out;
    }
    out.push(w);
    for i in 2..count {
        let next = &(&two_w * &out[i - 1]) - &out[i - 2];
        out.push(next);
    }
    out
}

/// Halved-head sum `Σ' t_n T_n(u)` over even `n`, with `coeffs[i] = t_{2i}`.
///
/// With `derivative` set, returns `Σ_{n≥2} t_n T_n'(u)` instead (no
/// halving; the `n = 0` term has zero derivative).
pub fn cheb_sum_halved(coeffs: &[BigReal], u: &BigReal, derivative: bool) -> BigReal {
    let bits = coeffs
        .iter()
        .map(BigReal::bits)
        .chain(std::iter::once(u.bits()))
        .max()
        .unwrap_or(u.bits());
    let zero = BigReal::zero(bits);
    if coeffs.is_empty() {
        return zero;
    }
    let w = &u.square().scale_pow2(1) - &u.unit();
    let two_w = w.scale_pow2(1);
    if !derivative {
        // Clenshaw: b_i = c_i + 2w b_{i+1} - b_{i+2}
        let (mut b1, mut b2) = (zero.clone(), zero.clone());
        for c in coeffs.iter().skip(1).rev() {
            let b0 = &(c + &(&two_w * &b1)) - &b2;
            b2 = b1;
            b1 = b0;
        }
        // Σ' c_i T_i(w) = c_0/2 + w b_1 - b_2
        return &(&coeffs[0].half() + &(&w * &b1)) - &b2;
    }
    // d/du T_i(w) = 4u i U_{i-1}(w); Clenshaw over U with a_j = (j+1) c_{j+1}.
    let (mut b1, mut b2) = (zero.clone(), zero);
    for (j, c) in coeffs.iter().enumerate().skip(1).rev() {
        let a = c.mul_i64(j as i64);
        let b0 = &(&a + &(&two_w * &b1)) - &b2;
        b2 = b1;
        b1 = b0;
    }
    // b1 now holds Σ a_j U_j(w) (U_0 = 1, U_1 = 2w).
    &b1 * &u.scale_pow2(2)
}

/// Exact `C(a, b)`.
pub fn binomial_exact(a: u64, b: u64) -> Result<BigUint> {
    if b > a {
        return Err(Error::domain(format!("binomial C({a}, {b}) with b > a")));
    }
    let b = b.min(a - b);
    let mut acc = BigUint::from(1u32);
    for i in 1..=b {
        // C(a-b+i, i) = C(a-b+i-1, i-1) * (a-b+i) / i, exact at every step
        acc = acc * BigUint::from(a - b + i) / BigUint::from(i);
    }
    Ok(acc)
}
