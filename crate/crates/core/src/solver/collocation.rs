//! Collocation residual `f(x) = g(g(λx)) + λ g(x)` and its analytic
//! gradient with respect to the Chebyshev coefficients.
//!
//! `λ = −Σ' t_n` is not an unknown: it is recomputed from the
//! coefficients everywhere, and `∂λ/∂t_k = −1/ε_k` (Neumann symbol
//! `ε_0 = 2`, `ε_k = 1` otherwise) is folded into the gradient.

use crate::bignum::{cheb_even_values, cheb_sum_halved, BigReal};
use crate::series::FeigenbaumSeries;

/// `Σ' c_i v_i` where `v_i = T_{2i}(·)` were precomputed.
fn halved_dot(coeffs: &[BigReal], values: &[BigReal]) -> BigReal {
    let mut acc = coeffs[0].half();
    for (c, v) in coeffs.iter().zip(values).skip(1) {
        acc += c * v;
    }
    acc
}

/// `f(x)` via Clenshaw sums.
pub fn residual(series: &FeigenbaumSeries, x: &BigReal) -> BigReal {
    let d = series.d() as usize;
    let t = series.coeffs();
    let lambda = series.lambda();
    let x = x.with_bits(series.precision().bits());
    let inner = cheb_sum_halved(t, &(&lambda * &x).powi(d), false);
    let outer = cheb_sum_halved(t, &inner.powi(d), false);
    outer + &lambda * &series.eval_g(&x)
}

/// `∂f(x)/∂t_k` for every retained `k = 0, 2, …, 2N−2`.
pub fn jac_row(series: &FeigenbaumSeries, x: &BigReal) -> Vec<BigReal> {
    residual_and_row(series, x).1
}

/// Residual and gradient sharing one set of Chebyshev evaluations.
pub(crate) fn residual_and_row(series: &FeigenbaumSeries, x: &BigReal) -> (BigReal, Vec<BigReal>) {
    let n = series.order_n();
    let d = series.d() as usize;
    let t = series.coeffs();
    let x = x.with_bits(series.precision().bits());
    let lambda = series.lambda();

    let x_d = x.powi(d);
    let lambda_dm1 = lambda.powi(d - 1);
    // inner argument λ^d x^d and g(λx)
    let u = &(&lambda_dm1 * &lambda) * &x_d;
    let t_u = cheb_even_values(&u, n);
    let g_lx = halved_dot(t, &t_u);
    let dg_u = cheb_sum_halved(t, &u, true);
    // outer argument g(λx)^d
    let g_lx_dm1 = g_lx.powi(d - 1);
    let v = &g_lx_dm1 * &g_lx;
    let t_v = cheb_even_values(&v, n);
    let f_a = halved_dot(t, &t_v);
    let dg_v = cheb_sum_halved(t, &v, true);
    // g(x)
    let t_x = cheb_even_values(&x_d, n);
    let g_x = halved_dot(t, &t_x);
    let f_b = &lambda * &g_x;

    // ∂g(λx)/∂t_k = (T_k(u) − x^d d λ^{d−1} Σ t_l T_l'(u)) / ε_k
    let shift_u = &(&x_d * &lambda_dm1).mul_i64(d as i64) * &dg_u;
    // ∂f_a/∂t_k = T_k(v)/ε_k + d g^{d−1}(λx) ∂g(λx)/∂t_k Σ t_l T_l'(v)
    let chain_v = &g_lx_dm1.mul_i64(d as i64) * &dg_v;

    let row = (0..n)
        .map(|k| {
            let dg = &t_u[k] - &shift_u;
            let dfa = &t_v[k] + &(&chain_v * &dg);
            let dfb = &(&lambda * &t_x[k]) - &g_x;
            let entry = dfa + dfb;
            if k == 0 {
                entry.half()
            } else {
                entry
            }
        })
        .collect();
    (f_a + f_b, row)
}
