//! Independent oracles shared by the integration tests.

#![allow(dead_code)]

use feigenbaum::bignum::{BigReal, Precision};
use feigenbaum::refdata;
use feigenbaum::series::FeigenbaumSeries;
use feigenbaum::solver::{jac_row, residual, Branch};
use num_bigint::BigInt;
use rand::Rng;

/// Integer monomial coefficients of `T_0 … T_max` by the recurrence
/// `T_{k+1} = 2y T_k − T_{k−1}`.
pub fn chebyshev_monomials(max: usize) -> Vec<Vec<BigInt>> {
    let mut out: Vec<Vec<BigInt>> = vec![
        vec![BigInt::from(1)],
        vec![BigInt::from(0), BigInt::from(1)],
    ];
    for k in 1..max {
        let mut next = vec![BigInt::from(0); k + 2];
        for (i, c) in out[k].iter().enumerate() {
            next[i + 1] += c * 2;
        }
        for (i, c) in out[k - 1].iter().enumerate() {
            next[i] -= c;
        }
        out.push(next);
    }
    out.truncate(max + 1);
    out
}

/// `2 · Σ' t_s T_s(y)` expanded in powers of `y`, for integer `t_s`
/// (`s` even). Doubling keeps the halved head integral.
pub fn doubled_monomial_expansion(t: &[i64]) -> Vec<BigInt> {
    let top = 2 * (t.len() - 1);
    let polys = chebyshev_monomials(top.max(1));
    let mut acc = vec![BigInt::from(0); top + 1];
    for (i, &c) in t.iter().enumerate() {
        let weight = if i == 0 { c } else { 2 * c };
        for (p, coef) in polys[2 * i].iter().enumerate() {
            acc[p] += coef * weight;
        }
    }
    acc
}

/// Central finite difference of the residual with respect to `t_{2k}`.
pub fn fd_column(series: &FeigenbaumSeries, x: &BigReal, k: usize, h: &BigReal) -> BigReal {
    let coeffs = series.coeffs().to_vec();
    let shifted = |sign: i64| {
        let mut c = coeffs.clone();
        c[k] = &c[k] + &h.mul_i64(sign);
        FeigenbaumSeries::new(series.z(), c, series.precision()).unwrap()
    };
    (residual(&shifted(1), x) - residual(&shifted(-1), x)) / h.mul_i64(2)
}

/// A published solution truncated to `n` terms, each coefficient scaled by
/// `1 + δ` with `|δ| ≤ 10^-3`.
pub fn perturbed_reference<R: Rng>(
    rng: &mut R,
    z: u32,
    n: usize,
    precision: Precision,
) -> FeigenbaumSeries {
    let entry = refdata::lookup(z, Branch::Principal).unwrap();
    let coeffs = entry
        .t_table
        .iter()
        .take(n)
        .map(|(_, v)| {
            let scale = precision
                .parse(&format!("{:.9}", 1.0 + rng.gen_range(-1e-3..1e-3)))
                .unwrap();
            &precision.parse(v).unwrap() * &scale
        })
        .collect();
    FeigenbaumSeries::new(z, coeffs, precision).unwrap()
}

/// Worst `|analytic − fd| / max(1, |analytic|)` over one Jacobian row,
/// expressed as agreeing decimal digits.
pub fn jacobian_agreement(series: &FeigenbaumSeries, x: &BigReal) -> f64 {
    let p = series.precision();
    let h = p.epsilon(p.working_digits() / 3);
    let row = jac_row(series, x);
    let one = p.int(1);
    row.iter()
        .enumerate()
        .map(|(k, a)| {
            let diff = (a - &fd_column(series, x, k, &h)).abs();
            let scale = if a.abs() > one { a.abs() } else { one.clone() };
            let rel = (diff / scale).to_f64();
            if rel == 0.0 {
                f64::INFINITY
            } else {
                -rel.log10()
            }
        })
        .fold(f64::INFINITY, f64::min)
}

/// `max_x |λ g(x) + g(g(λx))|` over `count` uniform points of `[0, 1]`.
pub fn max_functional_residual(series: &FeigenbaumSeries, count: usize) -> BigReal {
    let p = series.precision();
    let values: Vec<BigReal> = (0..count)
        .map(|i| residual(series, &(p.int(i as i64) / p.int(count as i64 - 1))).abs())
        .collect();
    BigReal::max_abs(&values, p.bits())
}
