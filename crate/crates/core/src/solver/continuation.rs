use super::branch::{seed_series, BranchSpec};
use super::grid::make_grid;
use super::newton::newton_solve_min;
use super::DEFAULT_MAX_ITER;
use crate::bignum::{BigReal, Precision};
use crate::error::{Error, Result};
use crate::series::{stable_taylor, taylor_from_cheb, DigitReport, FeigenbaumSeries, TaylorTable};

/// Enlargements without a new best digit count before giving up.
pub const STAGNATION_WINDOW: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContinuationConfig {
    pub initial_n: usize,
    pub step: usize,
    pub max_n: usize,
    pub max_iter: usize,
}

impl Default for ContinuationConfig {
    fn default() -> Self {
        Self {
            initial_n: 12,
            step: 4,
            max_n: 200,
            max_iter: DEFAULT_MAX_ITER,
        }
    }
}

/// One converged order.
#[derive(Debug, Clone)]
pub struct OrderRecord {
    pub order_n: usize,
    pub iterations: usize,
    pub lambda: BigReal,
    pub residual_norm: BigReal,
    /// Stable digits of `1/λ` against the previous order; `None` for the
    /// first order.
    pub stable_digits: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub spec: BranchSpec,
    /// Solution at the highest order reached.
    pub series: FeigenbaumSeries,
    /// Solution one step below, used for digit comparison.
    pub lower: FeigenbaumSeries,
    pub orders: Vec<OrderRecord>,
    pub digit_report: DigitReport,
    /// Taylor coefficients with digits common to both orders.
    pub taylor: TaylorTable,
    /// Stable digits of `1/λ`.
    pub feigenbaum_constant: String,
    pub stable_digits: usize,
    pub reached_target: bool,
}

impl SolveReport {
    pub fn lambda(&self) -> BigReal {
        self.series.lambda()
    }
}

/// Newton stopping threshold for a given precision.
pub fn default_tolerance(precision: Precision) -> BigReal {
    precision.epsilon(precision.working_digits() - 10)
}

fn converge(
    seed: &FeigenbaumSeries,
    max_iter: usize,
    tol: &BigReal,
    stable_digits: Option<usize>,
) -> Result<(FeigenbaumSeries, OrderRecord)> {
    let grid = make_grid(seed.order_n(), seed.d(), seed.precision())?;
    // A padded iterate can already meet `tol`; without a step the two
    // orders would be identical and every digit would look stable.
    let out = newton_solve_min(seed, &grid, tol, max_iter, 1)?;
    let record = OrderRecord {
        order_n: seed.order_n(),
        iterations: out.iterations,
        lambda: out.series.lambda(),
        residual_norm: out.final_residual().clone(),
        stable_digits,
    };
    Ok((out.series, record))
}

/// Solves at increasing truncation orders until `1/λ` has
/// `precision.target_digits()` digits common to two successive orders, or
/// `config.max_n` would be exceeded.
pub fn solve_with_continuation(
    spec: &BranchSpec,
    precision: Precision,
    config: &ContinuationConfig,
) -> Result<SolveReport> {
    if config.initial_n < 8 {
        return Err(Error::domain(format!(
            "initial order must be at least 8, got {}",
            config.initial_n
        )));
    }
    if config.step == 0 || config.initial_n + config.step > config.max_n {
        return Err(Error::domain(format!(
            "order schedule {} + k*{} never reaches a second order below {}",
            config.initial_n, config.step, config.max_n
        )));
    }
    let target = precision.target_digits() as usize;
    let tol = default_tolerance(precision);

    let seed = seed_series(spec, precision, config.initial_n)?;
    let (mut lower, first) = converge(&seed, config.max_iter, &tol, None)?;
    let mut orders = vec![first];
    let mut best = 0;
    let mut since_best = 0;
    loop {
        let n = lower.order_n() + config.step;
        let (higher, mut record) = converge(&lower.pad_order(n)?, config.max_iter, &tol, None)?;
        let digit_report = DigitReport::compare(&lower, &higher);
        let digits = digit_report.inverse_lambda_digits();
        record.stable_digits = Some(digits);
        orders.push(record);

        let reached_target = digits >= target;
        if reached_target || n + config.step > config.max_n {
            let top = lower.max_exponent();
            let taylor = stable_taylor(
                &taylor_from_cheb(&lower, top)?,
                &taylor_from_cheb(&higher, top)?,
            )?;
            return Ok(SolveReport {
                spec: spec.clone(),
                feigenbaum_constant: digit_report.inverse_lambda.clone(),
                stable_digits: digits,
                series: higher,
                lower,
                orders,
                digit_report,
                taylor,
                reached_target,
            });
        }
        if digits > best {
            best = digits;
            since_best = 0;
        } else {
            since_best += 1;
            if since_best >= STAGNATION_WINDOW {
                return Err(Error::Stagnation {
                    order: n,
                    best_digits: best,
                    window: STAGNATION_WINDOW,
                });
            }
        }
        lower = higher;
    }
}
