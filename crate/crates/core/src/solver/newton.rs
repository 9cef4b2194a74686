use super::grid::CollocationGrid;
use super::system::{assemble, linear_solve};
use super::DIVERGENCE_WINDOW;
use crate::bignum::BigReal;
use crate::error::{Error, Result};
use crate::series::FeigenbaumSeries;

#[derive(Debug, Clone)]
pub struct NewtonOutcome {
    pub series: FeigenbaumSeries,
    /// Corrections applied.
    pub iterations: usize,
    /// `max(max_j |f_j|, |g(0) − 1|)` before each correction, plus the
    /// final converged value.
    pub residual_history: Vec<BigReal>,
    /// `‖Δt‖∞` of each applied correction.
    pub step_history: Vec<BigReal>,
}

impl NewtonOutcome {
    pub fn final_residual(&self) -> &BigReal {
        self.residual_history
            .last()
            .expect("at least one evaluation")
    }
}

fn grew_for_window(history: &[BigReal]) -> bool {
    history.len() > DIVERGENCE_WINDOW
        && history[history.len() - DIVERGENCE_WINDOW - 1..]
            .windows(2)
            .all(|w| w[1] > w[0])
}

/// Multivariate Newton iteration on the bordered collocation system.
///
/// Stops once `max(‖Δt‖∞, max_j |f_j|, |g(0) − 1|) ≤ tol`.
pub fn newton_solve(
    seed: &FeigenbaumSeries,
    grid: &CollocationGrid,
    tol: &BigReal,
    max_iter: usize,
) -> Result<NewtonOutcome> {
    newton_solve_min(seed, grid, tol, max_iter, 0)
}

/// As [`newton_solve`], but takes at least `min_iter` steps even when the
/// seed already meets `tol`.
pub fn newton_solve_min(
    seed: &FeigenbaumSeries,
    grid: &CollocationGrid,
    tol: &BigReal,
    max_iter: usize,
    min_iter: usize,
) -> Result<NewtonOutcome> {
    if !(tol > &BigReal::zero(tol.bits())) {
        return Err(Error::domain("Newton tolerance must be positive"));
    }
    let bits = seed.precision().bits();
    let mut series = seed.clone();
    let mut residual_history = Vec::new();
    let mut step_history: Vec<BigReal> = Vec::new();
    for iteration in 0..=max_iter {
        let system = assemble(&series, grid)?;
        let rnorm = system.rhs_norm();
        residual_history.push(rnorm.clone());
        let last_step = step_history
            .last()
            .cloned()
            .unwrap_or_else(|| BigReal::zero(bits));
        if iteration >= min_iter && rnorm <= *tol && last_step <= *tol {
            return Ok(NewtonOutcome {
                series,
                iterations: iteration,
                residual_history,
                step_history,
            });
        }
        if !rnorm.is_finite() || grew_for_window(&residual_history) {
            return Err(Error::Diverged {
                iterations: iteration,
                history: residual_history,
                last: Box::new(series),
            });
        }
        if iteration == max_iter {
            break;
        }
        let solution = linear_solve(&system)?;
        for (c, dc) in series.coeffs_mut().iter_mut().zip(&solution.delta) {
            *c += dc;
        }
        step_history.push(BigReal::max_abs(&solution.delta, bits));
    }
    Err(Error::NonConvergence {
        iterations: max_iter,
        history: residual_history,
        last: Box::new(series),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bignum::Precision;
    use crate::solver::make_grid;

    #[test]
    fn trivial_seed_returns_immediately() {
        let p = Precision::with_target(20).unwrap();
        let seed = FeigenbaumSeries::constant(2, 8, p).unwrap();
        let grid = make_grid(8, 1, p).unwrap();
        let out = newton_solve(&seed, &grid, &p.epsilon(30), 50).unwrap();
        assert_eq!(out.iterations, 0);
        assert!(out.step_history.is_empty());
    }

    #[test]
    fn rejects_non_positive_tolerance() {
        let p = Precision::with_target(20).unwrap();
        let seed = FeigenbaumSeries::constant(2, 8, p).unwrap();
        let grid = make_grid(8, 1, p).unwrap();
        assert!(newton_solve(&seed, &grid, &p.zero(), 5).is_err());
    }

    #[test]
    fn divergence_window() {
        let p = Precision::with_target(20).unwrap();
        let h: Vec<BigReal> = (1..=6).map(|v| p.int(v)).collect();
        assert!(grew_for_window(&h));
        assert!(!grew_for_window(&h[..5]));
        let mut flat = h.clone();
        flat[3] = p.int(0);
        assert!(!grew_for_window(&flat));
    }
}
