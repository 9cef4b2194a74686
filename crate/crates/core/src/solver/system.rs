use rayon::prelude::*;

use super::collocation::residual_and_row;
use super::grid::CollocationGrid;
use crate::bignum::{BigReal, Precision};
use crate::error::{Error, Result};
use crate::series::FeigenbaumSeries;

/// Bordered Newton system: row 0 enforces `g(0) = 1`, rows `1…N−1` are
/// the linearized collocation equations.
#[derive(Debug, Clone)]
pub struct NewtonSystem {
    pub matrix: Vec<Vec<BigReal>>,
    pub rhs: Vec<BigReal>,
    pub precision: Precision,
}

impl NewtonSystem {
    pub fn dim(&self) -> usize {
        self.rhs.len()
    }

    pub fn rhs_norm(&self) -> BigReal {
        BigReal::max_abs(&self.rhs, self.precision.bits())
    }

    /// `‖A v − rhs‖∞`.
    pub fn residual_norm(&self, v: &[BigReal]) -> BigReal {
        let bits = self.precision.bits();
        let r: Vec<BigReal> = self
            .matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, b)| {
                row.iter()
                    .zip(v)
                    .fold(BigReal::zero(bits), |acc, (a, x)| acc + a * x)
                    - b
            })
            .collect();
        BigReal::max_abs(&r, bits)
    }
}

/// Constraint row `(½, −1, 1, −1, …)`.
pub fn constraint_row(n: usize, precision: Precision) -> Vec<BigReal> {
    (0..n)
        .map(|i| match i {
            0 => precision.int(1).half(),
            _ if i % 2 == 1 => precision.int(-1),
            _ => precision.int(1),
        })
        .collect()
}

pub fn assemble(series: &FeigenbaumSeries, grid: &CollocationGrid) -> Result<NewtonSystem> {
    let n = series.order_n();
    if grid.order_n() != n || grid.d() != series.d() {
        return Err(Error::domain(format!(
            "grid (N={}, d={}) does not match series (N={n}, d={})",
            grid.order_n(),
            grid.d(),
            series.d()
        )));
    }
    let precision = series.precision();
    let rows: Vec<(BigReal, Vec<BigReal>)> = grid
        .abscissae()
        .par_iter()
        .map(|x| residual_and_row(series, x))
        .collect();
    let mut matrix = Vec::with_capacity(n);
    let mut rhs = Vec::with_capacity(n);
    matrix.push(constraint_row(n, precision));
    rhs.push(-series.g0_defect());
    for (f, row) in rows {
        matrix.push(row);
        rhs.push(-f);
    }
    Ok(NewtonSystem {
        matrix,
        rhs,
        precision,
    })
}

#[derive(Debug, Clone)]
pub struct LinearSolution {
    pub delta: Vec<BigReal>,
    /// `‖A Δ − rhs‖∞` of the back-substituted solution.
    pub residual_norm: BigReal,
    /// Whether `residual_norm ≤ 10^{−(working−10)} ‖rhs‖∞`.
    pub within_tolerance: bool,
}

/// Dense Gaussian elimination with partial (max-magnitude) pivoting.
pub fn linear_solve(system: &NewtonSystem) -> Result<LinearSolution> {
    let n = system.dim();
    let precision = system.precision;
    let working = precision.working_digits();
    let pivot_floor = precision.epsilon(working - 5);
    let mut a: Vec<Vec<BigReal>> = system.matrix.clone();
    let mut b: Vec<BigReal> = system.rhs.clone();
    if a.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::domain("Newton system must be square"));
    }

    for col in 0..n {
        let (pivot_row, pivot_abs) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .fold(None::<(usize, BigReal)>, |best, (r, v)| match best {
                Some((_, ref bv)) if *bv >= v => best,
                _ => Some((r, v)),
            })
            .expect("non-empty column");
        if pivot_abs < pivot_floor {
            return Err(Error::Singular { column: col });
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot = &upper[col];
        let (b_upper, b_lower) = b.split_at_mut(col + 1);
        let b_pivot = &b_upper[col];
        lower
            .par_iter_mut()
            .zip(b_lower.par_iter_mut())
            .for_each(|(row, rhs)| {
                if row[col].is_zero() {
                    return;
                }
                let factor = &row[col] / &pivot[col];
                for k in col + 1..n {
                    let delta = &factor * &pivot[k];
                    row[k] -= delta;
                }
                row[col] = BigReal::zero(precision.bits());
                *rhs -= &factor * b_pivot;
            });
    }

    let mut x = vec![precision.zero(); n];
    for i in (0..n).rev() {
        let mut acc = b[i].clone();
        for k in i + 1..n {
            acc -= &a[i][k] * &x[k];
        }
        x[i] = acc / &a[i][i];
    }

    let residual_norm = system.residual_norm(&x);
    let bound = &precision.epsilon(working - 10) * &system.rhs_norm();
    Ok(LinearSolution {
        within_tolerance: residual_norm <= bound,
        delta: x,
        residual_norm,
    })
}
