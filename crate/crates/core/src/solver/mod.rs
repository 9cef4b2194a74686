//! Collocation and Newton iteration for the fixed-point equation.
//!
//! The unknowns are the Chebyshev coefficients `t_0, t_2, …, t_{2N−2}`.
//! Row 0 of the Newton system imposes `g(0) = 1`; the remaining rows
//! force the residual to vanish at `N − 1` collocation points.

mod branch;
mod collocation;
mod continuation;
mod grid;
mod newton;
mod system;

pub use branch::{seed_series, Branch, BranchSpec, Seed, SEED_DIGITS, SEED_TERMS};
pub use collocation::{jac_row, residual};
pub use continuation::{
    default_tolerance, solve_with_continuation, ContinuationConfig, OrderRecord, SolveReport,
    STAGNATION_WINDOW,
};
pub use grid::{make_grid, CollocationGrid};
pub use newton::{newton_solve, newton_solve_min, NewtonOutcome};
pub use system::{assemble, constraint_row, linear_solve, LinearSolution, NewtonSystem};

/// Consecutive residual-norm increases that count as divergence.
pub const DIVERGENCE_WINDOW: usize = 5;
pub const DEFAULT_MAX_ITER: usize = 50;
