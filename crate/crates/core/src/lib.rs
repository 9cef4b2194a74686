//! Arbitrary-precision solutions of the Feigenbaum–Cvitanović fixed-point
//! equation `−λ g(x) = g(g(λx))` for even smoothness orders `z`.
//!
//! `g` is represented by a truncated even Chebyshev series in `x^(z/2)`.
//! The coefficients are found by collocation and a bordered Newton
//! iteration, and stable digits are read off by comparing solutions at
//! successive truncation orders.
//!
//! ```no_run
//! use feigenbaum::bignum::Precision;
//! use feigenbaum::solver::{solve_with_continuation, Branch, BranchSpec, ContinuationConfig};
//!
//! let spec = BranchSpec::new(2, Branch::Principal).unwrap();
//! let precision = Precision::with_target(30).unwrap();
//! let report = solve_with_continuation(&spec, precision, &ContinuationConfig::default()).unwrap();
//! println!("1/lambda = {}", report.feigenbaum_constant);
//! ```

pub mod bignum;
pub mod error;
pub mod refdata;
pub mod series;
pub mod solver;

pub use error::{Error, Result};
