use thiserror::Error;

use crate::bignum::BigReal;
use crate::series::FeigenbaumSeries;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid precision: {0}")]
    Precision(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("cannot parse decimal {text:?}: {reason}")]
    Decimal { text: String, reason: &'static str },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("singular Newton system: pivot in column {column} vanishes at working precision")]
    Singular { column: usize },

    #[error("Newton iteration did not converge after {iterations} iterations (last residual norm {})",
        history.last().map(|n| n.to_sci_string(6)).unwrap_or_default())]
    NonConvergence {
        iterations: usize,
        history: Vec<BigReal>,
        last: Box<FeigenbaumSeries>,
    },

    #[error("Newton iteration diverged at iteration {iterations}: residual norm grew for {} consecutive steps",
        crate::solver::DIVERGENCE_WINDOW)]
    Diverged {
        iterations: usize,
        history: Vec<BigReal>,
        last: Box<FeigenbaumSeries>,
    },

    #[error(
        "no stable digits gained for {window} enlargements up to order {order} \
             (best {best_digits} digits); try a higher working precision"
    )]
    Stagnation {
        order: usize,
        best_digits: usize,
        window: usize,
    },

    #[error("no reference data for z={z} branch={branch}")]
    NotFound { z: u32, branch: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
