use std::fmt;
use std::str::FromStr;

use crate::bignum::{BigReal, Decimal, Precision};
use crate::error::{Error, Result};
use crate::refdata;
use crate::series::{validate_z, FeigenbaumSeries};

/// Significant digits kept from a published value when seeding.
pub const SEED_DIGITS: usize = 6;
/// Leading Chebyshev coefficients copied into a table-based seed.
pub const SEED_TERMS: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// The standard solution, `g(1) < 0`.
    Principal,
    /// The second `z = 2` solution, whose graph returns to `g(1) > 0`.
    Extra,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Principal => "principal",
            Branch::Extra => "extra",
        })
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "principal" => Ok(Branch::Principal),
            "extra" => Ok(Branch::Extra),
            _ => Err(Error::domain(format!(
                "unknown branch {s:?}; expected principal or extra"
            ))),
        }
    }
}

/// How the first iterate is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Seed {
    /// `g ≈ 1 + b x^z`.
    LeadingTaylor(String),
    /// Leading `t_n` values, `(n, value)`.
    Chebyshev(Vec<(usize, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchSpec {
    z: u32,
    branch: Branch,
    seed: Seed,
}

fn truncated(text: &str) -> Result<String> {
    Ok(Decimal::parse(text)?.truncate(SEED_DIGITS).to_fixed())
}

impl BranchSpec {
    pub fn new(z: u32, branch: Branch) -> Result<Self> {
        validate_z(z)?;
        if branch == Branch::Extra && z != 2 {
            return Err(Error::domain(format!(
                "the extra branch exists only for z = 2, not z = {z}"
            )));
        }
        let entry = refdata::lookup(z, branch)?;
        let seed = if z == 2 && branch == Branch::Principal {
            Seed::LeadingTaylor(truncated(&entry.b_table[0].1)?)
        } else {
            // A two-term Taylor guess lands on spurious collocation roots for
            // the flatter maxima, so use the leading published t_n instead.
            Seed::Chebyshev(
                entry
                    .t_table
                    .iter()
                    .take(SEED_TERMS)
                    .map(|(n, v)| Ok((*n, truncated(v)?)))
                    .collect::<Result<_>>()?,
            )
        };
        Ok(Self { z, branch, seed })
    }

    pub fn z(&self) -> u32 {
        self.z
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    /// Non-zero seed coefficients `(n, t_n)` at `precision`.
    pub fn seed_coefficients(&self, precision: Precision) -> Result<Vec<(usize, BigReal)>> {
        match &self.seed {
            Seed::LeadingTaylor(b) => {
                // x^z = u², u = x^d, and u² = (T_0 + T_2(u)) / 2 with a halved head.
                let b = precision.parse(b)?;
                Ok(vec![(0, &precision.int(2) + &b), (2, b.half())])
            }
            Seed::Chebyshev(rows) => rows
                .iter()
                .map(|(n, v)| Ok((*n, precision.parse(v)?)))
                .collect(),
        }
    }
}

impl fmt::Display for BranchSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z={} branch={}", self.z, self.branch)
    }
}

/// Initial iterate of order `order_n`; coefficients beyond the seed are zero.
pub fn seed_series(
    spec: &BranchSpec,
    precision: Precision,
    order_n: usize,
) -> Result<FeigenbaumSeries> {
    let mut coeffs = vec![precision.zero(); order_n];
    for (n, v) in spec.seed_coefficients(precision)? {
        if let Some(slot) = coeffs.get_mut(n / 2) {
            *slot = v;
        }
    }
    FeigenbaumSeries::new(spec.z(), coeffs, precision)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prec() -> Precision {
        Precision::with_target(20).unwrap()
    }

    #[test]
    fn validation() {
        assert!(BranchSpec::new(3, Branch::Principal).is_err());
        assert!(BranchSpec::new(0, Branch::Principal).is_err());
        assert!(BranchSpec::new(4, Branch::Extra).is_err());
        assert!(matches!(
            BranchSpec::new(16, Branch::Principal),
            Err(Error::NotFound { .. })
        ));
        assert!("sideways".parse::<Branch>().is_err());
        assert_eq!("extra".parse::<Branch>().unwrap(), Branch::Extra);
    }

    #[test]
    fn principal_z2_uses_leading_taylor() {
        let spec = BranchSpec::new(2, Branch::Principal).unwrap();
        assert_eq!(spec.seed(), &Seed::LeadingTaylor("-1.52763".into()));
        let s = seed_series(&spec, prec(), 12).unwrap();
        let close =
            |a: &BigReal, b: &str| (a - &prec().parse(b).unwrap()).abs() < prec().epsilon(35);
        assert!(close(&s.coeffs()[0], "0.47237"));
        assert!(close(&s.coeffs()[1], "-0.763815"));
        assert!(s.coeffs()[2..].iter().all(BigReal::is_zero));
        // g(0) = 1 holds for the two-term seed
        assert!(s.g0_defect().abs() < prec().epsilon(35));
    }

    #[test]
    fn extra_seed_is_truncated_table() {
        let spec = BranchSpec::new(2, Branch::Extra).unwrap();
        let Seed::Chebyshev(rows) = spec.seed() else {
            panic!("expected table seed")
        };
        assert_eq!(rows.len(), SEED_TERMS);
        assert_eq!(rows[0], (0, "0.695239".into()));
        assert_eq!(rows[1], (2, "-0.294192".into()));
    }

    #[test]
    fn seed_fits_small_orders() {
        let spec = BranchSpec::new(6, Branch::Principal).unwrap();
        assert_eq!(seed_series(&spec, prec(), 4).unwrap().order_n(), 4);
    }
}
