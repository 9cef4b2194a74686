//! Published coefficient tables and constants, embedded as decimal strings.
//!
//! Each branch ships as a `.cheb` file in the checkpoint layout, a `.taylor`
//! file of `exponent value` lines, and one row of `constants.txt`. Values
//! are parsed on demand at whatever precision the caller needs.

use std::sync::OnceLock;

use crate::bignum::{
    common_prefix_digits, decimal_capacity, decimal_places, significant_digits, BigReal, Decimal,
    Precision,
};
use crate::error::{Error, Result};
use crate::series::{monomial_coefficient, taylor_from_cheb, CheckpointHeader, FeigenbaumSeries};
use crate::solver::{Branch, SolveReport};

const CONSTANTS: &str = include_str!("../data/constants.txt");

const TABLES: &[(u32, Branch, &str, &str)] = &[
    (
        2,
        Branch::Principal,
        include_str!("../data/z02_principal.cheb"),
        include_str!("../data/z02_principal.taylor"),
    ),
    (
        2,
        Branch::Extra,
        include_str!("../data/z02_extra.cheb"),
        include_str!("../data/z02_extra.taylor"),
    ),
    (
        4,
        Branch::Principal,
        include_str!("../data/z04_principal.cheb"),
        include_str!("../data/z04_principal.taylor"),
    ),
    (
        6,
        Branch::Principal,
        include_str!("../data/z06_principal.cheb"),
        include_str!("../data/z06_principal.taylor"),
    ),
    (
        8,
        Branch::Principal,
        include_str!("../data/z08_principal.cheb"),
        include_str!("../data/z08_principal.taylor"),
    ),
    (
        10,
        Branch::Principal,
        include_str!("../data/z10_principal.cheb"),
        include_str!("../data/z10_principal.taylor"),
    ),
    (
        12,
        Branch::Principal,
        include_str!("../data/z12_principal.cheb"),
        include_str!("../data/z12_principal.taylor"),
    ),
    (
        14,
        Branch::Principal,
        include_str!("../data/z14_principal.cheb"),
        include_str!("../data/z14_principal.taylor"),
    ),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceEntry {
    pub z: u32,
    pub branch: Branch,
    pub d: u32,
    /// `1/λ` as printed, sign included.
    pub feigenbaum_constant: String,
    /// `(n, t_n)` for even `n`, ascending.
    pub t_table: Vec<(usize, String)>,
    /// `(n, b_n)` for positive multiples `n` of `z`, ascending.
    pub b_table: Vec<(usize, String)>,
}

impl ReferenceEntry {
    /// Most significant digits carried by any stored value.
    pub fn max_digits(&self) -> usize {
        self.t_table
            .iter()
            .chain(&self.b_table)
            .map(|(_, v)| significant_digits(v))
            .chain(std::iter::once(significant_digits(
                &self.feigenbaum_constant,
            )))
            .max()
            .unwrap_or(0)
    }

    /// The stored t-table as a series at `precision`.
    pub fn series(&self, precision: Precision) -> Result<FeigenbaumSeries> {
        let coeffs = self
            .t_table
            .iter()
            .map(|(_, v)| precision.parse(v))
            .collect::<Result<Vec<_>>>()?;
        FeigenbaumSeries::new(self.z, coeffs, precision)
    }

    /// The stored values viewed as a computed result, for self-comparison.
    pub fn as_computed(&self) -> ComputedTables {
        ComputedTables {
            z: self.z,
            branch: self.branch,
            constant: self.feigenbaum_constant.clone(),
            t_table: self.t_table.clone(),
            b_table: self.b_table.clone(),
        }
    }
}

fn parse_rows(text: &str, first_line: usize) -> Result<Vec<(usize, String)>> {
    text.lines()
        .enumerate()
        .skip(first_line)
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let bad = |message: &str| Error::Parse {
                line: i + 1,
                message: message.to_string(),
            };
            let (idx, value) = line
                .split_once(char::is_whitespace)
                .ok_or_else(|| bad("expected `index value`"))?;
            let idx = idx.parse().map_err(|_| bad("index is not an integer"))?;
            let value = value.trim();
            Decimal::parse(value)?;
            Ok((idx, value.to_string()))
        })
        .collect()
}

fn build() -> Result<Vec<ReferenceEntry>> {
    let constants: Vec<(u32, Branch, String)> = CONSTANTS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let z = f[0].parse().expect("embedded z");
            let branch = f[1].parse().expect("embedded branch");
            (z, branch, f[2].to_string())
        })
        .collect();
    TABLES
        .iter()
        .map(|&(z, branch, cheb, taylor)| {
            let header = CheckpointHeader::parse(cheb.lines().next().unwrap_or(""))?;
            let feigenbaum_constant = constants
                .iter()
                .find(|(cz, cb, _)| *cz == z && *cb == branch)
                .map(|(_, _, v)| v.clone())
                .ok_or(Error::NotFound {
                    z,
                    branch: branch.to_string(),
                })?;
            Ok(ReferenceEntry {
                z,
                branch,
                d: header.d,
                feigenbaum_constant,
                t_table: parse_rows(cheb, 1)?,
                b_table: parse_rows(taylor, 0)?,
            })
        })
        .collect()
}

/// Every embedded entry.
pub fn entries() -> &'static [ReferenceEntry] {
    static ENTRIES: OnceLock<Vec<ReferenceEntry>> = OnceLock::new();
    ENTRIES.get_or_init(|| build().expect("embedded reference data is well formed"))
}

pub fn lookup(z: u32, branch: Branch) -> Result<&'static ReferenceEntry> {
    entries()
        .iter()
        .find(|e| e.z == z && e.branch == branch)
        .ok_or(Error::NotFound {
            z,
            branch: branch.to_string(),
        })
}

/// Stable digit strings produced by a solve, in reference layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComputedTables {
    pub z: u32,
    pub branch: Branch,
    pub constant: String,
    pub t_table: Vec<(usize, String)>,
    pub b_table: Vec<(usize, String)>,
}

impl From<&SolveReport> for ComputedTables {
    fn from(report: &SolveReport) -> Self {
        Self {
            z: report.spec.z(),
            branch: report.spec.branch(),
            constant: report.feigenbaum_constant.clone(),
            t_table: report.digit_report.coefficients.clone(),
            b_table: report.taylor.rows(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ItemKind {
    Constant,
    Chebyshev,
    Taylor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonItem {
    pub kind: ItemKind,
    /// Index `n` of `t_n` or `b_n`; `0` for the constant.
    pub index: usize,
    pub computed: String,
    pub reference: String,
    /// Significant digits of the common prefix.
    pub matching_digits: usize,
    /// Decimal places of the common prefix.
    pub matching_places: usize,
    pub sign_mismatch: bool,
}

impl ComparisonItem {
    pub fn label(&self) -> String {
        match self.kind {
            ItemKind::Constant => "1/lambda".to_string(),
            ItemKind::Chebyshev => format!("t_{}", self.index),
            ItemKind::Taylor => format!("b_{}", self.index),
        }
    }

    /// Digits this item must match to satisfy a request for `digits`.
    ///
    /// The constant is held to significant digits. Coefficients are held
    /// to decimal places, and never to more places than either side
    /// actually provides.
    pub fn required(&self, digits: usize) -> usize {
        match self.kind {
            ItemKind::Constant => digits.min(significant_digits(&self.reference)),
            _ => digits
                .min(decimal_places(&self.reference))
                .min(decimal_places(&self.computed)),
        }
    }

    pub fn achieved(&self) -> usize {
        match self.kind {
            ItemKind::Constant => self.matching_digits,
            _ => self.matching_places,
        }
    }

    pub fn meets(&self, digits: usize) -> bool {
        !self.sign_mismatch && self.achieved() >= self.required(digits)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub items: Vec<ComparisonItem>,
}

impl ComparisonReport {
    /// Smallest significant-digit agreement across all items.
    pub fn min_digits(&self) -> usize {
        self.items
            .iter()
            .map(|i| i.matching_digits)
            .min()
            .unwrap_or(0)
    }

    pub fn sign_mismatches(&self) -> impl Iterator<Item = &ComparisonItem> {
        self.items.iter().filter(|i| i.sign_mismatch)
    }

    pub fn constant(&self) -> Option<&ComparisonItem> {
        self.items.iter().find(|i| i.kind == ItemKind::Constant)
    }

    pub fn meets(&self, digits: usize) -> bool {
        self.items.iter().all(|i| i.meets(digits))
    }

    /// The item with the largest shortfall against `digits`.
    pub fn worst(&self, digits: usize) -> Option<&ComparisonItem> {
        self.items.iter().max_by_key(|i| {
            (
                i.sign_mismatch,
                i.required(digits).saturating_sub(i.achieved()),
            )
        })
    }
}

fn is_negative(text: &str) -> bool {
    text.trim_start().starts_with('-')
}

/// Compares two digit strings, ignoring any suffix beyond the shorter one.
pub fn compare_digits(computed: &str, reference: &str) -> (usize, usize, bool) {
    let len = computed
        .bytes()
        .zip(reference.bytes())
        .take_while(|(a, b)| a == b)
        .count();
    let prefix = &computed[..len];
    let has_digit = |s: &str| s.bytes().any(|b| b.is_ascii_digit() && b != b'0');
    let sign_mismatch = is_negative(computed) != is_negative(reference)
        && has_digit(computed)
        && has_digit(reference);
    (
        significant_digits(prefix),
        decimal_places(prefix),
        sign_mismatch,
    )
}

fn compare_rows(
    kind: ItemKind,
    computed: &[(usize, String)],
    reference: &[(usize, String)],
) -> Vec<ComparisonItem> {
    computed
        .iter()
        .filter_map(|(n, c)| {
            let (_, r) = reference.iter().find(|(m, _)| m == n)?;
            let (matching_digits, matching_places, sign_mismatch) = compare_digits(c, r);
            Some(ComparisonItem {
                kind,
                index: *n,
                computed: c.clone(),
                reference: r.clone(),
                matching_digits,
                matching_places,
                sign_mismatch,
            })
        })
        .collect()
}

/// Leading-digit agreement of every value present on both sides.
pub fn compare(computed: &ComputedTables, entry: &ReferenceEntry) -> Result<ComparisonReport> {
    if computed.z != entry.z || computed.branch != entry.branch {
        return Err(Error::domain(format!(
            "cannot compare z={} {} against reference z={} {}",
            computed.z, computed.branch, entry.z, entry.branch
        )));
    }
    let (matching_digits, matching_places, sign_mismatch) =
        compare_digits(&computed.constant, &entry.feigenbaum_constant);
    let mut items = vec![ComparisonItem {
        kind: ItemKind::Constant,
        index: 0,
        computed: computed.constant.clone(),
        reference: entry.feigenbaum_constant.clone(),
        matching_digits,
        matching_places,
        sign_mismatch,
    }];
    items.extend(compare_rows(
        ItemKind::Chebyshev,
        &computed.t_table,
        &entry.t_table,
    ));
    items.extend(compare_rows(
        ItemKind::Taylor,
        &computed.b_table,
        &entry.b_table,
    ));
    Ok(ComparisonReport { items })
}

/// Agreement of the stored tables with each other.
///
/// Every printed t-value is uncertain by one unit in its last place. That
/// uncertainty is carried through each derived quantity as an interval,
/// and a derived value is only held to the digits its interval pins down.
#[derive(Debug, Clone)]
pub struct Consistency {
    /// `(matched, available)` significant digits of `1/λ` from the stored
    /// t-table against the stored constant.
    pub constant_digits: (usize, usize),
    /// `|g(0) − 1|` from the stored t-table.
    pub g0_defect: BigReal,
    /// `Σ' ulp(t_n)`, the worst-case effect of the printed truncation.
    pub g0_bound: BigReal,
    /// `(n, matched, available)` per b-table row.
    pub taylor_digits: Vec<(usize, usize, usize)>,
}

impl Consistency {
    pub fn constant_ok(&self, slack: usize) -> bool {
        self.constant_digits.0 + slack >= self.constant_digits.1
    }

    /// `|g(0) − 1|` within `10^slack` times the truncation bound.
    pub fn g0_ok(&self, slack: usize) -> bool {
        let scale = BigReal::pow10(slack as i64, self.g0_bound.bits());
        self.g0_defect.abs() <= &self.g0_bound * &scale
    }

    pub fn taylor_ok(&self, slack: usize) -> bool {
        self.taylor_digits.iter().all(|(_, m, a)| m + slack >= *a)
    }
}

/// `(matched, available)` for a derived value known to lie in `[lo, hi]`.
fn interval_digits(value: &BigReal, lo: &BigReal, hi: &BigReal, reference: &str) -> (usize, usize) {
    let pinned = common_prefix_digits(lo, hi);
    let text = value.to_string_digits(decimal_capacity(value.bits()));
    let matched = compare_digits(&text, reference).0;
    (
        matched,
        significant_digits(reference).min(significant_digits(&pinned)),
    )
}

/// Cross-checks an entry's constant and b-table against its t-table.
pub fn consistency(entry: &ReferenceEntry) -> Result<Consistency> {
    let precision = Precision::covering(entry.max_digits() as u32 + 20);
    let bits = precision.bits();
    let series = entry.series(precision)?;
    let ulps: Vec<BigReal> = entry
        .t_table
        .iter()
        .map(|(_, v)| BigReal::pow10(-(decimal_places(v) as i64), bits))
        .collect();
    let g0_bound = ulps.iter().skip(1).fold(ulps[0].half(), |acc, u| acc + u);

    let lambda = series.lambda();
    let one = precision.int(1);
    let (lo, hi) = (&one / &(&lambda - &g0_bound), &one / &(&lambda + &g0_bound));
    let constant_digits = interval_digits(
        &series.inverse_lambda(),
        &lo,
        &hi,
        &entry.feigenbaum_constant,
    );

    let top = entry
        .b_table
        .last()
        .map(|(n, _)| *n)
        .unwrap_or(entry.z as usize);
    let table = taylor_from_cheb(&series, top)?;
    let d = entry.d as usize;
    let mut taylor_digits = Vec::new();
    for (n, reference) in &entry.b_table {
        let Some(computed) = table.get(*n) else {
            taylor_digits.push((*n, 0, significant_digits(reference)));
            continue;
        };
        let m = n / d;
        let err = (m..2 * series.order_n())
            .step_by(2)
            .map(|s| {
                let c = BigReal::from_bigint(&monomial_coefficient(s as u64, m as u64), bits);
                &c.abs() * &ulps[s / 2]
            })
            .fold(precision.zero(), |acc, e| acc + e);
        let (lo, hi) = (&computed.value - &err, &computed.value + &err);
        let (matched, available) = interval_digits(&computed.value, &lo, &hi, reference);
        taylor_digits.push((*n, matched, available));
    }

    Ok(Consistency {
        constant_digits,
        g0_defect: series.g0_defect(),
        g0_bound,
        taylor_digits,
    })
}
