use std::fs;
use std::io::{self, Write};
use std::path::Path;

use feigenbaum::bignum::{Decimal, Precision};
use feigenbaum::refdata::{self, ComputedTables, ItemKind};
use feigenbaum::series::{taylor_from_cheb, FeigenbaumSeries};
use feigenbaum::solver::{solve_with_continuation, BranchSpec, ContinuationConfig, SolveReport};
use feigenbaum::Error;

use crate::layout::{render_rows, unwrap_text, Layout};
use crate::SolveArgs;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Solver(Error),
    #[error("{0}")]
    Incomplete(String),
    #[error("{0}")]
    Mismatch(String),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Solver(_) | CliError::Incomplete(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Io { .. } => 5,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Precision(_) | Error::Domain(_) | Error::NotFound { .. } => {
                CliError::Usage(e.to_string())
            }
            Error::Io(_) | Error::Parse { .. } | Error::Decimal { .. } => CliError::Io {
                context: "output".into(),
                source: e,
            },
            _ => CliError::Solver(e),
        }
    }
}

fn io_error(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |e| CliError::Io {
        context: path.display().to_string(),
        source: Error::Io(e),
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(io_error(path))
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(path) => write_file(path, contents),
        None => io::stdout()
            .write_all(contents.as_bytes())
            .map_err(|e| CliError::from(Error::Io(e))),
    }
}

fn load_checkpoint(path: &Path) -> Result<FeigenbaumSeries, CliError> {
    let text = fs::read_to_string(path).map_err(io_error(path))?;
    FeigenbaumSeries::from_checkpoint_str(&unwrap_text(&text)).map_err(|source| CliError::Io {
        context: path.display().to_string(),
        source,
    })
}

fn run_solver(args: &SolveArgs) -> Result<SolveReport, CliError> {
    let spec = BranchSpec::new(args.branch.z, args.branch.branch)?;
    let precision = Precision::with_target(args.digits)?;
    let config = ContinuationConfig {
        initial_n: args.initial_order,
        max_n: args.max_order,
        ..ContinuationConfig::default()
    };
    Ok(solve_with_continuation(&spec, precision, &config)?)
}

fn summary(report: &SolveReport) -> String {
    format!(
        "z={} branch={} 1/lambda={}",
        report.spec.z(),
        report.spec.branch(),
        report.feigenbaum_constant
    )
}

pub fn solve(args: &SolveArgs, out: &Path, layout: Layout) -> Result<(), CliError> {
    let report = run_solver(args)?;
    fs::create_dir_all(out).map_err(io_error(out))?;
    let stem = format!("z{}-{}", report.spec.z(), report.spec.branch());
    let file = |ext: &str| out.join(format!("{stem}.{ext}"));

    write_file(&file("cheb"), &report.series.to_checkpoint_string())?;
    write_file(
        &file("t"),
        &render_rows(&report.digit_report.coefficients, layout),
    )?;
    write_file(&file("b"), &render_rows(&report.taylor.rows(), layout))?;
    write_file(
        &file("constant"),
        &format!("{}\n", report.feigenbaum_constant),
    )?;

    println!("{}", summary(&report));
    if !report.reached_target {
        return Err(CliError::Incomplete(format!(
            "order limit {} reached with {} of {} requested digits",
            args.max_order, report.stable_digits, args.digits
        )));
    }
    Ok(())
}

pub fn convert(
    checkpoint: &Path,
    max_exponent: Option<usize>,
    out: Option<&Path>,
    layout: Layout,
) -> Result<(), CliError> {
    let series = load_checkpoint(checkpoint)?;
    let max_exponent = max_exponent.unwrap_or_else(|| series.max_exponent());
    let table = taylor_from_cheb(&series, max_exponent)?;
    let rows: Vec<(usize, String)> = table
        .entries
        .iter()
        .filter(|e| !e.value.is_zero())
        .map(|e| (e.exponent, e.stable_digits.clone()))
        .collect();
    emit(out, &render_rows(&rows, layout))
}

pub fn verify(args: &SolveArgs) -> Result<(), CliError> {
    BranchSpec::new(args.branch.z, args.branch.branch)?;
    let entry = refdata::lookup(args.branch.z, args.branch.branch)?;
    let report = run_solver(args)?;
    let comparison = refdata::compare(&ComputedTables::from(&report), entry)?;
    println!("{}", summary(&report));
    let digits = args.digits as usize;
    if let Some(c) = comparison.constant() {
        println!(
            "constant matches {} digits of {}",
            c.matching_digits, c.reference
        );
    }
    let count = |kind| comparison.items.iter().filter(|i| i.kind == kind).count();
    println!(
        "compared 1/lambda, {} t_n and {} b_n",
        count(ItemKind::Chebyshev),
        count(ItemKind::Taylor)
    );
    if comparison.meets(digits) {
        return Ok(());
    }
    let worst = comparison
        .worst(digits)
        .map(|w| {
            format!(
                "{}: computed {} vs published {} ({} of {} required digits{})",
                w.label(),
                w.computed,
                w.reference,
                w.achieved(),
                w.required(digits),
                if w.sign_mismatch {
                    ", sign differs"
                } else {
                    ""
                }
            )
        })
        .unwrap_or_default();
    Err(CliError::Mismatch(format!(
        "verification failed; worst {worst}"
    )))
}

pub fn sample(checkpoint: &Path, count: usize, out: Option<&Path>) -> Result<(), CliError> {
    if count < 2 {
        return Err(CliError::Usage(format!(
            "--samples must be at least 2, got {count}"
        )));
    }
    let series = load_checkpoint(checkpoint)?;
    let p = series.precision();
    let shown = (p.working_digits() - p.guard_digits().min(10)) as usize;
    let text = |v: &feigenbaum::bignum::BigReal| -> String {
        let d: Decimal = v.to_decimal(shown);
        let fixed = d.to_fixed();
        if fixed.contains('.') {
            fixed
                .trim_end_matches('0')
                .trim_end_matches('.')
                .to_string()
        } else {
            fixed
        }
    };
    let mut body = String::new();
    let last = p.int(count as i64 - 1);
    for i in 0..count {
        let x = p.int(i as i64) / &last;
        body.push_str(&format!("{} {}\n", text(&x), text(&series.eval_g(&x))));
    }
    emit(out, &body)
}
