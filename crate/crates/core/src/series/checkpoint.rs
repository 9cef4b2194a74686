//! Line-oriented series checkpoints.
//!
//! ```text
//! z=2 d=1 N=3 digits=40
//! 0 0.5657908632724943155053234479753520221
//! 2 -0.7003915739737137871459804403324712617
//! 4 0.0173621867222441842092787099400084179
//! ```
//!
//! Values are written with `digits` significant digits (truncated toward
//! zero, trailing zeros dropped) and re-read at a precision covering
//! `digits`, so a write/read/write cycle is byte-identical.

use std::io::{BufRead, Write};

use super::FeigenbaumSeries;
use crate::bignum::{BigReal, Precision};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckpointHeader {
    pub z: u32,
    pub d: u32,
    pub order_n: usize,
    pub digits: u32,
}

impl CheckpointHeader {
    pub fn parse(line: &str) -> Result<Self> {
        let err = |message: String| Error::Parse { line: 1, message };
        let mut fields = [None; 4];
        for item in line.split_whitespace() {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, found {item:?}")))?;
            let slot = match key {
                "z" => 0,
                "d" => 1,
                "N" => 2,
                "digits" => 3,
                _ => return Err(err(format!("unknown header field {key:?}"))),
            };
            let value: u64 = value
                .parse()
                .map_err(|_| err(format!("field {key} is not an integer: {value:?}")))?;
            fields[slot] = Some(value);
        }
        let get = |i: usize, name: &str| fields[i].ok_or_else(|| err(format!("missing {name}=")));
        let header = Self {
            z: get(0, "z")? as u32,
            d: get(1, "d")? as u32,
            order_n: get(2, "N")? as usize,
            digits: get(3, "digits")? as u32,
        };
        if header.z == 0 || header.z % 2 != 0 || header.d * 2 != header.z {
            return Err(err(format!(
                "inconsistent z={} d={} (d must be z/2 with z even)",
                header.z, header.d
            )));
        }
        if header.order_n == 0 {
            return Err(err("N must be positive".into()));
        }
        Ok(header)
    }
}

impl std::fmt::Display for CheckpointHeader {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "z={} d={} N={} digits={}",
            self.z, self.d, self.order_n, self.digits
        )
    }
}

fn format_value(v: &BigReal, digits: usize) -> String {
    let mut text = v.to_full_decimal().truncate(digits).to_text();
    // drop trailing fractional zeros; the value stays exact
    if text.contains('.') && !text.contains('e') {
        let trimmed = text.trim_end_matches('0').trim_end_matches('.').len();
        text.truncate(trimmed);
    }
    text
}

pub fn write_checkpoint<W: Write>(series: &FeigenbaumSeries, mut out: W) -> Result<()> {
    let digits = series.precision().working_digits();
    let header = CheckpointHeader {
        z: series.z(),
        d: series.d(),
        order_n: series.order_n(),
        digits,
    };
    writeln!(out, "{header}")?;
    for (i, c) in series.coeffs().iter().enumerate() {
        writeln!(out, "{} {}", 2 * i, format_value(c, digits as usize))?;
    }
    Ok(())
}

/// Reads a checkpoint; the series is parsed at a precision covering the
/// header's `digits`.
pub fn read_checkpoint<R: BufRead>(input: R) -> Result<FeigenbaumSeries> {
    let mut lines = input.lines().enumerate();
    let header = match lines.next() {
        Some((_, line)) => CheckpointHeader::parse(line?.trim())?,
        None => {
            return Err(Error::Parse {
                line: 1,
                message: "empty checkpoint".into(),
            })
        }
    };
    let precision = Precision::covering(header.digits);
    let mut coeffs = Vec::with_capacity(header.order_n);
    for (idx, line) in lines {
        let line_no = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let (index, value) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| err(format!("expected '<index> <value>', found {line:?}")))?;
        let index: usize = index
            .parse()
            .map_err(|_| err(format!("bad coefficient index {index:?}")))?;
        let expected = 2 * coeffs.len();
        if index != expected {
            return Err(err(format!("expected index {expected}, found {index}")));
        }
        let value = precision
            .parse(value.trim())
            .map_err(|e| err(e.to_string()))?;
        coeffs.push(value);
    }
    if coeffs.len() != header.order_n {
        return Err(Error::Parse {
            line: coeffs.len() + 1,
            message: format!(
                "header declares N={} but {} coefficients follow",
                header.order_n,
                coeffs.len()
            ),
        });
    }
    FeigenbaumSeries::new(header.z, coeffs, precision)
}

impl FeigenbaumSeries {
    pub fn to_checkpoint_string(&self) -> String {
        let mut buf = Vec::new();
        write_checkpoint(self, &mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("ascii output")
    }

    pub fn from_checkpoint_str(text: &str) -> Result<Self> {
        read_checkpoint(text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_round_trip() {
        let h = CheckpointHeader::parse("z=4 d=2 N=7 digits=50").unwrap();
        assert_eq!(h.to_string(), "z=4 d=2 N=7 digits=50");
        assert!(CheckpointHeader::parse("z=4 d=1 N=7 digits=50").is_err());
        assert!(CheckpointHeader::parse("z=3 d=1 N=7 digits=50").is_err());
        assert!(CheckpointHeader::parse("z=4 d=2 digits=50").is_err());
        assert!(CheckpointHeader::parse("z=4 d=2 N=x digits=50").is_err());
    }

    #[test]
    fn write_read_write_is_identical() {
        let text =
            "z=2 d=1 N=3 digits=30\n0 0.5657908632724943155053234479753520221\n2 -0.7\n4 1.5e-70\n";
        let s = FeigenbaumSeries::from_checkpoint_str(text).unwrap();
        let once = s.to_checkpoint_string();
        let twice = FeigenbaumSeries::from_checkpoint_str(&once)
            .unwrap()
            .to_checkpoint_string();
        assert_eq!(once, twice);
        assert!(once.contains("\n2 -0.7\n"));
        assert!(once.contains("\n0 0.565790863272494315505323447975\n"));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let bad_index = "z=2 d=1 N=2 digits=30\n0 1\n4 2\n";
        match FeigenbaumSeries::from_checkpoint_str(bad_index) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let bad_value = "z=2 d=1 N=2 digits=30\n0 1\n2 abc\n";
        match FeigenbaumSeries::from_checkpoint_str(bad_value) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        let short = "z=2 d=1 N=3 digits=30\n0 1\n2 2\n";
        assert!(matches!(
            FeigenbaumSeries::from_checkpoint_str(short),
            Err(Error::Parse { .. })
        ));
        assert!(FeigenbaumSeries::from_checkpoint_str("").is_err());
    }
}
