//! Parsers for command-line values: integer lists and index ranges.

use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::{Error, Result};

fn parse_err(message: String) -> Error {
    Error::Parse { line: 1, message }
}

/// Comma-separated integers, e.g. `1,0,-6`. Whitespace around entries is
/// ignored.
pub fn parse_int_list(s: &str) -> Result<Vec<BigInt>> {
    if s.trim().is_empty() {
        return Err(parse_err("empty integer list".into()));
    }
    s.split(',')
        .map(|item| {
            let item = item.trim();
            let digits = item.strip_prefix('-').unwrap_or(item);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(format!("{item:?} is not an integer")));
            }
            BigInt::from_str(item).map_err(|e| parse_err(e.to_string()))
        })
        .collect()
}

/// Inclusive range `a..b`, `a..=b` or a single value `a`. Empty ranges are
/// rejected.
pub fn parse_range<T>(s: &str) -> Result<RangeInclusive<T>>
where
    T: FromStr + PartialOrd + Copy + std::fmt::Display,
{
    let num = |t: &str| {
        t.trim()
            .parse::<T>()
            .map_err(|_| parse_err(format!("{t:?} is not a valid bound")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(parse_err(format!("empty range {lo}..{hi}")));
    }
    Ok(lo..=hi)
}
