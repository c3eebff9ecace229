//! Term listings in plain, CSV and JSON form.
//!
//! JSON output is an array of `{"n": <integer>, "value": "<decimal>"}`;
//! values are strings so arbitrary precision survives any JSON reader.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Row {
    n: i64,
    value: String,
}

pub fn emit(format: Format, terms: &[(i64, BigInt)]) -> String {
    match format {
        Format::Plain => terms.iter().fold(String::new(), |mut s, (_, v)| {
            let _ = writeln!(s, "{v}");
            s
        }),
        Format::Csv => terms
            .iter()
            .fold(String::from("n,value\n"), |mut s, (n, v)| {
                let _ = writeln!(s, "{n},{v}");
                s
            }),
        Format::Json => {
            let mut s = emit_json(terms);
            s.push('\n');
            s
        }
    }
}

pub fn emit_json(terms: &[(i64, BigInt)]) -> String {
    let rows: Vec<Row> = terms
        .iter()
        .map(|(n, v)| Row {
            n: *n,
            value: v.to_string(),
        })
        .collect();
    serde_json::to_string(&rows).expect("rows serialize")
}

fn is_decimal(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

/// Parses the JSON form produced by [`emit_json`].
pub fn parse_json(text: &str) -> Result<Vec<(i64, BigInt)>> {
    let rows: Vec<Row> = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            if !is_decimal(&row.value) {
                return Err(Error::Parse {
                    line: 1,
                    message: format!("row {i}: value {:?} is not a decimal integer", row.value),
                });
            }
            let v = BigInt::from_str(&row.value).map_err(|e| Error::Parse {
                line: 1,
                message: format!("row {i}: {e}"),
            })?;
            Ok((row.n, v))
        })
        .collect()
}
