//! Plain-text sequence tables ("b-files").
//!
//! One `index value` pair per line separated by a single space, indices
//! strictly increasing. Lines starting with `#` are comments and blank lines
//! are skipped.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BFile {
    entries: Vec<(i64, BigInt)>,
}

fn is_signed_int(s: &str) -> bool {
    let digits = s.strip_prefix('-').unwrap_or(s);
    !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
}

impl BFile {
    pub fn new(entries: Vec<(i64, BigInt)>) -> Result<Self> {
        if let Some(w) = entries.windows(2).find(|w| w[0].0 >= w[1].0) {
            return Err(Error::invalid(format!(
                "b-file indices must increase strictly ({} then {})",
                w[0].0, w[1].0
            )));
        }
        Ok(BFile { entries })
    }

    pub fn entries(&self) -> &[(i64, BigInt)] {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|e| e.0)
    }

    pub fn last_index(&self) -> Option<i64> {
        self.entries.last().map(|e| e.0)
    }

    pub fn get(&self, index: i64) -> Option<&BigInt> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// Renders the table with an optional `#` comment header.
    pub fn render(&self, header: &str) -> String {
        let mut out = String::new();
        for line in header.lines() {
            let _ = writeln!(out, "# {line}");
        }
        for (i, v) in &self.entries {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }
}

impl FromStr for BFile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_bfile(s)
    }
}

pub fn parse_bfile(text: &str) -> Result<BFile> {
    let mut entries: Vec<(i64, BigInt)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (idx, value) = line
            .split_once(' ')
            .ok_or_else(|| err(format!("expected `index value`, got {line:?}")))?;
        if !is_signed_int(idx) || !is_signed_int(value) {
            return Err(err(format!(
                "expected two integers separated by one space, got {line:?}"
            )));
        }
        let idx: i64 = idx
            .parse()
            .map_err(|_| err(format!("index {idx} out of range")))?;
        let value: BigInt = value
            .parse()
            .map_err(|_| err(format!("bad value {value:?}")))?;
        if let Some(&(prev, _)) = entries.last() {
            if idx <= prev {
                return Err(err(format!("index {idx} does not increase past {prev}")));
            }
        }
        entries.push((idx, value));
    }
    Ok(BFile { entries })
}

/// Outcome of comparing computed terms against a b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    /// Indices present on both sides.
    pub overlap: usize,
    /// First differing b-file index with `(b-file value, computed value)`.
    pub first_mismatch: Option<(i64, BigInt, BigInt)>,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.overlap > 0 && self.first_mismatch.is_none()
    }
}

/// Compares `computed` (pairs of b-file index and value) against the table
/// on the indices both contain.
pub fn compare(table: &BFile, computed: &[(i64, BigInt)]) -> Comparison {
    let mut overlap = 0;
    let mut first_mismatch = None;
    for (idx, value) in computed {
        if let Some(expected) = table.get(*idx) {
            overlap += 1;
            if expected != value && first_mismatch.is_none() {
                first_mismatch = Some((*idx, expected.clone(), value.clone()));
            }
        }
    }
    Comparison {
        overlap,
        first_mismatch,
    }
}
