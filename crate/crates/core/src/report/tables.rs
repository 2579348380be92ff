//! The published count tables and the comparison against recomputed rows.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genus5::{TypeCounts, TypeLabel};

/// The published count tables, one `p t41 t7 t9 t10 t11 t12 t15 all` row per prime.
pub const TABLES_FIXTURE: &str = include_str!("../../fixtures/tables.txt");

/// Rows whose printed type columns do not add up to the printed total.
pub const KNOWN_ANOMALIES: [u64; 3] = [41, 43, 607];

/// Primes listed as having no superspecial curve with C2³ in its automorphism group.
pub const PRINTED_EXCEPTIONS: [u64; 27] = [
    37, 41, 43, 53, 61, 67, 73, 97, 181, 193, 197, 233, 241, 277, 313, 331, 373, 421, 541, 571,
    613, 643, 673, 709, 769, 877, 977,
];

/// Seven type columns in [`TypeLabel::ALL`] order, then the total.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CountRow {
    pub p: u64,
    pub columns: [usize; 7],
    pub all: usize,
}

impl CountRow {
    pub fn from_counts(p: u64, c: &TypeCounts) -> Self {
        CountRow {
            p,
            columns: TypeLabel::ALL.map(|t| c.get(t).unwrap_or(0)),
            all: c.all(),
        }
    }

    /// Whether the printed columns add up to the printed total.
    pub fn is_consistent(&self) -> bool {
        self.columns.iter().sum::<usize>() == self.all
    }

    pub fn get(&self, t: TypeLabel) -> usize {
        self.columns[TypeLabel::ALL.iter().position(|&x| x == t).expect("listed")]
    }
}

/// `23 | 0 0 0 0 1 0 1 | 2`
impl fmt::Display for CountRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self.columns.iter().map(usize::to_string).collect();
        write!(f, "{} | {} | {}", self.p, cols.join(" "), self.all)
    }
}

pub fn parse_tables(text: &str) -> Result<Vec<CountRow>> {
    let mut rows = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let nums: Vec<u64> = line
            .split_whitespace()
            .map(|x| {
                x.parse().map_err(|_| {
                    Error::Parse(format!("fixture line {}: {x:?} is not a number", n + 1))
                })
            })
            .collect::<Result<_>>()?;
        if nums.len() != 9 {
            return Err(Error::Parse(format!(
                "fixture line {} has {} fields, expected 9",
                n + 1,
                nums.len()
            )));
        }
        let columns = std::array::from_fn(|i| nums[i + 1] as usize);
        rows.push(CountRow {
            p: nums[0],
            columns,
            all: nums[8] as usize,
        });
    }
    Ok(rows)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RowStatus {
    Match,
    Mismatch,
    /// The printed row contradicts itself; the recount is reported instead.
    PaperInconsistent,
}

impl fmt::Display for RowStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
            RowStatus::PaperInconsistent => "PAPER_INCONSISTENT",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct RowComparison {
    pub p: u64,
    pub status: RowStatus,
    pub printed: CountRow,
    pub computed: CountRow,
}

impl fmt::Display for RowComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            RowStatus::Match => write!(f, "{} {}", self.status, self.computed),
            _ => write!(
                f,
                "{} printed {} computed {}",
                self.status, self.printed, self.computed
            ),
        }
    }
}

pub fn compare_row(printed: CountRow, computed: CountRow) -> RowComparison {
    let status = if printed == computed {
        RowStatus::Match
    } else if KNOWN_ANOMALIES.contains(&printed.p) {
        RowStatus::PaperInconsistent
    } else {
        RowStatus::Mismatch
    };
    RowComparison {
        p: printed.p,
        status,
        printed,
        computed,
    }
}

/// Fixture rows whose p lies in `range`.
pub fn rows_in(rows: &[CountRow], range: &RangeInclusive<u64>) -> Vec<CountRow> {
    rows.iter()
        .filter(|r| range.contains(&r.p))
        .copied()
        .collect()
}

/// Parses `A..B` (inclusive of both ends) or a single prime.
pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>> {
    let bad = || Error::RejectedInput(format!("range {s:?} is not of the form A..B"));
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a.trim(), b.trim_start_matches('=').trim()),
        None => (s.trim(), s.trim()),
    };
    let a: u64 = a.parse().map_err(|_| bad())?;
    let b: u64 = b.parse().map_err(|_| bad())?;
    Ok(a..=b)
}
