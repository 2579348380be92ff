//! Per-prime reports, their JSON, CSV and Markdown renderings, the cache
//! files behind them and the comparison against the published tables.

mod cache;
mod tables;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub use cache::{load_or_compute_sp, load_or_compute_ssp2, CacheFile, CacheKind, CacheStatus};
pub use tables::{
    compare_row, parse_range, parse_tables, rows_in, CountRow, RowComparison, RowStatus,
    KNOWN_ANOMALIES, PRINTED_EXCEPTIONS, TABLES_FIXTURE,
};

use crate::error::{Error, Result};
use crate::field::FieldTowerCtx;
use crate::genus5::{enumerate_genus5, Checks, CurveRecord, Monitors, TypeCounts, TypeLabel};
use crate::ssp2::SeedRecord;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Type columns in table order, then `All`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Counts(pub TypeCounts);

impl Counts {
    pub fn all(&self) -> usize {
        self.0.all()
    }
}

impl Serialize for Counts {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0 .0.len() + 1))?;
        for t in TypeLabel::ALL {
            if let Some(n) = self.0.get(t) {
                m.serialize_entry(t.as_str(), &n)?;
            }
        }
        m.serialize_entry("All", &self.all())?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for Counts {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, usize>::deserialize(d)?;
        let mut counts = BTreeMap::new();
        let mut all = None;
        for (k, v) in raw {
            if k == "All" {
                all = Some(v);
            } else {
                counts.insert(k.parse::<TypeLabel>().map_err(D::Error::custom)?, v);
            }
        }
        let c = Counts(TypeCounts(counts));
        match all {
            Some(a) if a == c.all() => Ok(c),
            Some(a) => Err(D::Error::custom(format!(
                "All = {a} but the columns sum to {}",
                c.all()
            ))),
            None => Err(D::Error::missing_field("All")),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completeness {
    /// Every class came from the full H_{a,b,c} search and every cross-check held.
    Complete,
    /// Only the families ran, since Type 4-1 was not requested.
    FamiliesOnly,
    /// At least one cross-check between independent paths failed.
    ChecksFailed,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportMeta {
    pub version: String,
    pub completeness: Completeness,
    pub supersingular_j: usize,
    /// Absent when the genus-2 catalog was not needed.
    pub ssp2_jacobians: Option<usize>,
    pub seeds: Vec<SeedRecord>,
    pub monitors: Monitors,
    pub checks: Checks,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ReportDoc {
    pub p: u64,
    pub counts: Counts,
    pub records: Vec<CurveRecord>,
    pub meta: ReportMeta,
}

/// Wall-clock times and cache outcomes, kept out of the report so that
/// reports are reproducible byte for byte.
#[derive(Clone, Debug)]
pub struct RunInfo {
    pub sp: (Duration, CacheStatus),
    pub ssp2: Option<(Duration, CacheStatus)>,
    pub genus5: Duration,
}

impl fmt::Display for RunInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S_p {:.3?} ({:?})", self.sp.0, self.sp.1)?;
        if let Some((t, c)) = self.ssp2 {
            write!(f, ", SSp2 {t:.3?} ({c:?})")?;
        }
        write!(f, ", genus 5 {:.3?}", self.genus5)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Format {
    Json,
    Csv,
    Md,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "md" => Ok(Format::Md),
            _ => Err(Error::RejectedInput(format!(
                "unknown format {s:?}; expected json, csv or md"
            ))),
        }
    }
}

/// Parses a comma-separated type list such as `4-1,7`.
pub fn parse_types(s: &str) -> Result<BTreeSet<TypeLabel>> {
    let set: BTreeSet<TypeLabel> = s
        .split(',')
        .map(|t| t.trim().parse())
        .collect::<Result<_>>()?;
    if set.is_empty() {
        return Err(Error::RejectedInput("empty type list".into()));
    }
    Ok(set)
}

/// Computes the report for p, reading and filling caches in `cache_dir`.
pub fn build_report(
    p: u64,
    types: &BTreeSet<TypeLabel>,
    cache_dir: Option<&Path>,
) -> Result<(ReportDoc, RunInfo)> {
    let k = FieldTowerCtx::new(p)?;
    let t = Instant::now();
    let (s, sp_cache) = load_or_compute_sp(&k, cache_dir)?;
    let sp = (t.elapsed(), sp_cache);
    let (catalog, ssp2) = if types.contains(&TypeLabel::T4_1) {
        let t = Instant::now();
        let (c, status) = load_or_compute_ssp2(&k, &s, cache_dir)?;
        (Some(c), Some((t.elapsed(), status)))
    } else {
        (None, None)
    };
    let t = Instant::now();
    let e = enumerate_genus5(&k, &s, catalog.as_ref(), types)?;
    let info = RunInfo {
        sp,
        ssp2,
        genus5: t.elapsed(),
    };
    let completeness = if !e.checks.all_hold() {
        Completeness::ChecksFailed
    } else if catalog.is_some() {
        Completeness::Complete
    } else {
        Completeness::FamiliesOnly
    };
    let meta = ReportMeta {
        version: VERSION.to_string(),
        completeness,
        supersingular_j: s.len(),
        ssp2_jacobians: catalog.as_ref().map(|c| c.len()),
        seeds: catalog.map(|c| c.seeds).unwrap_or_default(),
        monitors: e.monitors,
        checks: e.checks,
    };
    Ok((
        ReportDoc {
            p,
            counts: Counts(e.counts),
            records: e.records,
            meta,
        },
        info,
    ))
}

impl ReportDoc {
    pub fn row(&self) -> CountRow {
        CountRow::from_counts(self.p, &self.counts.0)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(self.to_json()),
            Format::Csv => self.to_csv(),
            Format::Md => Ok(self.to_markdown()),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Header `p,t41,t7,t9,t10,t11,t12,t15,all`; columns that were not
    /// requested are left empty.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["p"];
        header.extend(TypeLabel::ALL.iter().map(|t| t.csv_column()));
        header.push("all");
        let mut row = vec![self.p.to_string()];
        row.extend(TypeLabel::ALL.iter().map(|&t| {
            self.counts
                .0
                .get(t)
                .map(|n| n.to_string())
                .unwrap_or_default()
        }));
        row.push(self.counts.all().to_string());
        let to_err = |e: csv::Error| Error::Io(std::io::Error::other(e));
        w.write_record(&header).map_err(to_err)?;
        w.write_record(&row).map_err(to_err)?;
        let bytes = w
            .into_inner()
            .map_err(|e| Error::Io(std::io::Error::other(e.to_string())))?;
        Ok(String::from_utf8(bytes).expect("ASCII"))
    }

    /// The count row in table layout, then one line per record.
    pub fn to_markdown(&self) -> String {
        let cols: Vec<String> = TypeLabel::ALL
            .iter()
            .map(|&t| {
                self.counts
                    .0
                    .get(t)
                    .map_or("-".to_string(), |n| n.to_string())
            })
            .collect();
        let names: Vec<&str> = TypeLabel::ALL.iter().map(|t| t.as_str()).collect();
        let mut out = format!(
            "p | {} | All\n--- | --- | ---\n{} | {} | {}\n",
            names.join(" "),
            self.p,
            cols.join(" "),
            self.counts.all()
        );
        if !self.records.is_empty() {
            out.push_str("\ntype | aut | params | model\n--- | --- | --- | ---\n");
            for r in &self.records {
                let params: Vec<String> =
                    r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let params = if params.is_empty() {
                    "-".to_string()
                } else {
                    params.join(", ")
                };
                out.push_str(&format!(
                    "{} | {} | {} | `{}`\n",
                    r.type_label, r.aut, params, r.model
                ));
            }
        }
        out
    }
}

/// Recomputes every fixture row in `range`, calling `each` as rows finish.
pub fn verify_tables(
    rows: &[CountRow],
    range: &RangeInclusive<u64>,
    cache_dir: Option<&Path>,
    mut each: impl FnMut(&RowComparison, &ReportDoc, &RunInfo),
) -> Result<Vec<RowComparison>> {
    let types: BTreeSet<TypeLabel> = TypeLabel::ALL.into_iter().collect();
    let mut out = Vec::new();
    for printed in rows_in(rows, range) {
        let (doc, info) = build_report(printed.p, &types, cache_dir)?;
        let cmp = compare_row(printed, doc.row());
        each(&cmp, &doc, &info);
        out.push(cmp);
    }
    Ok(out)
}
