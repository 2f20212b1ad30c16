//! Running the verification grid and rendering the results.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::identities::{
    Catalog, IdentityError, IdentityRecord, IdentityVerdict, Specialization, Status, Variant,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VariantFilter {
    AsPrinted,
    Corrected,
    #[default]
    Both,
}

impl VariantFilter {
    pub fn name(self) -> &'static str {
        match self {
            VariantFilter::AsPrinted => "as_printed",
            VariantFilter::Corrected => "corrected",
            VariantFilter::Both => "both",
        }
    }

    /// `corrected` keeps every record that must hold: corrected variants and
    /// statements registered only as printed.
    pub fn admits(self, record: &IdentityRecord) -> bool {
        match self {
            VariantFilter::Both => true,
            VariantFilter::AsPrinted => record.variant == Variant::AsPrinted,
            VariantFilter::Corrected => !record.disputed,
        }
    }
}

impl FromStr for VariantFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as_printed" => Ok(VariantFilter::AsPrinted),
            "corrected" => Ok(VariantFilter::Corrected),
            "both" => Ok(VariantFilter::Both),
            _ => Err(format!("unknown variant filter: {s}")),
        }
    }
}

/// Which records to run and how far.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Selection {
    /// `None` selects the whole catalog.
    pub ids: Option<Vec<String>>,
    /// Overrides each record's default upper index.
    pub max_n: Option<i64>,
    pub variant: VariantFilter,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportConfig {
    pub command: String,
    pub identities: Vec<String>,
    pub max_n: Option<i64>,
    pub variant: VariantFilter,
    pub catalog_size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SummaryStatus {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultRow {
    pub id: String,
    pub variant: Variant,
    pub range: [i64; 2],
    pub status: SummaryStatus,
    pub first_fail_n: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErratumRow {
    pub id: String,
    pub anchor: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub config: ReportConfig,
    pub results: Vec<ResultRow>,
    pub errata: Vec<ErratumRow>,
    /// Per-index verdicts, parallel to `results`.
    #[serde(skip)]
    pub details: Vec<Vec<IdentityVerdict>>,
    #[serde(skip)]
    pub runtime: Duration,
}

fn select<'a>(
    catalog: &'a Catalog,
    sel: &Selection,
) -> Result<Vec<&'a IdentityRecord>, IdentityError> {
    let mut picked: Vec<&IdentityRecord> = match &sel.ids {
        None => catalog.records().iter().collect(),
        Some(ids) => {
            let mut out = Vec::new();
            for key in ids {
                if key.contains(':') {
                    out.push(catalog.lookup(key)?);
                } else {
                    let all = catalog.variants(key);
                    if all.is_empty() {
                        return Err(IdentityError::Unknown(key.clone()));
                    }
                    out.extend(all);
                }
            }
            out
        }
    };
    picked.retain(|r| sel.variant.admits(r));
    picked.sort_by(|a, b| (&a.id, a.variant).cmp(&(&b.id, b.variant)));
    picked.dedup_by(|a, b| a.key() == b.key());
    Ok(picked)
}

fn range_of(record: &IdentityRecord, max_n: Option<i64>) -> (i64, i64) {
    let (lo, hi) = record.range;
    (lo, max_n.unwrap_or(hi))
}

fn summarize(
    record: &IdentityRecord,
    range: (i64, i64),
    verdicts: &[IdentityVerdict],
) -> ResultRow {
    let first_fail_n = verdicts
        .iter()
        .find(|v| v.status == Status::Fail)
        .map(|v| v.n);
    ResultRow {
        id: record.id.clone(),
        variant: record.variant,
        range: [range.0, range.1],
        status: if first_fail_n.is_some() {
            SummaryStatus::Fail
        } else {
            SummaryStatus::Pass
        },
        first_fail_n,
    }
}

fn erratum(catalog: &Catalog, record: &IdentityRecord, row: &ResultRow) -> Option<ErratumRow> {
    let n = row.first_fail_n?;
    if !record.disputed {
        return None;
    }
    let corrected = catalog
        .get(&record.id, Variant::Corrected)
        .map(|r| r.description.as_str())
        .unwrap_or("none registered");
    Some(ErratumRow {
        id: record.id.clone(),
        anchor: record.anchor.clone().unwrap_or_default(),
        note: format!(
            "printed form fails first at n = {n}; printed: {}; corrected: {corrected}",
            record.description
        ),
    })
}

/// Checks every selected record over its range. Cells run in parallel;
/// the output order depends only on the selection.
pub fn run(command: &str, sel: &Selection) -> Result<Report, IdentityError> {
    let catalog = Catalog::global();
    let records = select(catalog, sel)?;
    let start = Instant::now();

    // Build the shared tables once, largest first, before fanning out.
    let mut by_size: Vec<_> = records
        .iter()
        .map(|r| (range_of(r, sel.max_n).1, *r))
        .collect();
    by_size.sort_by_key(|(hi, _)| std::cmp::Reverse(*hi));
    for (hi, r) in by_size {
        // failures resurface per cell below
        let _ = r.prepare(hi, Specialization::Symbolic);
    }

    let details: Vec<Vec<IdentityVerdict>> = records
        .par_iter()
        .map(|r| {
            let (lo, hi) = range_of(r, sel.max_n);
            r.check_range(lo, hi, Specialization::Symbolic)
        })
        .collect();

    let results: Vec<ResultRow> = records
        .iter()
        .zip(&details)
        .map(|(r, v)| summarize(r, range_of(r, sel.max_n), v))
        .collect();
    let errata = records
        .iter()
        .zip(&results)
        .filter_map(|(r, row)| erratum(catalog, r, row))
        .collect();

    Ok(Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config: ReportConfig {
            command: command.to_string(),
            identities: sel.ids.clone().unwrap_or_else(|| vec!["all".to_string()]),
            max_n: sel.max_n,
            variant: sel.variant,
            catalog_size: catalog.len(),
        },
        results,
        errata,
        details,
        runtime: start.elapsed(),
    })
}

impl Report {
    /// True when every record that must hold does.
    pub fn authoritative_pass(&self) -> bool {
        let catalog = Catalog::global();
        self.results.iter().all(|row| {
            let disputed = catalog
                .get(&row.id, row.variant)
                .is_some_and(|r| r.disputed);
            disputed || row.status == SummaryStatus::Pass
        })
    }

    pub fn failed_rows(&self) -> impl Iterator<Item = &ResultRow> {
        self.results
            .iter()
            .filter(|r| r.status == SummaryStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One line per record; with `per_n`, one line per checked index too.
    pub fn to_text(&self, per_n: bool) -> String {
        let mut out = String::new();
        for (row, cells) in self.results.iter().zip(&self.details) {
            let status = match row.status {
                SummaryStatus::Pass => "pass".to_string(),
                SummaryStatus::Fail => {
                    format!("FAIL (first n = {})", row.first_fail_n.unwrap_or(-1))
                }
            };
            let skipped = cells.iter().filter(|v| v.status == Status::Skipped).count();
            let _ = write!(
                out,
                "{:<10} {:<10} [{}, {}]  {status}",
                row.id, row.variant, row.range[0], row.range[1]
            );
            if skipped > 0 {
                let _ = write!(out, "  ({skipped} skipped)");
            }
            out.push('\n');
            if per_n {
                for v in cells {
                    out.push_str(&verdict_line(v));
                    out.push('\n');
                }
            }
        }
        let failed = self.failed_rows().count();
        let _ = writeln!(
            out,
            "{} records, {} failing, {} errata, {:.2}s",
            self.results.len(),
            failed,
            self.errata.len(),
            self.runtime.as_secs_f64()
        );
        out
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(out, "- version: {}", self.version);
        let _ = writeln!(out, "- catalog size: {}", self.config.catalog_size);
        let _ = writeln!(out, "- records checked: {}", self.results.len());
        let _ = writeln!(out, "- variant filter: {}", self.config.variant.name());
        let _ = writeln!(out, "- runtime: {:.2}s\n", self.runtime.as_secs_f64());

        let _ = writeln!(out, "## Results\n");
        let _ = writeln!(out, "| id | variant | range | status | first failing n |");
        let _ = writeln!(out, "|---|---|---|---|---|");
        for row in &self.results {
            let status = match row.status {
                SummaryStatus::Pass => "pass",
                SummaryStatus::Fail => "fail",
            };
            let first = row.first_fail_n.map(|n| n.to_string()).unwrap_or_default();
            let _ = writeln!(
                out,
                "| {} | {} | [{}, {}] | {status} | {first} |",
                row.id, row.variant, row.range[0], row.range[1]
            );
        }

        let _ = writeln!(out, "\n## Errata\n");
        if self.errata.is_empty() {
            let _ = writeln!(out, "No printed statement failed in the checked ranges.");
        } else {
            let _ = writeln!(out, "| id | printed fragment | note |");
            let _ = writeln!(out, "|---|---|---|");
            for e in &self.errata {
                let _ = writeln!(
                    out,
                    "| {} | `{}` | {} |",
                    e.id,
                    e.anchor,
                    e.note.replace('|', "\\|")
                );
            }
        }
        out
    }
}

pub fn verdict_line(v: &IdentityVerdict) -> String {
    let mut line = format!(
        "  {}:{} n={} {}",
        v.id,
        v.variant,
        v.n,
        match v.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    );
    if let (Some(l), Some(r)) = (&v.lhs, &v.rhs) {
        let _ = write!(line, "  lhs = {l}  rhs = {r}");
    }
    if let Some(note) = &v.note {
        let _ = write!(line, "  ({note})");
    }
    line
}
