//! The count table for all partitions of n: rows are partitions, columns are
//! the largest value m, entries are |QYT_{=m}|.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::json;

use qyt_core::error::Result;
use qyt_core::formula::qyt_count_with_method;
use qyt_core::tableau::{count_qyt_brute, qyt_max_entry_range};
use qyt_core::{partitions_of, CountMode, Partition};

pub struct CountTable {
    n: usize,
    rows: Vec<TableRow>,
}

pub struct TableRow {
    shape: Partition,
    counts: Vec<BigUint>, // indexed by m - 1, length n
    method: &'static str,
}

/// Rows in the order that pairs each shape with its conjugate mirrored about
/// the middle: shapes preceding their conjugate in reverse-lexicographic
/// order first, then the self-conjugate shapes, then the conjugates of the
/// first block in reverse. Reading the table bottom-up right-to-left then
/// reproduces it top-down left-to-right.
pub fn figure_row_order(n: usize) -> Vec<Partition> {
    let all = partitions_of(n);
    let mut upper = Vec::new();
    let mut middle = Vec::new();
    for p in all {
        let c = p.conjugate();
        if p.parts() > c.parts() {
            upper.push(p);
        } else if p == c {
            middle.push(p);
        }
    }
    let lower: Vec<Partition> = upper.iter().rev().map(|p| p.conjugate()).collect();
    upper.into_iter().chain(middle).chain(lower).collect()
}

/// Count every (shape, m) cell, closed forms where Durfee size <= 2 and
/// budgeted brute force beyond.
pub fn build(n: usize, budget: u64) -> Result<CountTable> {
    let shapes = figure_row_order(n);
    let rows: Result<Vec<TableRow>> = shapes
        .into_par_iter()
        .map(|shape| {
            let (lo, hi) = qyt_max_entry_range(&shape).unwrap_or((1, 0));
            let brute = shape.durfee_size() > 2;
            let mut counts = vec![BigUint::from(0u32); n];
            for m in lo..=hi {
                counts[(m - 1) as usize] = if brute {
                    count_qyt_brute(&shape, CountMode::Eq(m), Some(budget))?
                } else {
                    qyt_count_with_method(&shape, CountMode::Eq(m)).0
                };
            }
            Ok(TableRow {
                shape,
                counts,
                method: if brute { "brute-force" } else { "formula" },
            })
        })
        .collect();
    Ok(CountTable { n, rows: rows? })
}

fn paren_label(shape: &Partition) -> String {
    let inner = shape
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("({inner})")
}

impl CountTable {
    /// Markdown with blank cells for zero entries, matching the usual way the
    /// table is printed.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str("| shape |");
        for m in 1..=self.n {
            out.push_str(&format!(" {m} |"));
        }
        out.push('\n');
        out.push_str(&"|---".repeat(self.n + 1));
        out.push_str("|\n");
        for row in &self.rows {
            out.push_str(&format!("| {} |", paren_label(&row.shape)));
            for c in &row.counts {
                if c.to_string() == "0" {
                    out.push_str("  |");
                } else {
                    out.push_str(&format!(" {c} |"));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Long-form CSV of the nonzero cells: shape, m, count, method.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("shape,m,count,method\n");
        for row in &self.rows {
            for (i, c) in row.counts.iter().enumerate() {
                if c.to_string() != "0" {
                    out.push_str(&format!(
                        "\"{}\",{},{},{}\n",
                        row.shape,
                        i + 1,
                        c,
                        row.method
                    ));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<_> = self
            .rows
            .iter()
            .map(|row| {
                json!({
                    "shape": row.shape.to_string(),
                    "counts": row.counts.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "method": row.method,
                })
            })
            .collect();
        json!({
            "n": self.n,
            "m": (1..=self.n).collect::<Vec<_>>(),
            "rows": rows,
        })
        .to_string()
    }
}
