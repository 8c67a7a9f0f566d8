//! The three reference tables: S-partitions and doubly marked partitions
//! of 4, and Δ applied to the marked partitions of 4 and of 5.

use std::cmp::Reverse;
use std::fmt::Write as _;

use serde::Serialize;
use sptlab_core::bijection::delta_table;
use sptlab_core::rank::residue;
use sptlab_core::spt::{s_partitions, DEFAULT_S_PARTITION_CAP};
use sptlab_core::{ClassMember, DoublyMarkedPartition, SPartition};

use crate::{CliError, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableId {
    SPartitions,
    CaseFour,
    CaseFive,
}

impl std::str::FromStr for TableId {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "2.1" => Ok(TableId::SPartitions),
            "3.1" => Ok(TableId::CaseFour),
            "3.2" => Ok(TableId::CaseFive),
            other => Err(CliError::Parse(format!(
                "unknown table {other:?}; expected one of 2.1, 3.1, 3.2"
            ))),
        }
    }
}

#[derive(Serialize)]
struct SRow {
    s_partition: String,
    sign: i64,
    spt_crank: i64,
}

#[derive(Serialize)]
struct DmpRow {
    doubly_marked_partition: String,
    spt_crank: i64,
}

#[derive(Serialize)]
struct DeltaRow {
    marked_partition: String,
    doubly_marked_partition: String,
    spt_crank: i64,
    residue: u64,
}

/// S-partitions of `n` grouped by crank (descending), then by the smallest
/// part and weight of π1, then longest and lexicographically largest π2.
pub fn sorted_s_partitions(n: usize) -> Result<Vec<SPartition>, CliError> {
    let mut rows = s_partitions(n, DEFAULT_S_PARTITION_CAP)?;
    rows.sort_by_key(|pi| {
        (
            Reverse(pi.crank()),
            pi.pi1().smallest_part(),
            pi.pi1().weight(),
            Reverse(pi.pi2().len()),
            Reverse(pi.pi2().clone()),
            Reverse(pi.pi3().clone()),
        )
    });
    Ok(rows)
}

/// Doubly marked partitions of `n` as Δ images, stably sorted by crank.
pub fn sorted_doubly_marked(n: usize) -> Result<Vec<DoublyMarkedPartition>, CliError> {
    let mut members = delta_table(n)?;
    members.sort_by_key(|m| Reverse(m.crank));
    Ok(members.into_iter().map(|m| m.dmp).collect())
}

fn signed(v: i64) -> String {
    if v > 0 {
        format!("+{v}")
    } else {
        v.to_string()
    }
}

pub fn render(which: TableId, format: Format) -> Result<String, CliError> {
    match which {
        TableId::SPartitions => render_s_table(format),
        TableId::CaseFour => render_delta_table(4, 5, format),
        TableId::CaseFive => render_delta_table(5, 7, format),
    }
}

fn render_s_table(format: Format) -> Result<String, CliError> {
    let s_rows: Vec<SRow> = sorted_s_partitions(4)?
        .iter()
        .map(|pi| SRow {
            s_partition: pi.to_string(),
            sign: pi.sign(),
            spt_crank: pi.crank(),
        })
        .collect();
    let d_rows: Vec<DmpRow> = sorted_doubly_marked(4)?
        .iter()
        .map(|d| DmpRow {
            doubly_marked_partition: d.to_string(),
            spt_crank: d.crank(),
        })
        .collect();
    let mut out = String::new();
    match format {
        Format::Tsv => {
            out.push_str("s_partition\tsign\tspt_crank\n");
            for r in &s_rows {
                writeln!(
                    out,
                    "{}\t{}\t{}",
                    r.s_partition,
                    signed(r.sign),
                    r.spt_crank
                )
                .unwrap();
            }
            out.push('\n');
            out.push_str("doubly_marked_partition\tspt_crank\n");
            for r in &d_rows {
                writeln!(out, "{}\t{}", r.doubly_marked_partition, r.spt_crank).unwrap();
            }
        }
        Format::Json => {
            let value = serde_json::json!({
                "table": "2.1",
                "n": 4,
                "s_partitions": s_rows,
                "doubly_marked_partitions": d_rows,
            });
            out = serde_json::to_string_pretty(&value).unwrap();
            out.push('\n');
        }
        Format::Pretty => {
            let width = s_rows
                .iter()
                .map(|r| r.s_partition.chars().count())
                .max()
                .unwrap_or(0);
            out.push_str("S-partitions of 4\n");
            for r in &s_rows {
                let pad = width - r.s_partition.chars().count();
                writeln!(
                    out,
                    "  {}{}  {:>2}  crank {:>2}",
                    r.s_partition,
                    " ".repeat(pad),
                    signed(r.sign),
                    r.spt_crank
                )
                .unwrap();
            }
            out.push_str("\nDoubly marked partitions of 4\n");
            for r in &d_rows {
                writeln!(
                    out,
                    "  {:<16}  crank {:>2}",
                    r.doubly_marked_partition, r.spt_crank
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}

fn delta_rows(members: &[ClassMember], modulus: u64) -> Vec<DeltaRow> {
    members
        .iter()
        .map(|m| DeltaRow {
            marked_partition: m.marked.to_string(),
            doubly_marked_partition: m.dmp.to_string(),
            spt_crank: m.crank,
            residue: residue(m.crank, modulus),
        })
        .collect()
}

fn render_delta_table(n: usize, modulus: u64, format: Format) -> Result<String, CliError> {
    let rows = delta_rows(&delta_table(n)?, modulus);
    let mut out = String::new();
    match format {
        Format::Tsv => {
            writeln!(
                out,
                "marked_partition\tdoubly_marked_partition\tspt_crank\tspt_crank_mod_{modulus}"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    r.marked_partition, r.doubly_marked_partition, r.spt_crank, r.residue
                )
                .unwrap();
            }
        }
        Format::Json => {
            let value = serde_json::json!({
                "n": n,
                "modulus": modulus,
                "rows": rows,
            });
            out = serde_json::to_string_pretty(&value).unwrap();
            out.push('\n');
        }
        Format::Pretty => {
            writeln!(
                out,
                "Δ on the marked partitions of {n}, cranks mod {modulus}"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "  {:<18} -> {:<20} crank {:>2}  ≡ {}",
                    r.marked_partition, r.doubly_marked_partition, r.spt_crank, r.residue
                )
                .unwrap();
            }
        }
    }
    Ok(out)
}
