//! Command implementations for the `sptlab` binary. Each returns the text to
//! print; `main` only parses arguments and maps errors to exit codes.

pub mod tables;
pub mod verify;

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::json;
use sptlab_core::bijection::{crank_classes, delta, lambda_inv};
use sptlab_core::qseries::gf_spt;
use sptlab_core::rank::spt_via_moments;
use sptlab_core::spt::{enumerate_marked, s_partition_net_counts_with_cap, spt_weighted};
use sptlab_core::{DoublyMarkedPartition, MarkedPartition, OrbitTrace, Partition};

pub const DEFAULT_COMMAND_MAX_N: usize = 60;
pub const SERIES_ORDER_ENV: &str = "SPTLAB_SERIES_ORDER";

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
    Pretty,
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed input: exit 2.
    Parse(String),
    /// Input outside an operation's domain, or over a cap: exit 3.
    Domain(String),
    /// A verification or equinumerosity check failed: exit 1.
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Domain(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(m) => write!(f, "error: {m}"),
            CliError::Failed(m) => write!(f, "verification failed: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<sptlab_core::Error> for CliError {
    fn from(e: sptlab_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

fn check_max_n(n: usize, max_n: usize) -> Result<(), CliError> {
    if n > max_n {
        return Err(CliError::Domain(format!(
            "n = {n} exceeds --max-n {max_n}; raise --max-n to allow it"
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SptMethod {
    Weighted,
    Marked,
    SPartitions,
    Moments,
    Series,
}

#[derive(Clone, Copy, Debug)]
pub struct SptLimits {
    pub max_n: usize,
    pub s_partition_cap: usize,
    pub series_order: usize,
}

pub fn compute_spt(n: usize, method: SptMethod, limits: SptLimits) -> Result<u64, CliError> {
    if n == 0 {
        return Err(CliError::Domain("spt needs n >= 1".into()));
    }
    check_max_n(n, limits.max_n)?;
    let value = match method {
        SptMethod::Weighted => spt_weighted(n),
        SptMethod::Marked => enumerate_marked(n).count() as u64,
        SptMethod::Moments => spt_via_moments(n)?,
        SptMethod::SPartitions => {
            if n > limits.s_partition_cap {
                return Err(CliError::Domain(format!(
                    "n = {n} exceeds the S-partition cap of {}; raise --s-partition-cap or use another --method",
                    limits.s_partition_cap
                )));
            }
            let net = s_partition_net_counts_with_cap(n, limits.s_partition_cap)?.total();
            u64::try_from(net).map_err(|_| CliError::Domain(format!("negative net count {net}")))?
        }
        SptMethod::Series => {
            if n > limits.series_order {
                return Err(CliError::Domain(format!(
                    "n = {n} exceeds the series order {}; raise --series-order or set {SERIES_ORDER_ENV}",
                    limits.series_order
                )));
            }
            let c = gf_spt(limits.series_order).coeff(n);
            u64::try_from(&c)
                .map_err(|_| CliError::Domain(format!("coefficient {c} out of range")))?
        }
    };
    Ok(value)
}

pub fn render_spt(n: usize, method: SptMethod, value: u64, format: Format) -> String {
    match format {
        Format::Tsv => format!("{value}\n"),
        Format::Json => format!("{}\n", json!({ "n": n, "method": method, "spt": value })),
        Format::Pretty => {
            let method = serde_json::to_value(method).unwrap();
            format!("spt({n}) = {value}  ({})\n", method.as_str().unwrap())
        }
    }
}

/// Moduli for which the residue classes of `n` are known to be equal in size.
pub fn equinumerous_expected(n: usize, modulus: u64) -> bool {
    matches!((modulus, n % 5, n % 7), (5, 4, _) | (7, _, 5))
}

pub fn classes(n: usize, modulus: u64, max_n: usize, format: Format) -> Result<String, CliError> {
    check_max_n(n, max_n)?;
    let report = crank_classes(n, modulus)?;
    let sizes = report.sizes();
    let expected = equinumerous_expected(n, modulus);
    let mut out = String::new();
    match format {
        Format::Tsv => {
            out.push_str("residue\tsize\n");
            for (r, members) in &report.classes {
                writeln!(out, "{r}\t{}", members.len()).unwrap();
            }
            out.push_str("\nresidue\tmarked_partition\tdoubly_marked_partition\tspt_crank\n");
            for (r, members) in &report.classes {
                for m in members {
                    writeln!(out, "{r}\t{}\t{}\t{}", m.marked, m.dmp, m.crank).unwrap();
                }
            }
        }
        Format::Json => {
            let value = json!({
                "n": n,
                "modulus": modulus,
                "sizes": sizes,
                "equinumerous": report.is_equinumerous(),
                "classes": report.classes,
            });
            out = serde_json::to_string_pretty(&value).unwrap();
            out.push('\n');
        }
        Format::Pretty => {
            writeln!(
                out,
                "{} marked partitions of {n} by spt-crank mod {modulus}: sizes {sizes:?}",
                report.total()
            )
            .unwrap();
            for (r, members) in &report.classes {
                writeln!(out, "class {r} ({})", members.len()).unwrap();
                for m in members {
                    writeln!(out, "  {} -> {}  crank {}", m.marked, m.dmp, m.crank).unwrap();
                }
            }
        }
    }
    if expected && !report.is_equinumerous() {
        return Err(CliError::Failed(format!(
            "classes of {n} mod {modulus} have sizes {sizes:?}\n{out}"
        )));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    Delta,
    Lambda,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMarked {
    parts: Vec<i64>,
    k: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawColumns {
    parts: Vec<i64>,
    s: i64,
    t: i64,
}

fn parse_json<'a, T: Deserialize<'a>>(input: &'a str) -> Result<T, CliError> {
    serde_json::from_str(input).map_err(|e| CliError::Parse(e.to_string()))
}

fn nonnegative(v: i64, what: &str) -> Result<usize, CliError> {
    usize::try_from(v).map_err(|_| CliError::Domain(format!("{what} must be nonnegative, got {v}")))
}

fn partition_from(parts: &[i64]) -> Result<Partition, CliError> {
    let parts = parts
        .iter()
        .map(|&p| nonnegative(p, "parts"))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Partition::new(parts)?)
}

pub fn parse_marked(input: &str) -> Result<MarkedPartition, CliError> {
    let raw: RawMarked = parse_json(input)?;
    let parts = partition_from(&raw.parts)?;
    Ok(MarkedPartition::new(parts, nonnegative(raw.k, "k")?)?)
}

pub fn parse_doubly_marked(input: &str) -> Result<DoublyMarkedPartition, CliError> {
    let raw: RawColumns = parse_json(input)?;
    let parts = partition_from(&raw.parts)?;
    Ok(DoublyMarkedPartition::new(
        parts,
        nonnegative(raw.s, "s")?,
        nonnegative(raw.t, "t")?,
    )?)
}

pub fn map(
    direction: Direction,
    input: &str,
    trace: bool,
    max_n: usize,
    format: Format,
) -> Result<String, CliError> {
    let (result, orbit, source, target): (serde_json::Value, OrbitTrace, String, String) =
        match direction {
            Direction::Delta => {
                let mp = parse_marked(input)?;
                check_max_n(mp.weight(), max_n)?;
                let (dmp, orbit) = delta(&mp)?;
                (
                    serde_json::to_value(&dmp).unwrap(),
                    orbit,
                    mp.to_string(),
                    dmp.to_string(),
                )
            }
            Direction::Lambda => {
                let dmp = parse_doubly_marked(input)?;
                check_max_n(dmp.weight(), max_n)?;
                let (mp, orbit) = lambda_inv(&dmp)?;
                (
                    serde_json::to_value(&mp).unwrap(),
                    orbit,
                    dmp.to_string(),
                    mp.to_string(),
                )
            }
        };
    let mut out = String::new();
    match format {
        Format::Json | Format::Tsv if !trace => {
            writeln!(out, "{result}").unwrap();
        }
        Format::Json | Format::Tsv => {
            let value = json!({
                "result": result,
                "steps": orbit.step_count(),
                "trace": orbit,
            });
            writeln!(out, "{value}").unwrap();
        }
        Format::Pretty => {
            let chain: Vec<String> = orbit.steps.iter().map(ToString::to_string).collect();
            let name = match direction {
                Direction::Delta => "Δ",
                Direction::Lambda => "Λ",
            };
            if trace {
                writeln!(out, "orbit: {}", chain.join(" -> ")).unwrap();
            }
            writeln!(
                out,
                "{name}{source} = {target}  ({} steps)",
                orbit.step_count()
            )
            .unwrap();
        }
    }
    Ok(out)
}
