//! The verification driver: named checks grouped into suites, run against a
//! set of subject functions that can be swapped for deliberately broken
//! versions to confirm the checks notice.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::thread;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;
use sptlab_core::bijection::{self, in_w, sigma};
use sptlab_core::doubly_marked::{self, enumerate_dmp, enumerate_u, enumerate_v, phi, v_cell};
use sptlab_core::qseries::{self, gaussian_binomial, gf_spt_alt, gf_v_cell, pochhammer, Terms};
use sptlab_core::rank::{self, obrien_vector, partition_count_by_enumeration, spt_via_moments};
use sptlab_core::spt::{self, enumerate_marked, s_partition_net_counts};
use sptlab_core::{
    enumerate_partitions, Classification, ColumnMarkedPartition, DoublyMarkedPartition,
    MarkedPartition, OrbitTrace, Partition, PartitionPair, RankTable, TruncatedSeries,
};

use crate::{CliError, Format};

pub const DEFAULT_MAX_N: usize = 20;
pub const DEFAULT_OBRIEN_INDEX: usize = 1;

const S_PARTITION_REACH: usize = 14;
const TAU_REACH: usize = 12;
const CELL_REACH: usize = 16;
const CRANK_REACH: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Gf,
    Bijections,
    Congruences,
    Recurrence,
    Dyson,
    Obrien,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Gf,
        Suite::Bijections,
        Suite::Congruences,
        Suite::Recurrence,
        Suite::Dyson,
        Suite::Obrien,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Gf => "gf",
            Suite::Bijections => "bijections",
            Suite::Congruences => "congruences",
            Suite::Recurrence => "recurrence",
            Suite::Dyson => "dyson",
            Suite::Obrien => "obrien",
        }
    }
}

type DeltaFn = fn(&MarkedPartition) -> sptlab_core::Result<(DoublyMarkedPartition, OrbitTrace)>;
type LambdaFn = fn(&DoublyMarkedPartition) -> sptlab_core::Result<(MarkedPartition, OrbitTrace)>;

/// The functions under test. Every check reaches the library through these.
#[derive(Clone, Copy)]
pub struct Subjects {
    pub spt: fn(usize) -> u64,
    pub partition_count: fn(usize) -> BigUint,
    pub rank_counts: fn(usize) -> sptlab_core::Result<RankTable>,
    pub crank_counts: fn(usize) -> BTreeMap<i64, u64>,
    pub ns_recurrence: fn(i64, usize) -> BigInt,
    pub psi: fn(&DoublyMarkedPartition) -> PartitionPair,
    pub tau: fn(&ColumnMarkedPartition) -> sptlab_core::Result<ColumnMarkedPartition>,
    pub delta: DeltaFn,
    pub lambda_inv: LambdaFn,
    pub gf_spt: fn(usize) -> TruncatedSeries,
    pub gf_ns: fn(i64, usize) -> TruncatedSeries,
}

impl Default for Subjects {
    fn default() -> Self {
        Subjects {
            spt: spt::spt_weighted,
            partition_count: rank::partition_count,
            rank_counts: rank::rank_counts,
            crank_counts: doubly_marked::crank_counts,
            ns_recurrence: spt::ns_recurrence,
            psi: doubly_marked::psi,
            tau: bijection::tau,
            delta: bijection::delta,
            lambda_inv: bijection::lambda_inv,
            gf_spt: qseries::gf_spt,
            gf_ns: qseries::gf_ns,
        }
    }
}

/// A single deliberately broken subject.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fault {
    Spt,
    PartitionCount,
    RankCounts,
    CrankCounts,
    Recurrence,
    Psi,
    Tau,
    Delta,
    Lambda,
    GfSpt,
    GfNs,
}

impl Fault {
    pub const ALL: [Fault; 11] = [
        Fault::Spt,
        Fault::PartitionCount,
        Fault::RankCounts,
        Fault::CrankCounts,
        Fault::Recurrence,
        Fault::Psi,
        Fault::Tau,
        Fault::Delta,
        Fault::Lambda,
        Fault::GfSpt,
        Fault::GfNs,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fault::Spt => "spt",
            Fault::PartitionCount => "partition-count",
            Fault::RankCounts => "rank-counts",
            Fault::CrankCounts => "crank-counts",
            Fault::Recurrence => "recurrence",
            Fault::Psi => "psi",
            Fault::Tau => "tau",
            Fault::Delta => "delta",
            Fault::Lambda => "lambda",
            Fault::GfSpt => "gf-spt",
            Fault::GfNs => "gf-ns",
        }
    }
}

impl std::str::FromStr for Fault {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Fault::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| CliError::Parse(format!("unknown fault {s:?}")))
    }
}

fn broken_spt(n: usize) -> u64 {
    spt::spt_weighted(n) + u64::from(n == 9)
}

fn broken_partition_count(n: usize) -> BigUint {
    rank::partition_count(n) + BigUint::from(u32::from(n == 9))
}

fn broken_rank_counts(n: usize) -> sptlab_core::Result<RankTable> {
    let mut table = rank::rank_counts(n)?;
    if n == 9 {
        *table
            .counts
            .get_mut(&0)
            .expect("some partition of 9 has rank 0") -= 1;
        *table.counts.entry(1).or_insert(0) += 1;
    }
    Ok(table)
}

fn broken_crank_counts(n: usize) -> BTreeMap<i64, u64> {
    let mut counts = doubly_marked::crank_counts(n);
    if n == 4 {
        *counts.entry(0).or_insert(0) += 1;
    }
    counts
}

fn broken_recurrence(m: i64, n: usize) -> BigInt {
    spt::ns_recurrence(m, n) + BigInt::from(i32::from(m == 0 && n == 5))
}

fn broken_psi(dmp: &DoublyMarkedPartition) -> PartitionPair {
    let pair = doubly_marked::psi(dmp);
    if dmp.weight() == 4 && dmp.crank() == 0 {
        let beta = pair.beta().conjugate();
        return PartitionPair::new(pair.alpha().clone(), beta.clone())
            .unwrap_or_else(|_| pair.clone());
    }
    pair
}

fn broken_tau(cmp: &ColumnMarkedPartition) -> sptlab_core::Result<ColumnMarkedPartition> {
    let image = bijection::tau(cmp)?;
    if cmp.weight() == 4 {
        return Ok(cmp.clone());
    }
    Ok(image)
}

fn broken_delta(mp: &MarkedPartition) -> sptlab_core::Result<(DoublyMarkedPartition, OrbitTrace)> {
    if mp.weight() == 4 && mp.k() == 2 && mp.partition().len() == 2 {
        let other = MarkedPartition::new(mp.partition().clone(), 1)?;
        return bijection::delta(&other);
    }
    bijection::delta(mp)
}

fn broken_lambda(
    dmp: &DoublyMarkedPartition,
) -> sptlab_core::Result<(MarkedPartition, OrbitTrace)> {
    let (mp, trace) = bijection::lambda_inv(dmp)?;
    if dmp.weight() == 5 && mp.k() > 1 {
        return Ok((
            MarkedPartition::new(mp.partition().clone(), mp.k() - 1)?,
            trace,
        ));
    }
    Ok((mp, trace))
}

fn broken_gf_spt(order: usize) -> TruncatedSeries {
    let series = qseries::gf_spt(order);
    series
        .add(&TruncatedSeries::monomial(BigInt::from(1), 4, order))
        .expect("same order")
}

fn broken_gf_ns(m: i64, order: usize) -> TruncatedSeries {
    let series = qseries::gf_ns(m, order);
    if m == 0 {
        return series
            .add(&TruncatedSeries::monomial(BigInt::from(1), 4, order))
            .expect("same order");
    }
    series
}

impl Subjects {
    pub fn with_fault(fault: Fault) -> Self {
        let mut s = Subjects::default();
        match fault {
            Fault::Spt => s.spt = broken_spt,
            Fault::PartitionCount => s.partition_count = broken_partition_count,
            Fault::RankCounts => s.rank_counts = broken_rank_counts,
            Fault::CrankCounts => s.crank_counts = broken_crank_counts,
            Fault::Recurrence => s.ns_recurrence = broken_recurrence,
            Fault::Psi => s.psi = broken_psi,
            Fault::Tau => s.tau = broken_tau,
            Fault::Delta => s.delta = broken_delta,
            Fault::Lambda => s.lambda_inv = broken_lambda,
            Fault::GfSpt => s.gf_spt = broken_gf_spt,
            Fault::GfNs => s.gf_ns = broken_gf_ns,
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    fn from_checks(mut checks: Vec<Check>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let overall = checks.iter().all(|c| c.passed);
        VerificationReport { checks, overall }
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Json => {
                out = serde_json::to_string_pretty(self).unwrap();
                out.push('\n');
            }
            Format::Tsv => {
                out.push_str("check\trange\tstatus\tcounterexample\n");
                for c in &self.checks {
                    writeln!(
                        out,
                        "{}\t{}\t{}\t{}",
                        c.name,
                        c.range,
                        if c.passed { "pass" } else { "fail" },
                        c.counterexample.as_deref().unwrap_or("")
                    )
                    .unwrap();
                }
                writeln!(
                    out,
                    "overall\t\t{}\t",
                    if self.overall { "pass" } else { "fail" }
                )
                .unwrap();
            }
            Format::Pretty => {
                for c in &self.checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    writeln!(out, "{status}  {}  [{}]", c.name, c.range).unwrap();
                    if let Some(cx) = &c.counterexample {
                        writeln!(out, "      counterexample: {cx}").unwrap();
                    }
                }
                let passed = self.checks.iter().filter(|c| c.passed).count();
                writeln!(
                    out,
                    "{} of {} checks passed: {}",
                    passed,
                    self.checks.len(),
                    if self.overall { "OK" } else { "FAILED" }
                )
                .unwrap();
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub max_n: usize,
    pub series_order: usize,
    pub obrien_index: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_n: DEFAULT_MAX_N,
            series_order: qseries::DEFAULT_ORDER,
            obrien_index: DEFAULT_OBRIEN_INDEX,
        }
    }
}

type Outcome = Result<(), String>;

struct CheckDef {
    name: &'static str,
    range: String,
    run: Box<dyn Fn(&Subjects) -> Outcome + Send + Sync>,
}

fn check_def<F>(name: &'static str, range: String, run: F) -> CheckDef
where
    F: Fn(&Subjects) -> Outcome + Send + Sync + 'static,
{
    CheckDef {
        name,
        range,
        run: Box::new(run),
    }
}

fn ensure(cond: bool, cx: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(cx())
    }
}

fn lift<T>(r: sptlab_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn defs_for(suite: Suite, cfg: VerifyConfig) -> Vec<CheckDef> {
    let max_n = cfg.max_n;
    match suite {
        Suite::Gf => gf_defs(max_n, cfg.series_order),
        Suite::Bijections => bijection_defs(max_n),
        Suite::Congruences => congruence_defs(max_n),
        Suite::Recurrence => recurrence_defs(max_n),
        Suite::Dyson => dyson_defs(max_n),
        Suite::Obrien => obrien_defs(cfg.obrien_index),
    }
}

fn gf_defs(max_n: usize, order: usize) -> Vec<CheckDef> {
    let ns_order = max_n.min(order).max(1);
    let cell_reach = max_n.clamp(1, CELL_REACH);
    vec![
        check_def("gf.spt_product_forms", format!("order {order}"), move |s| {
            let direct = (s.gf_spt)(order);
            let alt = gf_spt_alt(order);
            let k = (0..=order).find(|&k| direct.coeff(k) != alt.coeff(k));
            ensure(k.is_none(), || {
                let k = k.unwrap();
                format!("[q^{k}]: {} vs {}", direct.coeff(k), alt.coeff(k))
            })
        }),
        check_def(
            "gf.spt_coefficients",
            format!("1 <= n <= {order}"),
            move |s| {
                let series = (s.gf_spt)(order);
                for n in 1..=order {
                    let value = spt::spt_weighted(n);
                    ensure(series.coeff(n) == BigInt::from(value), || {
                        format!("[q^{n}] = {} but spt({n}) = {value}", series.coeff(n))
                    })?;
                }
                Ok(())
            },
        ),
        check_def(
            "gf.ns_coefficients",
            format!("|m| <= {CRANK_REACH}, 1 <= n <= {ns_order}"),
            move |s| {
                let counts: Vec<_> = (0..=ns_order).map(s.crank_counts).collect();
                for m in -CRANK_REACH..=CRANK_REACH {
                    let series = (s.gf_ns)(m, ns_order);
                    for (n, table) in counts.iter().enumerate().skip(1) {
                        let q = table.get(&m).copied().unwrap_or(0);
                        ensure(series.coeff(n) == BigInt::from(q), || {
                            format!(
                                "m = {m}, n = {n}: [q^n] = {} but |Q| = {q}",
                                series.coeff(n)
                            )
                        })?;
                    }
                }
                Ok(())
            },
        ),
        check_def(
            "gf.v_cells",
            format!("|m| <= 3, j <= 5, n <= {cell_reach}"),
            move |_| {
                for m in -3i64..=3 {
                    let mut by_cell: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
                    for n in 1..=cell_reach {
                        for pair in enumerate_v(m, n) {
                            let cell = v_cell(pair.alpha(), m).expect("member of V");
                            *by_cell.entry((cell.j, cell.h, n)).or_insert(0) += 1;
                        }
                    }
                    for j in 0..=5 {
                        for h in 0..=j {
                            let series = lift(gf_v_cell(m, j, h, cell_reach))?;
                            for n in 1..=cell_reach {
                                let count = by_cell.get(&(j, h, n)).copied().unwrap_or(0);
                                ensure(series.coeff(n) == BigInt::from(count), || {
                                    format!(
                                        "m = {m}, j = {j}, h = {h}, n = {n}: series {} vs {count} pairs",
                                        series.coeff(n)
                                    )
                                })?;
                            }
                        }
                    }
                }
                Ok(())
            },
        ),
        check_def("gf.gaussian_binomial_boxes", "top <= 8".into(), |_| {
            for top in 0..=8usize {
                for bottom in 0..=top {
                    let cols = top - bottom;
                    let series = lift(gaussian_binomial(top, bottom, bottom * cols))?;
                    for w in 0..=bottom * cols {
                        let count = enumerate_partitions(w)
                            .filter(|p| p.len() <= bottom && p.largest() <= cols)
                            .count() as u64;
                        ensure(series.coeff(w) == BigInt::from(count), || {
                            format!(
                                "[{top} choose {bottom}] at q^{w}: {} vs {count}",
                                series.coeff(w)
                            )
                        })?;
                    }
                }
            }
            Ok(())
        }),
        check_def(
            "gf.pochhammer_inverse",
            format!("order {order}"),
            move |_| {
                for shift in 1..=4 {
                    for terms in [Terms::Finite(3), Terms::Finite(10), Terms::Infinite] {
                        let f = lift(pochhammer(terms, shift, order))?;
                        let inv = lift(f.inverse())?;
                        ensure(lift(f.mul(&inv))? == TruncatedSeries::one(order), || {
                            format!("(q^{shift};q)_{terms:?} times its inverse is not 1")
                        })?;
                    }
                }
                Ok(())
            },
        ),
    ]
}

fn bijection_defs(max_n: usize) -> Vec<CheckDef> {
    let tau_reach = max_n.min(TAU_REACH);
    vec![
        check_def(
            "bijections.psi_phi",
            format!("1 <= n <= {max_n}"),
            move |s| {
                for n in 1..=max_n {
                    for dmp in enumerate_dmp(n) {
                        let m = dmp.crank();
                        let pair = (s.psi)(&dmp);
                        ensure(pair.weight() == n, || {
                            format!("ψ{dmp} = {pair} changes weight")
                        })?;
                        let back = phi(&pair, m).map_err(|e| format!("φ(ψ{dmp}): {e}"))?;
                        ensure(back == dmp, || format!("φ(ψ{dmp}) = {back}"))?;
                    }
                }
                Ok(())
            },
        ),
        check_def(
            "bijections.tau_sigma",
            format!("1 <= n <= {tau_reach}"),
            move |s| {
                for n in 1..=tau_reach {
                    let mut images = BTreeSet::new();
                    let mut off_q = 0usize;
                    for cmp in enumerate_u(n).filter(|c| c.classify() == Classification::UOnly) {
                        off_q += 1;
                        let image = lift((s.tau)(&cmp))?;
                        ensure(image.weight() == n && in_w(&image), || {
                            format!("τ{cmp} = {image} is not in W_{n}")
                        })?;
                        let back = sigma(&image).map_err(|e| format!("σ(τ{cmp}): {e}"))?;
                        ensure(back == cmp, || format!("σ(τ{cmp}) = {back}"))?;
                        images.insert(image);
                    }
                    let w = enumerate_u(n).filter(in_w).count();
                    ensure(images.len() == off_q && w == off_q, || {
                        format!(
                            "n = {n}: |U \\ Q| = {off_q}, |τ image| = {}, |W| = {w}",
                            images.len()
                        )
                    })?;
                }
                Ok(())
            },
        ),
        check_def(
            "bijections.delta_lambda",
            format!("1 <= n <= {max_n}"),
            move |s| {
                for n in 1..=max_n {
                    let mut images = BTreeSet::new();
                    for mp in enumerate_marked(n) {
                        let (dmp, forward) = lift((s.delta)(&mp))?;
                        ensure(forward.steps.iter().all(|c| c.weight() == n), || {
                            format!("orbit of {mp} leaves weight {n}")
                        })?;
                        let (back, _) = lift((s.lambda_inv)(&dmp))?;
                        ensure(back == mp, || format!("Λ(Δ{mp}) = {back}"))?;
                        images.insert(dmp);
                    }
                    let dmps = enumerate_dmp(n).count();
                    ensure(images.len() == dmps, || {
                        format!(
                            "n = {n}: Δ hits {} of {dmps} doubly marked partitions",
                            images.len()
                        )
                    })?;
                }
                Ok(())
            },
        ),
        check_def("bijections.sample_orbit", "((2,1,1,1,1),5)".into(), |s| {
            let mp =
                lift(Partition::new(vec![2, 1, 1, 1, 1]).and_then(|p| MarkedPartition::new(p, 5)))?;
            let (dmp, trace) = lift((s.delta)(&mp))?;
            let got: Vec<String> = trace.steps.iter().map(ToString::to_string).collect();
            let expected = [
                "((5,1),1,5)",
                "((4,2),2,4)",
                "((3,2,1),2,3)",
                "((2,2,1,1),2,2)",
            ];
            ensure(got == expected && dmp.to_string() == expected[3], || {
                format!("orbit {}", got.join(" -> "))
            })
        }),
    ]
}

fn congruence_defs(max_n: usize) -> Vec<CheckDef> {
    let mut out = Vec::new();
    for (modulus, offset) in [(5usize, 4usize), (7, 5), (13, 6)] {
        let name = match modulus {
            5 => "congruences.spt_mod_5",
            7 => "congruences.spt_mod_7",
            _ => "congruences.spt_mod_13",
        };
        out.push(check_def(
            name,
            format!("spt({modulus}k+{offset}) for {modulus}k+{offset} <= {max_n}"),
            move |s| {
                for n in (offset..=max_n).step_by(modulus) {
                    let v = (s.spt)(n);
                    ensure(v % modulus as u64 == 0, || format!("spt({n}) = {v}"))?;
                }
                Ok(())
            },
        ));
    }
    for (modulus, offset) in [(5usize, 4usize), (7, 5), (11, 6)] {
        let name = match modulus {
            5 => "congruences.p_mod_5",
            7 => "congruences.p_mod_7",
            _ => "congruences.p_mod_11",
        };
        out.push(check_def(
            name,
            format!("p({modulus}k+{offset}) for {modulus}k+{offset} <= {max_n}"),
            move |s| {
                for n in (offset..=max_n).step_by(modulus) {
                    let v = (s.partition_count)(n);
                    ensure(&v % modulus == BigUint::from(0u32), || {
                        format!("p({n}) = {v}")
                    })?;
                }
                Ok(())
            },
        ));
    }
    out
}

fn recurrence_defs(max_n: usize) -> Vec<CheckDef> {
    let s_reach = max_n.min(S_PARTITION_REACH);
    vec![
        check_def(
            "recurrence.spt_methods",
            format!("1 <= n <= {max_n}, S-partitions to {s_reach}"),
            move |s| {
                for n in 1..=max_n {
                    let weighted = (s.spt)(n);
                    let marked = enumerate_marked(n).count() as u64;
                    let moments = lift(spt_via_moments(n))?;
                    ensure(weighted == marked && marked == moments, || {
                        format!("n = {n}: weighted {weighted}, marked {marked}, moments {moments}")
                    })?;
                    if n <= s_reach {
                        let net = lift(s_partition_net_counts(n))?.total();
                        ensure(net == weighted as i64, || {
                            format!("n = {n}: S-partitions give {net}, weighted {weighted}")
                        })?;
                    }
                }
                Ok(())
            },
        ),
        check_def(
            "recurrence.s_partitions_vs_doubly_marked",
            format!("all m, 1 <= n <= {s_reach}"),
            move |s| {
                for n in 1..=s_reach {
                    let net = lift(s_partition_net_counts(n))?;
                    let q = (s.crank_counts)(n);
                    let cranks: BTreeSet<i64> = net.net.keys().chain(q.keys()).copied().collect();
                    for m in cranks {
                        let count = q.get(&m).copied().unwrap_or(0) as i64;
                        ensure(net.get(m) == count, || {
                            format!("m = {m}, n = {n}: N_S = {}, |Q| = {count}", net.get(m))
                        })?;
                    }
                }
                Ok(())
            },
        ),
        check_def(
            "recurrence.dyson_vs_doubly_marked",
            format!("|m| <= n + 2, 1 <= n <= {max_n}"),
            move |s| {
                for n in 1..=max_n {
                    let q = (s.crank_counts)(n);
                    let reach = n as i64 + 2;
                    for m in -reach..=reach {
                        let count = q.get(&m).copied().unwrap_or(0);
                        let value = (s.ns_recurrence)(m, n);
                        ensure(value == BigInt::from(count), || {
                            format!("m = {m}, n = {n}: recurrence {value}, |Q| = {count}")
                        })?;
                    }
                }
                Ok(())
            },
        ),
        check_def(
            "recurrence.nonnegative",
            format!("|m| <= n, 1 <= n <= {max_n}"),
            move |s| {
                for n in 1..=max_n {
                    for m in -(n as i64)..=(n as i64) {
                        let value = (s.ns_recurrence)(m, n);
                        ensure(value >= BigInt::from(0), || {
                            format!("N_S({m}, {n}) = {value}")
                        })?;
                    }
                }
                Ok(())
            },
        ),
    ]
}

fn dyson_defs(max_n: usize) -> Vec<CheckDef> {
    let mut out = Vec::new();
    for (modulus, offset) in [(5u64, 4usize), (7, 5)] {
        let name = if modulus == 5 {
            "dyson.rank_mod_5"
        } else {
            "dyson.rank_mod_7"
        };
        out.push(check_def(
            name,
            format!("N(i,{modulus},{modulus}k+{offset}) for {modulus}k+{offset} <= {max_n}"),
            move |s| {
                for n in (offset..=max_n).step_by(modulus as usize) {
                    let table = lift((s.rank_counts)(n))?;
                    let p = partition_count_by_enumeration(n);
                    for i in 0..modulus {
                        let count = lift(table.residue_count(i, modulus))?;
                        ensure(count * modulus == p, || {
                            format!("N({i},{modulus},{n}) = {count}, p({n}) = {p}")
                        })?;
                    }
                }
                Ok(())
            },
        ));
    }
    out.push(check_def(
        "dyson.rank_symmetry",
        format!("1 <= n <= {max_n}"),
        move |s| {
            for n in 1..=max_n {
                let table = lift((s.rank_counts)(n))?;
                for (&m, &c) in &table.counts {
                    ensure(table.count(-m) == c, || {
                        format!("N({m},{n}) = {c}, N({},{n}) = {}", -m, table.count(-m))
                    })?;
                }
            }
            Ok(())
        },
    ));
    out
}

fn obrien_defs(max_index: usize) -> Vec<CheckDef> {
    vec![check_def(
        "obrien.mod_13",
        format!("weights 13k+6, k <= {max_index}"),
        move |s| {
            for n_index in 0..=max_index {
                let weight = 13 * n_index + 6;
                let table = lift((s.rank_counts)(weight))?;
                let mut counts = [0u64; 13];
                for (a, slot) in counts.iter_mut().enumerate() {
                    *slot = lift(table.residue_count(a as u64, 13))?;
                }
                let reference = lift(obrien_vector(6, n_index))?;
                ensure(counts == reference.residue_counts, || {
                    format!("weight {weight}: residue counts {counts:?}")
                })?;
                let (first, second) = reference.holds();
                ensure(first && second, || {
                    format!(
                        "weight {weight}: sums {} and {} are not both ≡ 0 mod 13",
                        reference.first_sum(),
                        reference.second_sum()
                    )
                })?;
                if n_index == 0 {
                    ensure(reference.s == [-7, -4, -4, -2, -3], || {
                        format!("S_1..S_5 at weight 6 = {:?}", reference.s)
                    })?;
                }
            }
            Ok(())
        },
    )]
}

/// Runs the given suites (each check on its own thread) and merges the
/// results in check-name order.
pub fn run(suites: &[Suite], cfg: VerifyConfig, subjects: Subjects) -> VerificationReport {
    let defs: Vec<CheckDef> = suites
        .iter()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .flat_map(|&suite| defs_for(suite, cfg))
        .collect();
    let checks = thread::scope(|scope| {
        let handles: Vec<_> = defs
            .iter()
            .map(|def| {
                let subjects = &subjects;
                scope.spawn(move || (def.run)(subjects))
            })
            .collect();
        defs
            .iter()
            .zip(handles)
            .map(|(def, handle)| {
                let outcome = handle
                    .join()
                    .unwrap_or_else(|_| Err("check panicked".to_string()));
                Check {
                    name: def.name.to_string(),
                    range: def.range.clone(),
                    passed: outcome.is_ok(),
                    counterexample: outcome.err(),
                }
            })
            .collect()
    });
    VerificationReport::from_checks(checks)
}
