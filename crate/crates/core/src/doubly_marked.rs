//! Partitions with two distinguished columns, doubly marked partitions and
//! their spt-crank, and the correspondence ψ / φ between doubly marked
//! partitions of crank m and pairs (α, β) with β rectangular.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{enumerate_partitions, for_each_partition_bounded, Partition};

/// Outcome of [`classify`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Classification {
    DoublyMarked,
    /// In U_n (valid column marks) but not doubly marked.
    UOnly,
    Invalid,
}

/// Classifies a partition with column marks `s`, `t`.
pub fn classify(base: &Partition, s: usize, t: usize) -> Classification {
    let in_u = !base.is_empty()
        && (1..=base.durfee_side()).contains(&s)
        && (1..=base.largest()).contains(&t);
    if !in_u {
        return Classification::Invalid;
    }
    if s <= t && base.conjugate_part(s) == base.conjugate_part(t) {
        Classification::DoublyMarked
    } else {
        Classification::UOnly
    }
}

/// An element of U_n: a nonempty partition with columns `1 ≤ s ≤ D(λ)` and
/// `1 ≤ t ≤ λ_1` distinguished.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawColumns")]
pub struct ColumnMarkedPartition {
    parts: Partition,
    s: usize,
    t: usize,
}

#[derive(Deserialize)]
struct RawColumns {
    parts: Partition,
    s: usize,
    t: usize,
}

impl TryFrom<RawColumns> for ColumnMarkedPartition {
    type Error = Error;

    fn try_from(raw: RawColumns) -> Result<Self> {
        ColumnMarkedPartition::new(raw.parts, raw.s, raw.t)
    }
}

impl ColumnMarkedPartition {
    pub fn new(parts: Partition, s: usize, t: usize) -> Result<Self> {
        if classify(&parts, s, t) == Classification::Invalid {
            return Err(Error::domain(format!(
                "({parts},{s},{t}) is not in U_n: need 1 <= s <= D(λ) and 1 <= t <= λ_1"
            )));
        }
        Ok(ColumnMarkedPartition { parts, s, t })
    }

    pub(crate) fn new_unchecked(parts: Partition, s: usize, t: usize) -> Self {
        ColumnMarkedPartition { parts, s, t }
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn weight(&self) -> usize {
        self.parts.weight()
    }

    pub fn classify(&self) -> Classification {
        classify(&self.parts, self.s, self.t)
    }

    pub fn is_doubly_marked(&self) -> bool {
        self.classify() == Classification::DoublyMarked
    }

    pub fn into_doubly_marked(self) -> Result<DoublyMarkedPartition> {
        DoublyMarkedPartition::try_from(self)
    }
}

impl fmt::Display for ColumnMarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.parts, self.s, self.t)
    }
}

/// A doubly marked partition: `s ≤ t` and λ'_s = λ'_t on top of U_n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ColumnMarkedPartition", into = "ColumnMarkedPartition")]
pub struct DoublyMarkedPartition(ColumnMarkedPartition);

impl TryFrom<ColumnMarkedPartition> for DoublyMarkedPartition {
    type Error = Error;

    fn try_from(cmp: ColumnMarkedPartition) -> Result<Self> {
        if !cmp.is_doubly_marked() {
            return Err(Error::domain(format!(
                "{cmp} is not a doubly marked partition"
            )));
        }
        Ok(DoublyMarkedPartition(cmp))
    }
}

impl From<DoublyMarkedPartition> for ColumnMarkedPartition {
    fn from(d: DoublyMarkedPartition) -> Self {
        d.0
    }
}

impl DoublyMarkedPartition {
    pub fn new(parts: Partition, s: usize, t: usize) -> Result<Self> {
        ColumnMarkedPartition::new(parts, s, t)?.try_into()
    }

    pub fn partition(&self) -> &Partition {
        &self.0.parts
    }

    pub fn s(&self) -> usize {
        self.0.s
    }

    pub fn t(&self) -> usize {
        self.0.t
    }

    pub fn weight(&self) -> usize {
        self.0.weight()
    }

    pub fn as_columns(&self) -> &ColumnMarkedPartition {
        &self.0
    }

    /// g(λ, s, t) = λ'_s − s + 1, always at least 1.
    pub fn g(&self) -> usize {
        self.partition().conjugate_part(self.s()) + 1 - self.s()
    }

    /// The spt-crank c(λ, s, t) = g − λ_g + t − s.
    pub fn crank(&self) -> i64 {
        let g = self.g();
        g as i64 - self.partition().part(g) as i64 + self.t() as i64 - self.s() as i64
    }
}

impl fmt::Display for DoublyMarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// g(λ, s, t) for a raw triple; rejects anything not doubly marked.
pub fn g_value(base: &Partition, s: usize, t: usize) -> Result<usize> {
    Ok(DoublyMarkedPartition::new(base.clone(), s, t)?.g())
}

/// c(λ, s, t) for a raw triple; rejects anything not doubly marked.
pub fn spt_crank(base: &Partition, s: usize, t: usize) -> Result<i64> {
    Ok(DoublyMarkedPartition::new(base.clone(), s, t)?.crank())
}

/// Elements of U_n: partitions in enumeration order, then `s`, then `t`.
pub fn enumerate_u(n: usize) -> impl Iterator<Item = ColumnMarkedPartition> {
    enumerate_partitions(n)
        .filter(|lambda| !lambda.is_empty())
        .flat_map(|lambda| {
            let d = lambda.durfee_side();
            let width = lambda.largest();
            (1..=d).flat_map(move |s| {
                let lambda = lambda.clone();
                (1..=width).map(move |t| ColumnMarkedPartition::new_unchecked(lambda.clone(), s, t))
            })
        })
}

/// |U_n| = Σ_{λ ⊢ n} D(λ)·λ_1.
pub fn u_size(n: usize) -> usize {
    enumerate_partitions(n)
        .map(|lambda| lambda.durfee_side() * lambda.largest())
        .sum()
}

/// Doubly marked partitions of `n`, in the order of [`enumerate_u`].
pub fn enumerate_dmp(n: usize) -> impl Iterator<Item = DoublyMarkedPartition> {
    enumerate_partitions(n)
        .filter(|lambda| !lambda.is_empty())
        .flat_map(|lambda| {
            let d = lambda.durfee_side();
            let width = lambda.largest();
            (1..=d).flat_map(move |s| {
                let lambda = lambda.clone();
                let height = lambda.conjugate_part(s);
                let probe = lambda.clone();
                (s..=width)
                    .take_while(move |&t| probe.conjugate_part(t) == height)
                    .map({
                        move |t| {
                            DoublyMarkedPartition(ColumnMarkedPartition::new_unchecked(
                                lambda.clone(),
                                s,
                                t,
                            ))
                        }
                    })
            })
        })
}

/// |Q_{m,n}| for every crank m that occurs.
pub fn crank_counts(n: usize) -> BTreeMap<i64, u64> {
    let mut counts = BTreeMap::new();
    for dmp in enumerate_dmp(n) {
        *counts.entry(dmp.crank()).or_insert(0) += 1;
    }
    counts
}

/// A pair (α, β) with β a nonempty partition into equal parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPair")]
pub struct PartitionPair {
    alpha: Partition,
    beta: Partition,
}

#[derive(Deserialize)]
struct RawPair {
    alpha: Partition,
    beta: Partition,
}

impl TryFrom<RawPair> for PartitionPair {
    type Error = Error;

    fn try_from(raw: RawPair) -> Result<Self> {
        PartitionPair::new(raw.alpha, raw.beta)
    }
}

impl PartitionPair {
    pub fn new(alpha: Partition, beta: Partition) -> Result<Self> {
        if beta.is_empty() || !beta.is_rectangular() {
            return Err(Error::domain(format!(
                "β = {beta} must be nonempty with all parts equal"
            )));
        }
        Ok(PartitionPair { alpha, beta })
    }

    pub fn alpha(&self) -> &Partition {
        &self.alpha
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn weight(&self) -> usize {
        self.alpha.weight() + self.beta.weight()
    }
}

impl fmt::Display for PartitionPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// ψ(λ, s, t) = (α, β): subtract t − s + 1 from each of the first λ'_s rows
/// to get α, and read β = (λ'_s, …, λ'_t).
pub fn psi(dmp: &DoublyMarkedPartition) -> PartitionPair {
    let lambda = dmp.partition();
    let (s, t) = (dmp.s(), dmp.t());
    let height = lambda.conjugate_part(s);
    let cut = t - s + 1;
    let alpha: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| if i < height { p - cut } else { p })
        .collect();
    PartitionPair {
        alpha: Partition::from_decreasing(alpha),
        beta: Partition::from_decreasing(vec![height; cut]),
    }
}

/// The cell (j, h) of a pair satisfying the rank-set condition for crank `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VCell {
    /// Position g of `m` in the rank-set of α; g = j + m + 1.
    pub g: usize,
    /// Width of the m-Durfee rectangle of α, equal to α_g.
    pub j: usize,
    /// Largest h with α_{g+h} ≥ h.
    pub h: usize,
}

/// Locates (j, h) for α and crank `m`, or `None` when `m` is not in the
/// rank-set of α.
///
/// The width is read off the rank-set position: when `m` sits at position
/// g, the m-Durfee rectangle is (g − 1) × α_g. For g = 1 (m = −α_1) this is
/// a rectangle with no rows whose width is α_1, which is what the
/// generating-function cells with j = |m| count.
pub fn v_cell(alpha: &Partition, m: i64) -> Option<VCell> {
    let g = alpha.rank_set_position(m)?;
    let j = alpha.part(g);
    let h = (0..)
        .take_while(|&h| alpha.part(g + h) >= h)
        .last()
        .unwrap_or(0);
    Some(VCell { g, j, h })
}

/// Whether (α, β) ∈ V_{m,n}: m lies in the rank-set of α and β_1 = j + m + 1 + h.
pub fn v_membership(pair: &PartitionPair, m: i64) -> bool {
    match v_cell(&pair.alpha, m) {
        Some(cell) => pair.beta.largest() == cell.g + cell.h,
        None => false,
    }
}

/// φ(α, β): the inverse of ψ on V_{m,n}.
pub fn phi(pair: &PartitionPair, m: i64) -> Result<DoublyMarkedPartition> {
    let cell = v_cell(&pair.alpha, m)
        .filter(|cell| pair.beta.largest() == cell.g + cell.h)
        .ok_or_else(|| Error::domain(format!("{pair} is not in V_(m,n) for m = {m}")))?;
    let rows = pair.beta.largest();
    let cols = pair.beta.len();
    let height = rows.max(pair.alpha.len());
    let parts: Vec<usize> = (1..=height)
        .map(|i| {
            let a = pair.alpha.part(i);
            if i <= rows {
                a + cols
            } else {
                a
            }
        })
        .collect();
    let s = cell.h + 1;
    let t = cell.h + cols;
    let lambda = Partition::from_decreasing(parts);
    let dmp = DoublyMarkedPartition::new(lambda, s, t)
        .map_err(|e| Error::invariant(format!("φ produced a non doubly marked result: {e}")))?;
    if dmp.crank() != m {
        return Err(Error::invariant(format!(
            "φ({pair}) = {dmp} has crank {} instead of {m}",
            dmp.crank()
        )));
    }
    Ok(dmp)
}

/// V_{m,n} by generate-and-filter over all pairs (α, β) of total weight `n`.
pub fn enumerate_v(m: i64, n: usize) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for beta_weight in 1..=n {
        let alpha_weight = n - beta_weight;
        let mut alphas = Vec::new();
        for_each_partition_bounded(alpha_weight, alpha_weight, 1, &mut |parts| {
            alphas.push(Partition::from_decreasing(parts.to_vec()))
        });
        for size in (1..=beta_weight).filter(|d| beta_weight % d == 0) {
            let beta = Partition::from_decreasing(vec![size; beta_weight / size]);
            for alpha in &alphas {
                let pair = PartitionPair {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                };
                if v_membership(&pair, m) {
                    out.push(pair);
                }
            }
        }
    }
    out
}
