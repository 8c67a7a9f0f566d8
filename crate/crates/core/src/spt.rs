//! The spt-function, marked partitions, S-partitions and their net crank
//! counts N_S(m, n), and Dyson's recurrence for N_S(m, n).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{
    enumerate_partitions, for_each_distinct_partition, for_each_partition_bounded, Partition,
    SmallestPart,
};
use crate::rank::{check_residue, partition_counts, residue};

/// Default bound on the weight for brute-force S-partition enumeration.
pub const DEFAULT_S_PARTITION_CAP: usize = 18;

/// spt(n) = Σ_{λ ⊢ n} n_s(λ).
pub fn spt_weighted(n: usize) -> u64 {
    enumerate_partitions(n)
        .map(|lambda| lambda.smallest_multiplicity() as u64)
        .sum()
}

/// A partition with one occurrence of its smallest part marked by index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMarked")]
pub struct MarkedPartition {
    parts: Partition,
    k: usize,
}

#[derive(Deserialize)]
struct RawMarked {
    parts: Partition,
    k: usize,
}

impl TryFrom<RawMarked> for MarkedPartition {
    type Error = Error;

    fn try_from(raw: RawMarked) -> Result<Self> {
        MarkedPartition::new(raw.parts, raw.k)
    }
}

impl MarkedPartition {
    /// `k` is the 1-based index of the marked part, which must be a
    /// smallest part of a nonempty partition.
    pub fn new(parts: Partition, k: usize) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::domain("a marked partition must be nonempty"));
        }
        if k == 0 || k > parts.len() {
            return Err(Error::domain(format!(
                "mark index {k} outside 1..={}",
                parts.len()
            )));
        }
        if SmallestPart::Finite(parts.part(k)) != parts.smallest_part() {
            return Err(Error::domain(format!(
                "part {k} of {parts} is not a smallest part"
            )));
        }
        Ok(MarkedPartition { parts, k })
    }

    pub fn partition(&self) -> &Partition {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn weight(&self) -> usize {
        self.parts.weight()
    }
}

impl std::fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.parts, self.k)
    }
}

/// Marked partitions of `n`: partitions in enumeration order, then by
/// increasing mark index.
pub fn enumerate_marked(n: usize) -> impl Iterator<Item = MarkedPartition> {
    enumerate_partitions(n)
        .filter(|lambda| !lambda.is_empty())
        .flat_map(|lambda| {
            let len = lambda.len();
            let first = len - lambda.smallest_multiplicity() + 1;
            (first..=len).map(move |k| MarkedPartition {
                parts: lambda.clone(),
                k,
            })
        })
}

/// A triple (π1, π2, π3) with π1 nonempty into distinct parts and
/// s(π1) ≤ min(s(π2), s(π3)).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSPartition")]
pub struct SPartition {
    pi1: Partition,
    pi2: Partition,
    pi3: Partition,
}

#[derive(Deserialize)]
struct RawSPartition {
    pi1: Partition,
    pi2: Partition,
    pi3: Partition,
}

impl TryFrom<RawSPartition> for SPartition {
    type Error = Error;

    fn try_from(raw: RawSPartition) -> Result<Self> {
        SPartition::new(raw.pi1, raw.pi2, raw.pi3)
    }
}

impl SPartition {
    pub fn new(pi1: Partition, pi2: Partition, pi3: Partition) -> Result<Self> {
        if pi1.is_empty() {
            return Err(Error::domain("π1 must be nonempty"));
        }
        if !pi1.has_distinct_parts() {
            return Err(Error::domain(format!("π1 = {pi1} has repeated parts")));
        }
        let s1 = pi1.smallest_part();
        if s1 > pi2.smallest_part() || s1 > pi3.smallest_part() {
            return Err(Error::domain(format!(
                "s(π1) must not exceed the smallest parts of π2 = {pi2} and π3 = {pi3}"
            )));
        }
        Ok(SPartition { pi1, pi2, pi3 })
    }

    pub fn pi1(&self) -> &Partition {
        &self.pi1
    }

    pub fn pi2(&self) -> &Partition {
        &self.pi2
    }

    pub fn pi3(&self) -> &Partition {
        &self.pi3
    }

    pub fn weight(&self) -> usize {
        self.pi1.weight() + self.pi2.weight() + self.pi3.weight()
    }

    /// ω(π) = (−1)^{ℓ(π1) − 1}.
    pub fn sign(&self) -> i64 {
        if self.pi1.len() % 2 == 1 {
            1
        } else {
            -1
        }
    }

    /// r(π) = ℓ(π2) − ℓ(π3).
    pub fn crank(&self) -> i64 {
        self.pi2.len() as i64 - self.pi3.len() as i64
    }
}

impl std::fmt::Display for SPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.pi1, self.pi2, self.pi3)
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Capacity {
            what: "S-partition enumeration",
            n,
            cap,
            hint: "use the Dyson recurrence or count doubly marked partitions instead",
        });
    }
    Ok(())
}

fn bounded_below(weight: usize, min_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for_each_partition_bounded(weight, weight, min_part, &mut |parts| {
        out.push(Partition::from_decreasing(parts.to_vec()))
    });
    out
}

/// Visits every S-partition of weight `n`, iterating over the weight split
/// |π1| + |π2| + |π3| = n and the smallest part of π1.
pub fn for_each_s_partition<F>(n: usize, cap: usize, mut f: F) -> Result<()>
where
    F: FnMut(&SPartition),
{
    check_cap(n, cap)?;
    for w1 in 1..=n {
        let mut firsts = Vec::new();
        for_each_distinct_partition(w1, 1, &mut |parts| {
            firsts.push(Partition::from_decreasing(parts.to_vec()))
        });
        for pi1 in firsts {
            let s1 = pi1.parts().last().copied().expect("π1 is nonempty");
            for w2 in 0..=n - w1 {
                let seconds = bounded_below(w2, s1);
                let thirds = bounded_below(n - w1 - w2, s1);
                for pi2 in &seconds {
                    for pi3 in &thirds {
                        f(&SPartition {
                            pi1: pi1.clone(),
                            pi2: pi2.clone(),
                            pi3: pi3.clone(),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn s_partitions(n: usize, cap: usize) -> Result<Vec<SPartition>> {
    let mut out = Vec::new();
    for_each_s_partition(n, cap, |pi| out.push(pi.clone()))?;
    Ok(out)
}

/// Net number of S-partitions of `n` per spt-crank, N_S(m, n).
///
/// Values are kept signed so a wrong enumeration shows up as a negative
/// entry instead of being clamped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NetCrankTable {
    pub n: usize,
    #[serde(rename = "counts")]
    pub net: BTreeMap<i64, i64>,
}

impl NetCrankTable {
    pub fn from_counts(n: usize, net: BTreeMap<i64, i64>) -> Self {
        let net = net.into_iter().filter(|&(_, v)| v != 0).collect();
        NetCrankTable { n, net }
    }

    pub fn get(&self, m: i64) -> i64 {
        self.net.get(&m).copied().unwrap_or(0)
    }

    pub fn total(&self) -> i64 {
        self.net.values().sum()
    }

    /// N_S(k, t, n).
    pub fn residue_sum(&self, k: u64, t: u64) -> Result<i64> {
        check_residue(k, t)?;
        Ok(self
            .net
            .iter()
            .filter(|&(&m, _)| residue(m, t) == k)
            .map(|(_, &v)| v)
            .sum())
    }
}

pub fn s_partition_net_counts(n: usize) -> Result<NetCrankTable> {
    s_partition_net_counts_with_cap(n, DEFAULT_S_PARTITION_CAP)
}

pub fn s_partition_net_counts_with_cap(n: usize, cap: usize) -> Result<NetCrankTable> {
    let mut net = BTreeMap::new();
    for_each_s_partition(n, cap, |pi| {
        *net.entry(pi.crank()).or_insert(0) += pi.sign()
    })?;
    Ok(NetCrankTable::from_counts(n, net))
}

pub fn ns_mod(k: u64, t: u64, n: usize) -> Result<i64> {
    check_residue(k, t)?;
    s_partition_net_counts(n)?.residue_sum(k, t)
}

/// Dyson's recurrence
/// N_S(m,n) = Σ_{k≥1} (−1)^{k−1} Σ_{j=0}^{k−1} p(n − k(m+j) − k(k+1)/2),
/// with p of a negative argument read as 0.
pub fn ns_recurrence(m: i64, n: usize) -> BigInt {
    let n = n as i64;
    // the j = 0 argument is the largest for each k and is concave in k,
    // so the sum ends once it is negative past its maximum at k ≈ −m
    let arg = |k: i64, j: i64| n - k * (m + j) - k * (k + 1) / 2;
    let mut ks = Vec::new();
    let mut k = 1;
    loop {
        if arg(k, 0) < 0 && k > -m {
            break;
        }
        ks.push(k);
        k += 1;
    }
    let max_arg = ks.iter().map(|&k| arg(k, 0)).max().unwrap_or(-1).max(0);
    let p: Vec<BigUint> = partition_counts(max_arg as usize);
    let mut total = BigInt::from(0);
    for k in ks {
        let mut inner = BigInt::from(0);
        for j in 0..k {
            let x = arg(k, j);
            if x >= 0 {
                inner += BigInt::from(p[x as usize].clone());
            }
        }
        if k % 2 == 1 {
            total += inner;
        } else {
            total -= inner;
        }
    }
    total
}
