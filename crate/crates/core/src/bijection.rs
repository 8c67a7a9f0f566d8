//! The bijection Δ between marked partitions and doubly marked partitions.
//!
//! Δ seeds (μ', 1, k) in U_n and applies τ until the result is doubly
//! marked. τ is a bijection from U_n \ Q_n onto W_n with inverse σ, and
//! seeds never lie in W_n, so every orbit is a simple path that ends in Q_n.
//! Λ walks the same path backwards with σ.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::doubly_marked::{u_size, Classification, ColumnMarkedPartition, DoublyMarkedPartition};
use crate::error::{Error, Result};
use crate::partition::{Partition, SmallestPart};
use crate::rank::residue;
use crate::spt::{enumerate_marked, MarkedPartition};

/// Membership in W_n: a ≠ 1, or μ'_b exceeds the smallest part of μ'.
pub fn in_w(cmp: &ColumnMarkedPartition) -> bool {
    if cmp.s() != 1 {
        return true;
    }
    let mu = cmp.partition();
    // s(μ') = μ'_{μ_1}
    let smallest = mu.conjugate_part(mu.largest());
    mu.conjugate_part(cmp.t()) > smallest
}

/// τ: U_n \ Q_n → W_n.
pub fn tau(cmp: &ColumnMarkedPartition) -> Result<ColumnMarkedPartition> {
    if cmp.classify() != Classification::UOnly {
        return Err(Error::domain(format!(
            "τ is defined on U_n \\ Q_n only, got {cmp}"
        )));
    }
    let lambda = cmp.partition();
    let (s, t) = (cmp.s(), cmp.t());
    let height = lambda.conjugate_part(s);
    let p = (s..=lambda.largest())
        .take_while(|&q| lambda.conjugate_part(q) == height)
        .last()
        .expect("column s has height λ'_s");
    let cut = p - s + 1;

    let delta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &part)| if i < height { part - cut } else { part })
        .filter(|&part| part > 0)
        .collect();
    // a = min{a : δ_a < λ'_s}, reading absent parts as 0
    let a = delta.iter().take_while(|&&d| d >= height).count() + 1;

    let mut mu = Vec::with_capacity(delta.len() + cut);
    mu.extend_from_slice(&delta[..a - 1]);
    mu.extend(std::iter::repeat_n(height, cut));
    mu.extend_from_slice(&delta[a - 1..]);

    let b = if t < s { t } else { t + s - 1 - p };
    let image = ColumnMarkedPartition::new(Partition::new(mu)?, a, b)
        .map_err(|e| Error::invariant(format!("τ({cmp}) left U_n: {e}")))?;
    if image.weight() != cmp.weight() || !in_w(&image) {
        return Err(Error::invariant(format!(
            "τ({cmp}) = {image} is not in W_n"
        )));
    }
    Ok(image)
}

/// σ: W_n → U_n \ Q_n, the inverse of τ.
pub fn sigma(cmp: &ColumnMarkedPartition) -> Result<ColumnMarkedPartition> {
    if !in_w(cmp) {
        return Err(Error::domain(format!(
            "σ is defined on W_n only, got {cmp}"
        )));
    }
    let mu = cmp.partition();
    let (a, b) = (cmp.s(), cmp.t());
    let row = mu.part(a);
    let r = (a..=mu.len())
        .take_while(|&i| mu.part(i) == row)
        .last()
        .expect("row a has length μ_a");
    let cut = r - a + 1;

    let gamma: Vec<usize> = mu.parts()[..a - 1]
        .iter()
        .chain(&mu.parts()[r..])
        .copied()
        .collect();
    let gamma = Partition::new(gamma)?;
    let s = (1..)
        .find(|&s| gamma.conjugate_part(s) < row)
        .expect("γ' is eventually zero");
    let height = gamma.len().max(row);
    let lambda: Vec<usize> = (1..=height)
        .map(|i| gamma.part(i) + if i <= row { cut } else { 0 })
        .collect();
    let t = if b < s { b } else { b + cut };

    let image = ColumnMarkedPartition::new(Partition::new(lambda)?, s, t)
        .map_err(|e| Error::invariant(format!("σ({cmp}) left U_n: {e}")))?;
    if image.classify() != Classification::UOnly || image.weight() != cmp.weight() {
        return Err(Error::invariant(format!(
            "σ({cmp}) = {image} is not in U_n \\ Q_n"
        )));
    }
    Ok(image)
}

/// The sequence of column-marked partitions visited by Δ or Λ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitTrace {
    pub steps: Vec<ColumnMarkedPartition>,
}

impl OrbitTrace {
    /// Number of τ (or σ) applications.
    pub fn step_count(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }
}

/// Upper bound on orbit length for weight `n`: |U_n| + 1.
pub fn iteration_cap(n: usize) -> usize {
    u_size(n) + 1
}

/// The seed (μ', 1, k) of a marked partition.
pub fn seed(mp: &MarkedPartition) -> ColumnMarkedPartition {
    ColumnMarkedPartition::new(mp.partition().conjugate(), 1, mp.k())
        .expect("μ' has Durfee side ≥ 1 and μ'_1 = ℓ(μ) ≥ k")
}

/// Δ(μ, k) together with its orbit.
pub fn delta(mp: &MarkedPartition) -> Result<(DoublyMarkedPartition, OrbitTrace)> {
    delta_with_cap(mp, iteration_cap(mp.weight()))
}

pub fn delta_with_cap(
    mp: &MarkedPartition,
    cap: usize,
) -> Result<(DoublyMarkedPartition, OrbitTrace)> {
    let mut current = seed(mp);
    let mut steps = vec![current.clone()];
    while !current.is_doubly_marked() {
        if steps.len() > cap {
            return Err(Error::invariant(format!(
                "Δ({mp}) did not terminate within {cap} steps"
            )));
        }
        current = tau(&current)?;
        steps.push(current.clone());
    }
    let dmp = DoublyMarkedPartition::try_from(current)?;
    Ok((dmp, OrbitTrace { steps }))
}

/// Λ(λ, s, t) together with its orbit (from the input back to the seed).
pub fn lambda_inv(dmp: &DoublyMarkedPartition) -> Result<(MarkedPartition, OrbitTrace)> {
    lambda_inv_with_cap(dmp, iteration_cap(dmp.weight()))
}

pub fn lambda_inv_with_cap(
    dmp: &DoublyMarkedPartition,
    cap: usize,
) -> Result<(MarkedPartition, OrbitTrace)> {
    let mut current = dmp.as_columns().clone();
    let mut steps = vec![current.clone()];
    while in_w(&current) {
        if steps.len() > cap {
            return Err(Error::invariant(format!(
                "Λ({dmp}) did not terminate within {cap} steps"
            )));
        }
        current = sigma(&current)?;
        steps.push(current.clone());
    }
    // outside W_n means s = 1 and λ'_t is the smallest part of λ'
    let conj = current.partition().conjugate();
    debug_assert_eq!(current.s(), 1);
    debug_assert_eq!(
        conj.smallest_part(),
        SmallestPart::Finite(conj.part(current.t()))
    );
    let mp = MarkedPartition::new(conj, current.t())
        .map_err(|e| Error::invariant(format!("Λ({dmp}) ended off a seed: {e}")))?;
    Ok((mp, OrbitTrace { steps }))
}

/// One marked partition with its Δ image and spt-crank.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMember {
    pub marked: MarkedPartition,
    pub dmp: DoublyMarkedPartition,
    pub crank: i64,
}

/// Δ applied to every marked partition of `n`, in marked-partition order.
pub fn delta_table(n: usize) -> Result<Vec<ClassMember>> {
    let cap = iteration_cap(n);
    enumerate_marked(n)
        .map(|marked| {
            let (dmp, _) = delta_with_cap(&marked, cap)?;
            let crank = dmp.crank();
            Ok(ClassMember { marked, dmp, crank })
        })
        .collect()
}

/// Marked partitions of `n` bucketed by the spt-crank of their Δ image mod t.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrankClassReport {
    pub n: usize,
    pub modulus: u64,
    pub classes: BTreeMap<u64, Vec<ClassMember>>,
}

impl CrankClassReport {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.values().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.sizes().iter().sum()
    }

    pub fn is_equinumerous(&self) -> bool {
        self.sizes().windows(2).all(|w| w[0] == w[1])
    }
}

pub fn crank_classes(n: usize, modulus: u64) -> Result<CrankClassReport> {
    if n == 0 {
        return Err(Error::domain("crank classes need n >= 1"));
    }
    if modulus == 0 {
        return Err(Error::domain("modulus must be at least 1"));
    }
    let mut classes: BTreeMap<u64, Vec<ClassMember>> =
        (0..modulus).map(|r| (r, Vec::new())).collect();
    for member in delta_table(n)? {
        classes
            .get_mut(&residue(member.crank, modulus))
            .expect("every residue has a bucket")
            .push(member);
    }
    Ok(CrankClassReport {
        n,
        modulus,
        classes,
    })
}
