//! Dyson rank statistics: N(m,n), residue counts, rank moments, p(n), the
//! second-moment formula for spt, and the mod-13 residue identities.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::enumerate_partitions;

/// Canonical residue of `m` modulo `t`, in `[0, t)`.
pub fn residue(m: i64, t: u64) -> u64 {
    m.rem_euclid(t as i64) as u64
}

/// Number of partitions of `n` with each rank, from full enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankTable {
    pub n: usize,
    pub counts: BTreeMap<i64, u64>,
}

impl RankTable {
    /// N(m, n).
    pub fn count(&self, m: i64) -> u64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// N(i, t, n): partitions whose rank is congruent to `i` mod `t`.
    pub fn residue_count(&self, i: u64, t: u64) -> Result<u64> {
        check_residue(i, t)?;
        Ok(self
            .counts
            .iter()
            .filter(|&(&m, _)| residue(m, t) == i)
            .map(|(_, &c)| c)
            .sum())
    }

    /// Σ_m m^k N(m, n).
    pub fn moment(&self, k: u32) -> BigInt {
        self.counts
            .iter()
            .map(|(&m, &c)| BigInt::from(m).pow(k) * BigInt::from(c))
            .sum()
    }
}

pub(crate) fn check_residue(i: u64, t: u64) -> Result<()> {
    if t == 0 {
        return Err(Error::domain("modulus must be at least 1"));
    }
    if i >= t {
        return Err(Error::domain(format!(
            "residue {i} out of range for modulus {t}"
        )));
    }
    Ok(())
}

pub fn rank_counts(n: usize) -> Result<RankTable> {
    if n == 0 {
        return Err(Error::domain(
            "rank counts need n >= 1; the rank of ∅ is undefined",
        ));
    }
    let mut counts = BTreeMap::new();
    for lambda in enumerate_partitions(n) {
        *counts.entry(lambda.rank()?).or_insert(0) += 1;
    }
    Ok(RankTable { n, counts })
}

pub fn rank_count_mod(i: u64, t: u64, n: usize) -> Result<u64> {
    check_residue(i, t)?;
    rank_counts(n)?.residue_count(i, t)
}

pub fn rank_moment(k: u32, n: usize) -> Result<BigInt> {
    Ok(rank_counts(n)?.moment(k))
}

/// p(0), …, p(n) by Euler's pentagonal-number recurrence.
pub fn partition_counts(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = Vec::with_capacity(n + 1);
    p.push(BigInt::from(1));
    for k in 1..=n {
        let mut acc = BigInt::zero();
        for i in 1.. {
            let first = i * (3 * i - 1) / 2;
            if first > k {
                break;
            }
            let second = i * (3 * i + 1) / 2;
            let mut term = p[k - first].clone();
            if second <= k {
                term += &p[k - second];
            }
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|v| v.to_biguint().expect("p(n) is nonnegative"))
        .collect()
}

pub fn partition_count(n: usize) -> BigUint {
    partition_counts(n).pop().expect("table holds p(n)")
}

/// p(n) by walking the reverse-lexicographic enumeration.
pub fn partition_count_by_enumeration(n: usize) -> u64 {
    enumerate_partitions(n).count() as u64
}

/// spt(n) = n·p(n) − N_2(n)/2.
pub fn spt_via_moments(n: usize) -> Result<u64> {
    let table = rank_counts(n)?;
    let second = table.moment(2);
    if second.sign() == Sign::Minus || (&second % 2u32) != BigInt::zero() {
        return Err(Error::invariant(format!("N_2({n}) = {second} is not even")));
    }
    let p = BigInt::from_biguint(Sign::Plus, partition_count(n));
    let value: BigInt = BigInt::from(n) * p - second / 2;
    value
        .to_u64()
        .ok_or_else(|| Error::invariant(format!("spt({n}) = {value} does not fit a u64")))
}

/// Coefficient data for the mod-13 rank identities at one power q^{13·n_index}.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObrienVector {
    pub d: usize,
    pub n_index: usize,
    /// N(a, 13, 13·n_index + d) for a = 0..12.
    pub residue_counts: [u64; 13],
    /// S_1(d), …, S_5(d) at this coefficient.
    pub s: [i64; 5],
}

impl ObrienVector {
    pub fn weight(&self) -> usize {
        13 * self.n_index + self.d
    }

    /// r_{a,b}(d) at this coefficient.
    pub fn r(&self, a: usize, b: usize) -> i64 {
        self.residue_counts[a] as i64 - self.residue_counts[b] as i64
    }

    /// S_1 + 2·S_2 − 5·S_5.
    pub fn first_sum(&self) -> i64 {
        self.s[0] + 2 * self.s[1] - 5 * self.s[4]
    }

    /// S_2 + 5·S_3 + 3·S_4 + 3·S_5.
    pub fn second_sum(&self) -> i64 {
        self.s[1] + 5 * self.s[2] + 3 * self.s[3] + 3 * self.s[4]
    }

    pub fn holds(&self) -> (bool, bool) {
        (self.first_sum() % 13 == 0, self.second_sum() % 13 == 0)
    }
}

pub fn obrien_vector(d: usize, n_index: usize) -> Result<ObrienVector> {
    let weight = 13 * n_index + d;
    let table = rank_counts(weight)?;
    let mut residue_counts = [0u64; 13];
    for (a, slot) in residue_counts.iter_mut().enumerate() {
        *slot = table.residue_count(a as u64, 13)?;
    }
    let r = |a: usize, b: usize| residue_counts[a] as i64 - residue_counts[b] as i64;
    let mut s = [0i64; 5];
    for (idx, slot) in s.iter_mut().enumerate() {
        let i = idx + 1;
        *slot = r(i - 1, i) - (7 - i as i64) * r(5, 6);
    }
    Ok(ObrienVector {
        d,
        n_index,
        residue_counts,
        s,
    })
}

/// Whether both mod-13 identities hold at q^{13·n_index} for d = 6.
pub fn obrien_check(n_index: usize) -> Result<(bool, bool)> {
    Ok(obrien_vector(6, n_index)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_tables() {
        let four = rank_counts(4).unwrap();
        let expected: BTreeMap<i64, u64> = [(3, 1), (1, 1), (0, 1), (-1, 1), (-3, 1)].into();
        assert_eq!(four.counts, expected);
        assert_eq!(rank_counts(1).unwrap().counts, [(0, 1)].into());
        assert_eq!(rank_counts(2).unwrap().counts, [(1, 1), (-1, 1)].into());
        assert!(rank_counts(0).is_err());
    }

    #[test]
    fn residue_counts() {
        for i in 0..5 {
            assert_eq!(rank_count_mod(i, 5, 4).unwrap(), 1);
        }
        assert_eq!(rank_count_mod(0, 7, 5).unwrap(), 1);
        assert_eq!(rank_count_mod(0, 1, 4).unwrap(), 5);
        assert!(rank_count_mod(5, 5, 4).is_err());
        assert!(rank_count_mod(0, 0, 4).is_err());
    }

    #[test]
    fn moments() {
        assert_eq!(rank_moment(2, 4).unwrap(), BigInt::from(20));
        for n in 1..=20 {
            assert!(rank_moment(1, n).unwrap().is_zero());
            assert_eq!(
                rank_moment(0, n).unwrap(),
                BigInt::from(partition_count_by_enumeration(n))
            );
        }
    }

    #[test]
    fn partition_function() {
        assert_eq!(partition_count(0), BigUint::from(1u32));
        assert_eq!(partition_count(4), BigUint::from(5u32));
        assert_eq!(partition_count(9), BigUint::from(30u32));
        let table = partition_counts(30);
        for (n, p) in table.iter().enumerate() {
            assert_eq!(*p, BigUint::from(partition_count_by_enumeration(n)));
        }
        // p(100) = 190569292
        assert_eq!(partition_count(100), BigUint::from(190_569_292u64));
    }

    #[test]
    fn spt_from_second_moment() {
        assert_eq!(spt_via_moments(4).unwrap(), 10);
        assert_eq!(spt_via_moments(5).unwrap(), 14);
        assert_eq!(spt_via_moments(1).unwrap(), 1);
    }

    #[test]
    fn obrien_at_weight_six() {
        let v = obrien_vector(6, 0).unwrap();
        assert_eq!(v.s, [-7, -4, -4, -2, -3]);
        assert_eq!(v.first_sum(), 0);
        assert_eq!(v.second_sum(), -39);
        for i in 1..=5 {
            assert_eq!(v.s[i - 1], v.r(i - 1, i) - (7 - i as i64) * v.r(5, 6));
        }
        assert_eq!(obrien_check(0).unwrap(), (true, true));
        assert_eq!(obrien_check(1).unwrap(), (true, true));
    }

    #[test]
    fn json_keys_are_signed_strings() {
        let json = serde_json::to_string(&rank_counts(2).unwrap()).unwrap();
        assert_eq!(json, r#"{"n":2,"counts":{"-1":1,"1":1}}"#);
        let back: RankTable = serde_json::from_str(&json).unwrap();
        assert_eq!(back.count(-1), 1);
    }
}
