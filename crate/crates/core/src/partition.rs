//! Ordinary partitions, their enumeration, and Ferrers-diagram statistics.
//!
//! Parts are stored weakly decreasing with no zero entries. Every indexed
//! accessor is 1-based and reads absent parts as 0, so `part(ℓ + 1) == 0`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of a nonnegative integer.
///
/// The derived ordering is lexicographic on the parts, so reverse-lexicographic
/// enumeration order is descending in this ordering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// The smallest part of a partition, with `Infinity` for the empty partition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SmallestPart {
    Finite(usize),
    Infinity,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; a zero followed by a positive part is rejected.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(Error::domain(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary-order nonnegative parts by sorting.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub(crate) fn from_decreasing(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let mut p = Partition { parts };
        while p.parts.last() == Some(&0) {
            p.parts.pop();
        }
        p
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// λ_i with 1-based `i`; 0 when `i` is 0 or past the last part.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// λ_1, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.part(1)
    }

    /// λ'_j: the number of parts that are at least `j`.
    pub fn conjugate_part(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        // parts are decreasing, so the count is a partition point
        self.parts.partition_point(|&p| p >= j)
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|j| self.conjugate_part(j))
            .collect();
        Partition { parts }
    }

    /// Side of the Durfee square, D(λ).
    pub fn durfee_side(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    /// Width of the m-Durfee rectangle: the largest `j` such that an
    /// `(m + j) × j` rectangle with at least one row fits in the diagram,
    /// and 0 when none does (in particular whenever ℓ(λ) ≤ m).
    pub fn m_durfee_width(&self, m: i64) -> usize {
        let len = self.len() as i64;
        let mut width = 0;
        for j in 1..=self.largest() as i64 {
            let rows = m + j;
            if rows >= 1 && rows <= len && self.part(rows as usize) as i64 >= j {
                width = j as usize;
            }
        }
        width
    }

    /// λ_1 − ℓ(λ). The rank of the empty partition is undefined.
    pub fn rank(&self) -> Result<i64> {
        if self.is_empty() {
            return Err(Error::domain("rank of the empty partition is undefined"));
        }
        Ok(self.largest() as i64 - self.len() as i64)
    }

    /// Membership in the rank-set `[−λ_1, 1 − λ_2, …, ℓ − 1 − λ_ℓ, ℓ, ℓ + 1, …]`.
    pub fn rank_set_contains(&self, m: i64) -> bool {
        self.rank_set_position(m).is_some()
    }

    /// The 1-based position `g` at which `m` occurs in the rank-set, i.e.
    /// `g − 1 − λ_g = m` with absent parts read as 0. The rank-set is
    /// strictly increasing, so the position is unique when it exists.
    pub fn rank_set_position(&self, m: i64) -> Option<usize> {
        let len = self.len() as i64;
        if m >= len {
            return Some(m as usize + 1);
        }
        self.parts
            .iter()
            .enumerate()
            .find(|&(i, &p)| i as i64 - p as i64 == m)
            .map(|(i, _)| i + 1)
    }

    pub fn smallest_part(&self) -> SmallestPart {
        match self.parts.last() {
            Some(&p) => SmallestPart::Finite(p),
            None => SmallestPart::Infinity,
        }
    }

    /// n_s(λ): occurrences of the smallest part (0 for the empty partition).
    pub fn smallest_multiplicity(&self) -> usize {
        match self.parts.last() {
            Some(&s) => self.parts.iter().rev().take_while(|&&p| p == s).count(),
            None => 0,
        }
    }

    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// True when all parts are equal (vacuously for the empty partition).
    pub fn is_rectangular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] == w[1])
    }

    /// Reverse-lexicographic comparison, the enumeration order.
    pub fn cmp_enumeration_order(&self, other: &Partition) -> Ordering {
        other.cmp(self)
    }
}

impl SmallestPart {
    pub fn finite(self) -> Option<usize> {
        match self {
            SmallestPart::Finite(p) => Some(p),
            SmallestPart::Infinity => None,
        }
    }
}

impl fmt::Display for SmallestPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SmallestPart::Finite(p) => write!(f, "{p}"),
            SmallestPart::Infinity => write!(f, "inf"),
        }
    }
}

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        let parts = parts
            .into_iter()
            .map(|p| usize::try_from(p).map_err(|_| Error::domain(format!("negative part {p}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Streams the partitions of `n` in reverse-lexicographic order, starting
/// from `(n)` and ending at `(1^n)`.
pub fn enumerate_partitions(n: usize) -> Partitions {
    Partitions {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        let mut parts = current.clone();
        let mut rest = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            rest += 1;
        }
        if let Some(last) = parts.pop() {
            let cap = last - 1;
            parts.push(cap);
            rest += 1;
            while rest >= cap {
                parts.push(cap);
                rest -= cap;
            }
            if rest > 0 {
                parts.push(rest);
            }
            self.next = Some(parts);
        }
        Some(Partition { parts: current })
    }
}

/// Visits every partition of `n` whose parts lie in `[min_part, max_part]`,
/// in reverse-lexicographic order.
pub fn for_each_partition_bounded<F>(n: usize, max_part: usize, min_part: usize, f: &mut F)
where
    F: FnMut(&[usize]),
{
    fn go<F: FnMut(&[usize])>(
        rest: usize,
        max_part: usize,
        min_part: usize,
        prefix: &mut Vec<usize>,
        f: &mut F,
    ) {
        if rest == 0 {
            f(prefix);
            return;
        }
        let hi = max_part.min(rest);
        let lo = min_part.max(1);
        for x in (lo..=hi).rev() {
            prefix.push(x);
            go(rest - x, x, min_part, prefix, f);
            prefix.pop();
        }
    }
    go(n, max_part, min_part, &mut Vec::new(), f);
}

/// Visits every partition of `n` into distinct parts, each at least
/// `min_part`, in reverse-lexicographic order.
pub fn for_each_distinct_partition<F>(n: usize, min_part: usize, f: &mut F)
where
    F: FnMut(&[usize]),
{
    fn go<F: FnMut(&[usize])>(
        rest: usize,
        max_part: usize,
        min_part: usize,
        prefix: &mut Vec<usize>,
        f: &mut F,
    ) {
        if rest == 0 {
            f(prefix);
            return;
        }
        let hi = max_part.min(rest);
        let lo = min_part.max(1);
        for x in (lo..=hi).rev() {
            prefix.push(x);
            go(rest - x, x - 1, min_part, prefix, f);
            prefix.pop();
        }
    }
    go(n, n, min_part, &mut Vec::new(), f);
}
