#![allow(dead_code)]

use std::collections::BTreeMap;

/// All partitions of n with parts at most `max`, by plain recursion.
pub fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions(n, n)
}

pub fn conj(parts: &[usize]) -> Vec<usize> {
    let width = parts.first().copied().unwrap_or(0);
    (1..=width)
        .map(|j| parts.iter().filter(|&&p| p >= j).count())
        .collect()
}

/// spt(n) straight from the definition.
pub fn spt(n: usize) -> u64 {
    all_partitions(n)
        .iter()
        .map(|p| {
            let last = *p.last().unwrap();
            p.iter().filter(|&&x| x == last).count() as u64
        })
        .sum()
}

pub fn p(n: usize) -> u64 {
    all_partitions(n).len() as u64
}

/// Doubly marked partitions of n by crank, from the raw definition.
pub fn q_counts(n: usize) -> BTreeMap<i64, u64> {
    let mut out = BTreeMap::new();
    for lam in all_partitions(n) {
        let c = conj(&lam);
        let durfee = (1..=lam.len()).filter(|&i| lam[i - 1] >= i).count();
        for s in 1..=durfee {
            for t in s..=lam[0] {
                if c[t - 1] != c[s - 1] {
                    continue;
                }
                let g = c[s - 1] - s + 1;
                let lam_g = lam.get(g - 1).copied().unwrap_or(0);
                let crank = g as i64 - lam_g as i64 + t as i64 - s as i64;
                *out.entry(crank).or_insert(0) += 1;
            }
        }
    }
    out
}

/// N_S(m, n) by a direct triple loop over (π1, π2, π3).
pub fn ns_brute(n: usize) -> BTreeMap<i64, i64> {
    let mut out = BTreeMap::new();
    for w1 in 1..=n {
        for pi1 in all_partitions(w1) {
            if pi1.windows(2).any(|w| w[0] == w[1]) {
                continue;
            }
            let s1 = *pi1.last().unwrap();
            let sign = if pi1.len() % 2 == 1 { 1 } else { -1 };
            for w2 in 0..=n - w1 {
                let ok = |q: &Vec<usize>| q.last().is_none_or(|&x| x >= s1);
                let seconds: Vec<_> = all_partitions(w2).into_iter().filter(ok).collect();
                let thirds: Vec<_> = all_partitions(n - w1 - w2).into_iter().filter(ok).collect();
                for a in &seconds {
                    for b in &thirds {
                        *out.entry(a.len() as i64 - b.len() as i64).or_insert(0) += sign;
                    }
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}
