mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use proptest::prelude::*;
use sptlab_core::doubly_marked::{crank_counts, enumerate_v, v_cell};
use sptlab_core::qseries::{
    gaussian_binomial, gf_ns, gf_spt, gf_spt_alt, gf_v_cell, pochhammer, series_inverse, Terms,
    DEFAULT_ORDER,
};
use sptlab_core::spt::ns_recurrence;
use sptlab_core::TruncatedSeries;

#[test]
fn spt_series_agree_and_match_enumeration() {
    let direct = gf_spt(DEFAULT_ORDER);
    let alt = gf_spt_alt(DEFAULT_ORDER);
    assert_eq!(direct, alt);
    assert!(direct.coeff(0) == BigInt::from(0));
    for n in 1..=DEFAULT_ORDER {
        let expected = if n <= 22 {
            common::spt(n)
        } else {
            sptlab_core::spt::spt_weighted(n)
        };
        assert_eq!(direct.coeff(n), BigInt::from(expected), "n = {n}");
    }
}

#[test]
fn net_crank_series_match_counts() {
    let order = 30;
    let counts: Vec<BTreeMap<i64, u64>> = (0..=order).map(crank_counts).collect();
    for m in -10i64..=10 {
        let series = gf_ns(m, order);
        assert_eq!(series.coeff(0), BigInt::from(0));
        for (n, table) in counts.iter().enumerate().skip(1) {
            let q = table.get(&m).copied().unwrap_or(0);
            assert_eq!(series.coeff(n), BigInt::from(q), "m = {m}, n = {n}");
            assert_eq!(series.coeff(n), ns_recurrence(m, n), "m = {m}, n = {n}");
        }
    }
}

#[test]
fn crank_slices_sum_to_spt() {
    let order = 20;
    let spt = gf_spt(order);
    let mut total = TruncatedSeries::zero(order);
    for m in -(order as i64)..=(order as i64) {
        total = total.add(&gf_ns(m, order)).unwrap();
    }
    assert_eq!(total, spt);
}

#[test]
fn cells_count_their_pairs() {
    let order = 16;
    for m in -3i64..=3 {
        let mut by_cell: BTreeMap<(usize, usize, usize), u64> = BTreeMap::new();
        for n in 1..=order {
            for pair in enumerate_v(m, n) {
                let cell = v_cell(pair.alpha(), m).unwrap();
                *by_cell.entry((cell.j, cell.h, n)).or_insert(0) += 1;
            }
        }
        for j in 0..=5 {
            for h in 0..=j {
                let series = gf_v_cell(m, j, h, order).unwrap();
                for n in 1..=order {
                    let count = by_cell.get(&(j, h, n)).copied().unwrap_or(0);
                    assert_eq!(
                        series.coeff(n),
                        BigInt::from(count),
                        "m = {m}, j = {j}, h = {h}, n = {n}"
                    );
                }
            }
        }
    }
}

#[test]
fn cells_resum_to_the_slice() {
    let order = 20;
    let mut total = TruncatedSeries::zero(order);
    for j in 0..=order {
        for h in 0..=j {
            total = total.add(&gf_v_cell(1, j, h, order).unwrap()).unwrap();
        }
    }
    assert_eq!(total, gf_ns(1, order));
    let corner = gf_v_cell(0, 0, 0, order).unwrap();
    assert!((1..=order).all(|n| corner.coeff(n) == BigInt::from(1)));
}

/// Partitions of w fitting in a rows × cols box.
fn box_count(w: usize, rows: usize, cols: usize) -> u64 {
    common::all_partitions(w)
        .iter()
        .filter(|p| p.len() <= rows && p.first().is_none_or(|&x| x <= cols))
        .count() as u64
}

#[test]
fn gaussian_binomials_count_boxed_partitions() {
    for top in 0..=8 {
        for bottom in 0..=top {
            let g = gaussian_binomial(top, bottom, 20).unwrap();
            for w in 0..=20 {
                assert_eq!(
                    g.coeff(w),
                    BigInt::from(box_count(w, bottom, top - bottom)),
                    "[{top} choose {bottom}] at q^{w}"
                );
            }
        }
    }
}

proptest! {
    #[test]
    fn pochhammer_inverts_exactly(k in 0usize..12, shift in 1usize..6, order in 1usize..40) {
        let f = pochhammer(Terms::Finite(k), shift, order).unwrap();
        let inv = series_inverse(&f).unwrap();
        prop_assert_eq!(f.mul(&inv).unwrap(), TruncatedSeries::one(order));
        let infinite = pochhammer(Terms::Infinite, shift, order).unwrap();
        let inv = series_inverse(&infinite).unwrap();
        prop_assert_eq!(inv.mul(&infinite).unwrap(), TruncatedSeries::one(order));
    }

    #[test]
    fn unit_series_invert(coeffs in prop::collection::vec(-5i64..5, 1..12), negate in any::<bool>()) {
        let order = 15;
        let mut c = coeffs;
        c[0] = if negate { -1 } else { 1 };
        let f = TruncatedSeries::from_coeffs(c, order);
        let inv = f.inverse().unwrap();
        prop_assert_eq!(f.mul(&inv).unwrap(), TruncatedSeries::one(order));
    }

    #[test]
    fn json_round_trip(coeffs in prop::collection::vec(any::<i64>(), 1..10)) {
        let f = TruncatedSeries::from_coeffs(coeffs.clone(), coeffs.len() - 1);
        let json = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<TruncatedSeries>(&json).unwrap(), f);
    }
}
