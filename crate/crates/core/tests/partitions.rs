mod common;

use proptest::prelude::*;
use sptlab_core::partition::enumerate_partitions;
use sptlab_core::rank::{partition_counts, rank_counts};
use sptlab_core::Partition;

fn partition_strategy(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=12, 0..=max_weight).prop_map(Partition::from_unsorted)
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(lam in partition_strategy(14)) {
        prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
        prop_assert_eq!(lam.conjugate().weight(), lam.weight());
        prop_assert_eq!(lam.conjugate().into_parts(), common::conj(lam.parts()));
    }

    #[test]
    fn rank_flips_under_conjugation(lam in partition_strategy(14)) {
        prop_assume!(!lam.is_empty());
        prop_assert_eq!(lam.conjugate().rank().unwrap(), -lam.rank().unwrap());
    }

    #[test]
    fn durfee_square_is_zero_durfee_rectangle(lam in partition_strategy(14)) {
        prop_assert_eq!(lam.durfee_side(), lam.m_durfee_width(0));
        prop_assert_eq!(lam.durfee_side(), lam.conjugate().durfee_side());
    }

    #[test]
    fn rank_set_matches_durfee_rectangles(lam in partition_strategy(14), m in -14i64..14) {
        let listed: Vec<i64> = (1..=lam.len() + 1)
            .map(|i| i as i64 - 1 - lam.part(i) as i64)
            .collect();
        let expected = listed.contains(&m) || m >= lam.len() as i64;
        prop_assert_eq!(lam.rank_set_contains(m), expected);
        if let Some(g) = lam.rank_set_position(m) {
            prop_assert_eq!(g as i64 - 1 - lam.part(g) as i64, m);
            if g >= 2 {
                prop_assert_eq!(lam.m_durfee_width(m), lam.part(g));
            }
        }
    }

    #[test]
    fn json_round_trip(lam in partition_strategy(14)) {
        let json = serde_json::to_string(&lam).unwrap();
        let back: Partition = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, lam);
    }
}

#[test]
fn enumeration_matches_pentagonal_recurrence() {
    let p = partition_counts(30);
    for (n, count) in p.iter().enumerate() {
        let listed: Vec<Partition> = enumerate_partitions(n).collect();
        assert_eq!(num_bigint::BigUint::from(listed.len()), *count, "n = {n}");
        assert!(listed.iter().all(|lam| lam.weight() == n));
        assert!(listed.windows(2).all(|w| w[0] > w[1]), "order at n = {n}");
    }
}

#[test]
fn enumeration_matches_recursive_oracle() {
    for n in 0..=16 {
        let ours: Vec<Vec<usize>> = enumerate_partitions(n).map(Partition::into_parts).collect();
        assert_eq!(ours, common::all_partitions(n), "n = {n}");
    }
}

#[test]
fn rank_distribution_is_symmetric() {
    for n in 1..=25 {
        let table = rank_counts(n).unwrap();
        for (&m, &c) in &table.counts {
            assert_eq!(table.count(-m), c, "N({m}, {n})");
        }
        assert_eq!(table.total(), common::p(n));
    }
}
