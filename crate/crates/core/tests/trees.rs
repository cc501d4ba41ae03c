mod common;

use rdrd::analysis::{classify_tree, Classification};
use rdrd::exact;
use rdrd::graph::random_tree;
use rdrd::labelings::is_rdrd;
use rdrd::tree_dp::{gamma_rdrd_tree, gamma_rdrd_tree_rooted};

#[test]
fn dp_matches_enumeration_on_all_small_trees() {
    for n in 1..=7 {
        for t in common::all_trees(n) {
            assert_eq!(
                gamma_rdrd_tree(&t).unwrap().value,
                common::naive_rdrd(&t),
                "{t:?}"
            );
        }
    }
}

#[test]
fn dp_matches_branch_and_bound_on_random_trees() {
    for i in 0..300u64 {
        let n = 1 + (i as usize % 18);
        let t = random_tree(n, i);
        let dp = gamma_rdrd_tree(&t).unwrap();
        let bb = exact::gamma_rdrd(&t, None).unwrap();
        assert_eq!(dp.value, bb.value, "{t:?}");
        let f = dp.witness.as_labeling().unwrap();
        assert!(is_rdrd(&t, f) && f.weight() == dp.value);
    }
}

#[test]
fn value_does_not_depend_on_root() {
    for i in 0..60u64 {
        let t = random_tree(2 + i as usize % 14, 1000 + i);
        let base = gamma_rdrd_tree(&t).unwrap().value;
        for r in 0..t.order() {
            let res = gamma_rdrd_tree_rooted(&t, r).unwrap();
            assert_eq!(res.value, base);
            assert!(is_rdrd(&t, res.witness.as_labeling().unwrap()));
        }
    }
}

/// The recognizers are checked against the DP on every tree up to order 12.
#[test]
fn tree_classes_match_dp_exhaustively() {
    let mut near = 0;
    for n in 2..=12 {
        for t in common::all_trees(n) {
            let v = gamma_rdrd_tree(&t).unwrap().value;
            let n = n as u32;
            let c = classify_tree(&t).unwrap().classification;
            assert!(v > n);
            assert_eq!(c == Classification::TreeStar, v == n + 1, "{c} {v} {t:?}");
            let is_near = matches!(c, Classification::TreeT1 | Classification::TreeT2);
            assert_eq!(is_near, v == n + 2, "{c} {v} {t:?}");
            near += is_near as usize;
        }
    }
    assert!(near > 50);
}

#[test]
fn enumerator_counts_match_known_tree_numbers() {
    let counts: Vec<usize> = (1..=10).map(|n| common::all_trees(n).len()).collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
}
