use helberg::{
    compute_v, compute_v_naive, delete_at, indel_distance, insert_at, is_subsequence, lcs_length, Symbol, VValue,
};
use proptest::prelude::*;

/// Exponential LCS by first-symbol recursion.
fn ref_lcs(a: &[Symbol], b: &[Symbol]) -> usize {
    match (a.split_first(), b.split_first()) {
        (Some((x, ra)), Some((y, rb))) => {
            if x == y {
                1 + ref_lcs(ra, rb)
            } else {
                ref_lcs(ra, b).max(ref_lcs(a, rb))
            }
        }
        _ => 0,
    }
}

fn word(q: Symbol, max_len: usize) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec(0..q, 0..=max_len)
}

proptest! {
    #[test]
    fn lcs_matches_reference(a in word(3, 9), b in word(3, 9)) {
        prop_assert_eq!(lcs_length(&a, &b), ref_lcs(&a, &b));
    }

    #[test]
    fn lcs_is_symmetric_and_bounded(a in word(4, 30), b in word(4, 30)) {
        let l = lcs_length(&a, &b);
        prop_assert_eq!(l, lcs_length(&b, &a));
        prop_assert!(l <= a.len().min(b.len()));
        prop_assert_eq!(indel_distance(&a, &b), a.len() + b.len() - 2 * l);
        prop_assert_eq!(is_subsequence(&a, &b), l == a.len());
    }

    #[test]
    fn lcs_triangle(s in word(3, 15), s1 in word(3, 15), s2 in word(3, 15)) {
        prop_assert!(s.len() + lcs_length(&s1, &s2) >= lcs_length(&s, &s1) + lcs_length(&s, &s2));
    }

    #[test]
    fn lcs_splits_at_every_cut(s1 in word(3, 12), s2 in word(3, 12), cut in 0usize..=12) {
        let i = cut.min(s1.len());
        let total = lcs_length(&s1, &s2);
        let split = (0..=s2.len()).any(|j| lcs_length(&s1[..i], &s2[..j]) + lcs_length(&s1[i..], &s2[j..]) == total);
        prop_assert!(split);
    }

    #[test]
    fn lcs_trimming_bounds(s1 in word(3, 15), s2 in word(3, 15), j in 0usize..6) {
        let total = lcs_length(&s1, &s2);
        let head = |s: &[Symbol]| s[..s.len().saturating_sub(j)].to_vec();
        let tail = |s: &[Symbol]| s[j.min(s.len())..].to_vec();
        prop_assert!(total <= j + lcs_length(&head(&s1), &head(&s2)));
        prop_assert!(total <= j + lcs_length(&tail(&s1), &tail(&s2)));
        prop_assert!(total <= j + lcs_length(&head(&s1), &s2));
        prop_assert!(total <= j + lcs_length(&tail(&s1), &s2));
    }

    #[test]
    fn v_matches_naive(c in word(3, 8), y in word(3, 14), threshold in 0usize..10) {
        prop_assert_eq!(compute_v(&c, &y, threshold), compute_v_naive(&c, &y, threshold));
    }

    #[test]
    fn v_is_the_least_suffix_reaching_the_threshold(c in word(3, 8), y in word(3, 14), threshold in 0usize..10) {
        match compute_v(&c, &y, threshold) {
            VValue::Finite(v) => {
                prop_assert!(lcs_length(&c, &y[y.len() - v..]) >= threshold);
                if v > 0 {
                    prop_assert!(lcs_length(&c, &y[y.len() - v + 1..]) < threshold);
                }
            }
            VValue::Unreachable => prop_assert!(lcs_length(&c, &y) < threshold),
        }
    }

    #[test]
    fn v_grows_with_the_threshold(c in word(3, 8), y in word(3, 14), threshold in 0usize..9) {
        prop_assert!(compute_v(&c, &y, threshold) <= compute_v(&c, &y, threshold + 1));
    }

    #[test]
    fn insert_then_delete_round_trips(s in word(4, 12), pos in 1usize..=13, sym in 0 as Symbol..4) {
        let j = pos.min(s.len() + 1);
        let grown = insert_at(&s, j, sym).unwrap();
        prop_assert_eq!(grown.len(), s.len() + 1);
        prop_assert_eq!(grown.at(j), sym);
        prop_assert_eq!(delete_at(&grown, j).unwrap().into_symbols(), s);
    }
}

#[test]
fn positions_outside_the_word_are_rejected() {
    assert!(delete_at(&[0, 1], 0).is_err());
    assert!(delete_at(&[0, 1], 3).is_err());
    assert!(insert_at(&[0, 1], 4, 1).is_err());
    assert!(insert_at(&[], 1, 1).is_ok());
}
