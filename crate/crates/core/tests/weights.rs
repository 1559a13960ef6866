use helberg::{build_weights, moment, offset_moment, symbol_window, BigInt, CodeParams, Symbol, WeightTable};
use num_traits::ToPrimitive;
use proptest::prelude::*;

/// Weights straight from the recursion, summing the window every time.
fn ref_weights(q: u32, d: usize, count: usize) -> Vec<i128> {
    let p = i128::from(q - 1);
    let mut w = vec![0i128];
    for i in 1..count {
        let window: i128 = (i.saturating_sub(d)..i).map(|j| w[j]).sum();
        w.push(1 + p * window);
    }
    w
}

fn as_i128(table: &WeightTable<BigInt>) -> Vec<i128> {
    table.values().iter().map(|v| v.to_i128().expect("fits")).collect()
}

fn params() -> impl Strategy<Value = (u32, usize)> {
    (2u32..=6, 1usize..=5)
}

fn word_for(q: u32, max_len: usize) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec(0..q as Symbol, 0..=max_len)
}

proptest! {
    #[test]
    fn weights_match_the_recursion((q, d) in params(), count in 1usize..30) {
        let table = build_weights::<BigInt>(q, d, count).unwrap();
        prop_assert_eq!(as_i128(&table), ref_weights(q, d, count));
        let p = i128::from(q - 1);
        let mut reach = 0;
        for (i, w) in ref_weights(q, d, count).into_iter().enumerate() {
            reach += if i == 0 { 0 } else { p * w };
            prop_assert_eq!(table.reach(i).to_i128(), Some(reach));
        }
    }

    #[test]
    fn bounded_and_unbounded_tables_agree((q, d) in params(), count in 1usize..25) {
        let big = build_weights::<BigInt>(q, d, count).unwrap();
        let small = build_weights::<i64>(q, d, count).unwrap();
        prop_assert_eq!(as_i128(&big), small.values().iter().map(|&v| i128::from(v)).collect::<Vec<_>>());
    }

    #[test]
    fn weight_exceeds_all_but_the_previous((q, d) in (2u32..=6, 2usize..=5), count in 2usize..30) {
        let w = ref_weights(q, d, count);
        let p = i128::from(q - 1);
        for c in 1..count {
            let below: i128 = w[1..c.max(2) - 1].iter().sum();
            prop_assert!(w[c] > p * below, "c = {}", c);
        }
    }

    #[test]
    fn moments_take_two_values_modulo((q, d) in (2u32..=6, 2usize..=5), n in 1usize..25) {
        let w = ref_weights(q, d, n + 2);
        let top: i128 = w[1..=n].iter().map(|v| i128::from(q - 1) * v).sum();
        prop_assert!(top < 2 * w[n + 1]);
    }

    #[test]
    fn last_window_dominates_the_reach((q, d) in (2u32..=6, 2usize..=5), n_prime in 2usize..25) {
        let w = ref_weights(q, d, n_prime + 1);
        let reach: i128 = w[1..n_prime].iter().map(|v| i128::from(q - 1) * v).sum();
        for j in (n_prime.saturating_sub(d) + 1).max(1)..n_prime {
            prop_assert!(w[n_prime] + w[j] > reach, "j = {}", j);
        }
    }

    #[test]
    fn moment_is_additive_over_concatenation(
        (q, d, s, t) in params().prop_flat_map(|(q, d)| (Just(q), Just(d), word_for(q, 10), word_for(q, 10)))
    ) {
        let table = build_weights::<BigInt>(q, d, 22).unwrap();
        let joined: Vec<Symbol> = s.iter().chain(&t).copied().collect();
        let whole = moment(&joined, &table).unwrap();
        prop_assert_eq!(whole, moment(&s, &table).unwrap() + offset_moment(&t, s.len(), &table));
    }

    #[test]
    fn moment_matches_reference((q, d, x) in params().prop_flat_map(|(q, d)| (Just(q), Just(d), word_for(q, 20)))) {
        let table = build_weights::<BigInt>(q, d, x.len() + 1).unwrap();
        let w = ref_weights(q, d, x.len() + 1);
        let expected: i128 = x.iter().enumerate().map(|(k, &s)| i128::from(s) * w[k + 1]).sum();
        prop_assert_eq!(moment(&x, &table).unwrap().to_i128(), Some(expected));
    }

    #[test]
    fn symbol_window_is_the_range_test((q, d) in (2u32..=4, 1usize..=3), i in 1usize..=5, m in -3i64..400) {
        let table = build_weights::<i64>(q, d, i + 1).unwrap();
        let w = ref_weights(q, d, i + 1);
        let expected: Vec<Symbol> = (0..q as Symbol).filter(|&g| in_range(i128::from(m), g, i, &w, q)).collect();
        let window = symbol_window(&m, i, &table);
        prop_assert_eq!(&window, &expected);
        if d >= 2 {
            prop_assert!(window.len() <= 2);
        }
    }
}

/// `g w_i <= m <= g w_i + p (w_1 + ... + w_{i-1})`.
fn in_range(m: i128, g: Symbol, i: usize, w: &[i128], q: u32) -> bool {
    let low = i128::from(g) * w[i];
    let reach: i128 = w[1..i].iter().map(|v| i128::from(q - 1) * v).sum();
    low <= m && m <= low + reach
}

#[test]
fn every_residue_partitions_the_space() {
    for (n, d, q) in [(5, 2, 2), (4, 2, 3), (4, 3, 2), (3, 1, 3)] {
        let base = CodeParams::<i64>::new(n, d, q, 0).unwrap();
        let total: usize = (0..base.modulus)
            .map(|r| base.with_residue(r).unwrap().codebook().count())
            .sum();
        assert_eq!(total, (q as usize).pow(n as u32));
    }
}
