use std::collections::HashMap;

use autoseq::numeration::{self, DigitWord, NumerationSystem, Order};
use proptest::prelude::*;

fn systems() -> Vec<NumerationSystem> {
    vec![
        NumerationSystem::msd(2),
        NumerationSystem::lsd(2),
        NumerationSystem::msd(3),
        NumerationSystem::lsd(10),
        NumerationSystem::fibonacci(Order::Msd),
        NumerationSystem::fibonacci(Order::Lsd),
    ]
}

#[test]
fn round_trip_below_2_pow_20() {
    for sys in systems() {
        let mut prev_len = 0;
        for n in 0..1u64 << 20 {
            let w = sys.repr(n);
            assert_eq!(sys.value(&w.digits), Ok(n), "{sys} n = {n}");
            assert!(w.len() >= prev_len, "{sys} length drops at {n}");
            prev_len = w.len();
        }
    }
}

#[test]
fn canonical_words_are_canonical() {
    for sys in systems() {
        for n in 0..5000u64 {
            let w = sys.repr(n);
            assert!(sys.is_canonical(&w.digits));
            let lead = match sys.order {
                Order::Msd => w.digits.first(),
                Order::Lsd => w.digits.last(),
            };
            assert_ne!(lead, Some(&0), "{sys} n = {n}");
            if sys.is_fibonacci() {
                assert!(!w.digits.windows(2).any(|p| p == [1, 1]));
            }
        }
    }
}

/// Every `n < 2^20` is hit by exactly one no-11 word starting with 1.
#[test]
fn zeckendorf_uniqueness_by_enumeration() {
    let sys = NumerationSystem::fibonacci(Order::Msd);
    let limit = 1u64 << 20;
    let mut hits: HashMap<u64, u32> = HashMap::new();
    // words ending in 0 / in 1, grown one digit at a time, tracked by value
    let mut frontier: Vec<(Vec<u32>, u64)> = vec![(vec![1], 1)];
    hits.insert(0, 1);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (w, v) in frontier {
            *hits.entry(v).or_default() += 1;
            for d in [0u32, 1] {
                if d == 1 && *w.last().unwrap() == 1 {
                    continue;
                }
                let mut x = w.clone();
                x.push(d);
                let value = sys.value(&x).unwrap();
                if value < limit {
                    next.push((x, value));
                }
            }
        }
        frontier = next;
    }
    assert_eq!(hits.len() as u64, limit);
    assert!(hits.values().all(|&c| c == 1));
}

#[test]
fn free_functions_respect_word_order() {
    let msd = NumerationSystem::msd(2);
    let w = numeration::repr(13, NumerationSystem::lsd(2));
    assert_eq!(w.to_string(), "1011");
    assert_eq!(numeration::value(&w, msd), Ok(13));
    assert!(numeration::is_canonical(&DigitWord::default(), msd));
    assert_eq!(numeration::repr(0, msd).to_string(), "ε");
}

proptest! {
    #[test]
    fn leading_zeros_do_not_change_value(n in 0u64..1 << 40, zeros in 0usize..8) {
        for sys in [NumerationSystem::msd(2), NumerationSystem::msd(7), NumerationSystem::fibonacci(Order::Msd)] {
            let mut w = vec![0; zeros];
            w.extend(sys.digits(n));
            prop_assert_eq!(sys.value(&w), Ok(n));
        }
    }

    #[test]
    fn out_of_alphabet_digits_are_rejected(d in 2u32..50) {
        let sys = NumerationSystem::msd(2);
        prop_assert!(sys.value(&[1, d]).is_err());
        prop_assert!(!sys.is_canonical(&[d]));
    }
}
