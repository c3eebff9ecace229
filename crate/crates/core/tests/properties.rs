use std::collections::BTreeSet;
use std::sync::Arc;

use bellwords::bellpoly::{bell_oracle, bell_recurrence, BellArgs};
use bellwords::seqtransform::{
    invert, invert_inverse, invert_m, invert_m_via_bell, BellTerms, Seq,
};
use bellwords::wordmodel::{
    decompose, enumerate_blockwords, enumerate_blockwords_by_blocks, expand_heads, select_blocks,
    BlockSystem, Selector, Word,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{pow, Zero};
use proptest::prelude::*;

fn seq(v: &[i64]) -> Seq {
    Seq::from_i64(v).unwrap()
}

/// Block head, f0 prefix with `0 <= f0(j) <= b^(j-1)`, and m.
fn block_params(max_len: usize) -> impl Strategy<Value = (u8, Vec<u64>, u32)> {
    (1u8..=3, 1..=max_len, 1u32..=3).prop_flat_map(|(b, len, m)| {
        let caps: Vec<_> = (0..len).map(|i| 0..=pow(b as u64, i)).collect();
        (Just(b), caps, Just(m))
    })
}

/// Selects the `f0(j)` lexicographically largest blocks instead of the smallest.
fn reverse_lex(b: u8, prefix: Vec<u64>) -> BlockSystem {
    let counts = prefix.clone();
    let keep = move |w: &[u8]| {
        let j = w.len();
        let tail = w[1..]
            .iter()
            .fold(0u64, |acc, &a| acc * b as u64 + a as u64);
        let want = counts.get(j - 1).copied().unwrap_or(0);
        tail + want >= pow(b as u64, j - 1)
    };
    BlockSystem::from_prefix(b, prefix, Selector::Predicate(Arc::new(keep))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn recurrence_equals_oracle(z in prop::collection::vec(-10i64..=10, 1..=12), n in 1usize..=12, k in 1usize..=12) {
        prop_assume!(k <= n && n - k < z.len());
        let args = BellArgs::from_i64(&z).unwrap();
        prop_assert_eq!(bell_recurrence(n, k, &args).unwrap(), bell_oracle(n, k, &args).unwrap());
    }

    #[test]
    fn homogeneous_of_degree_k(z in prop::collection::vec(-10i64..=10, 10), n in 1usize..=10, k in 1usize..=10, a in -5i64..=5) {
        prop_assume!(k <= n);
        let args = BellArgs::from_i64(&z).unwrap();
        let scaled = args.scaled(&BigInt::from(a));
        prop_assert_eq!(
            bell_recurrence(n, k, &scaled).unwrap(),
            pow(BigInt::from(a), k) * bell_recurrence(n, k, &args).unwrap()
        );
    }

    #[test]
    fn transform_routes_agree(x in prop::collection::vec(-9i64..=9, 1..=20), m in 1i64..=4) {
        let x = seq(&x);
        let direct = invert_m(&x, m).unwrap();
        let mut composed = x.clone();
        for _ in 0..m {
            composed = invert(&composed);
        }
        prop_assert_eq!(&direct, &invert_m_via_bell(&x, m).unwrap());
        prop_assert_eq!(&direct, &composed);
    }

    #[test]
    fn scaling_identity(x in prop::collection::vec(-9i64..=9, 1..=20), m in 1i64..=4) {
        let x = seq(&x);
        let mm = BigInt::from(m);
        let big = invert(&x.scaled(&mm));
        let divided = big.div_exact(&mm);
        prop_assert!(divided.is_some());
        prop_assert_eq!(divided.unwrap(), invert_m(&x, m).unwrap());
    }

    #[test]
    fn inverse_round_trips(x in prop::collection::vec(-50i64..=50, 1..=20)) {
        let x = seq(&x);
        prop_assert_eq!(invert_inverse(&invert(&x)), x.clone());
        prop_assert_eq!(invert(&invert_inverse(&x)), x);
    }

    #[test]
    fn domination_bound((b, prefix, m) in block_params(12)) {
        let x = Seq::new(prefix.iter().map(|&t| BigInt::from(t)).collect()).unwrap();
        let y = invert_m(&x, m as i64).unwrap();
        for n in 1..=y.len() {
            prop_assert!(y[n] >= BigInt::zero());
            prop_assert!(y[n] <= pow(BigInt::from(b as u32 + m), n - 1));
        }
    }

    #[test]
    fn unique_decomposition(b in 1u8..=3, m in 1u8..=3, tail in prop::collection::vec(0u8..6, 0..10), head in 0u8..3) {
        let top = b + m;
        let mut letters = vec![b + head % m];
        letters.extend(tail.iter().map(|&a| a % top));
        let word = Word::new(letters);
        let parts = decompose(&word, b).unwrap();
        prop_assert_eq!(Word::concat(&parts), word);
        for part in &parts {
            let (first, rest) = part.letters().split_first().unwrap();
            prop_assert!(*first >= b);
            prop_assert!(rest.iter().all(|&a| a < b));
        }
    }

    #[test]
    fn head_substitution_multiplies_by_m((b, prefix, m) in block_params(6)) {
        let sys = BlockSystem::from_prefix(b, prefix.clone(), Selector::Lex).unwrap();
        for j in 1..=prefix.len() {
            let blocks = select_blocks(&sys, j).unwrap();
            let expanded = expand_heads(&blocks, b, m as u8);
            prop_assert_eq!(expanded.len(), m as usize * blocks.len());
            let distinct: BTreeSet<&Word> = expanded.iter().collect();
            prop_assert_eq!(distinct.len(), expanded.len());
            for w in &expanded {
                let (first, rest) = w.letters().split_first().unwrap();
                prop_assert!((b..b + m as u8).contains(first));
                prop_assert!(blocks.iter().any(|blk| &blk.letters()[1..] == rest));
            }
        }
    }

    #[test]
    fn block_count_refinement((b, prefix, m) in block_params(6)) {
        let sys = BlockSystem::from_prefix(b, prefix.clone(), Selector::Lex).unwrap();
        let x = Seq::new(prefix.iter().map(|&t| BigInt::from(t)).collect()).unwrap();
        let bell = BellTerms::new(&x, m as i64).unwrap();
        let gf = invert_m(&x, m as i64).unwrap();
        for n in 1..=prefix.len() {
            let groups = enumerate_blockwords_by_blocks(&sys, m, n, 1 << 22).unwrap();
            for k in 1..=n {
                let got = groups.get(&k).map_or(0, Vec::len);
                prop_assert_eq!(BigInt::from(got), bell.term(n, k), "n={} k={}", n, k);
            }
            let total: usize = groups.values().map(Vec::len).sum();
            prop_assert_eq!(BigInt::from(total), gf[n].clone());
            for (&k, words) in &groups {
                for w in words {
                    prop_assert_eq!(decompose(w, b).unwrap().len(), k);
                }
            }
        }
    }

    #[test]
    fn counts_do_not_depend_on_selector((b, prefix, m) in block_params(6)) {
        let lex = BlockSystem::from_prefix(b, prefix.clone(), Selector::Lex).unwrap();
        let rev = reverse_lex(b, prefix.clone());
        for n in 1..=prefix.len() {
            let a = enumerate_blockwords(&lex, m, n, 1 << 22).unwrap();
            let c = enumerate_blockwords(&rev, m, n, 1 << 22).unwrap();
            prop_assert_eq!(a.len(), c.len());
        }
    }
}

#[test]
fn reverse_selector_picks_the_largest_blocks() {
    let sys = reverse_lex(2, vec![1, 1, 2]);
    let chosen = select_blocks(&sys, 3).unwrap();
    assert_eq!(
        chosen,
        vec!["210".parse::<Word>().unwrap(), "211".parse().unwrap()]
    );
    assert_eq!(sys.f0(3), BigUint::from(2u32));
}
