use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

use kostant_juggling::bijection::{gamma, gamma_inverse};
use kostant_juggling::closedforms::{lidskii_count, IntMatrix, LidskiiVariant};
use kostant_juggling::juggling::{count_sequences, JugglingProblem, JugglingState, ThrowSet};
use kostant_juggling::kostant::{count_partitions, enumerate_partitions, RootPartition, RootSet};
use kostant_juggling::roots::{LieType, PositiveRoot, RootSystem, Weight};

fn type_a_weight() -> impl Strategy<Value = Weight> {
    (1usize..=4).prop_flat_map(|r| {
        prop::collection::vec(-3i64..=3, r).prop_map(|mut v| {
            v.push(-v.iter().sum::<i64>());
            Weight(v)
        })
    })
}

fn type_a_partition() -> impl Strategy<Value = (usize, RootPartition)> {
    (2usize..=5).prop_flat_map(|r| {
        let roots = RootSystem::new(LieType::A, r).unwrap().positive_roots();
        prop::collection::vec(prop::sample::select(roots), 0..8)
            .prop_map(move |v| (r, RootPartition::from_roots(v)))
    })
}

fn small_state() -> impl Strategy<Value = JugglingState> {
    prop::collection::vec(-1i64..=2, 0..4).prop_map(JugglingState::new)
}

fn leibniz(rows: &[Vec<i64>]) -> BigInt {
    fn go(rows: &[Vec<i64>], k: usize, used: &mut Vec<bool>, sign: i64, acc: i64) -> i64 {
        if k == rows.len() {
            return sign * acc;
        }
        let mut s = 0;
        for j in 0..rows.len() {
            if used[j] {
                continue;
            }
            // inversions added by placing column j at row k
            let inv = (j + 1..rows.len()).filter(|&x| used[x]).count();
            used[j] = true;
            let sg = if inv % 2 == 1 { -sign } else { sign };
            s += go(rows, k + 1, used, sg, acc * rows[k][j]);
            used[j] = false;
        }
        s
    }
    BigInt::from(go(rows, 0, &mut vec![false; rows.len()], 1, 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn type_a_reachability_is_the_prefix_criterion(mu in type_a_weight()) {
        let sys = RootSystem::new(LieType::A, mu.ambient() - 1).unwrap();
        let n = count_partitions(&mu, &RootSet::full(sys)).unwrap();
        let prefixes_ok = mu.0.iter().scan(0, |s, x| { *s += x; Some(*s) }).all(|s| s >= 0);
        prop_assert_eq!(n > BigUint::from(0u32), prefixes_ok);
    }

    #[test]
    fn gamma_roundtrip((r, p) in type_a_partition()) {
        let mu = p.weight(r + 1).unwrap();
        let a = JugglingState::new(mu.0[..r].to_vec());
        let s = gamma(&p, &a, r).unwrap();
        prop_assert_eq!(s.terminal(), &JugglingState::new(vec![-mu.0[r]]));
        prop_assert_eq!(gamma_inverse(&s), p);
    }

    #[test]
    fn forward_and_backward_counts_agree(a in small_state(), b in small_state(), n in 1usize..=4, cap in prop::option::of(1u32..=3)) {
        let p = JugglingProblem::new(a, b, n).with_capacity(cap);
        let fwd = p.count();
        prop_assert_eq!(&fwd, &p.count_backward());
        prop_assert_eq!(fwd, BigUint::from(p.enumerate().len()));
    }

    #[test]
    fn capacity_is_monotone(a in small_state(), b in small_state(), n in 1usize..=4) {
        let all = ThrowSet::All;
        let counts: Vec<BigUint> = (1..=4).map(|m| count_sequences(&a, &b, n, Some(m), &all)).collect();
        prop_assert!(counts.windows(2).all(|w| w[0] <= w[1]));
        prop_assert!(counts[3] <= count_sequences(&a, &b, n, None, &all));
    }

    #[test]
    fn bcd_count_matches_enumeration(ty in prop::sample::select(vec![LieType::B, LieType::C, LieType::D]), v in prop::collection::vec(-1i64..=2, 4)) {
        let r = if ty == LieType::D { 4 } else { 3 };
        let sys = RootSystem::new(ty, r).unwrap();
        let mu = Weight(v[..r].to_vec());
        let set = RootSet::full(sys);
        let n = count_partitions(&mu, &set).unwrap();
        let parts = enumerate_partitions(&mu, &set).unwrap();
        prop_assert_eq!(n, BigUint::from(parts.len()));
        for p in &parts {
            prop_assert_eq!(&p.weight(r).unwrap(), &mu);
        }
    }

    #[test]
    fn determinant_matches_leibniz(rows in (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-3i64..=3, n), n))) {
        let m = IntMatrix::new(rows.clone()).unwrap();
        prop_assert_eq!(m.determinant(), leibniz(&rows));
    }

    #[test]
    fn lidskii_variants_agree(v in prop::collection::vec(0i64..=3, 2..=4)) {
        let mut w = v.clone();
        w.push(-v.iter().sum::<i64>());
        let mu = Weight(w);
        let oracle = count_partitions(&mu, &RootSet::full(RootSystem::new(LieType::A, v.len()).unwrap())).unwrap();
        prop_assert_eq!(lidskii_count(&mu, LidskiiVariant::Binomial).unwrap(), oracle.clone());
        prop_assert_eq!(lidskii_count(&mu, LidskiiVariant::Multiset).unwrap(), oracle);
    }

    #[test]
    fn restriction_never_increases_the_count(mu in type_a_weight(), keep in prop::collection::vec(any::<bool>(), 10)) {
        let sys = RootSystem::new(LieType::A, mu.ambient() - 1).unwrap();
        let roots: Vec<PositiveRoot> = sys.positive_roots().into_iter().zip(keep.iter().cycle()).filter(|(_, k)| **k).map(|(r, _)| r).collect();
        let lam = RootSet::new(sys, roots).unwrap();
        prop_assert!(count_partitions(&mu, &lam).unwrap() <= count_partitions(&mu, &RootSet::full(sys)).unwrap());
    }
}
