use proptest::prelude::*;
use schubcalc::permutations::{bruhat_leq, permutations_in_window};
use schubcalc::{AffinePermutation, Partition, Permutation};

fn window_perm() -> impl Strategy<Value = Permutation> {
    (-4i64..2, 1usize..9)
        .prop_flat_map(|(lo, n)| (Just(lo), Just((0..n as i64).collect::<Vec<_>>()).prop_shuffle()))
        .prop_map(|(lo, vals)| Permutation::from_window(lo, vals.into_iter().map(|v| v + lo).collect()).unwrap())
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..5, 0..4).prop_map(Partition::new)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn omega_preserves_length(w in window_perm()) {
        prop_assert_eq!(w.omega().length(), w.length());
        prop_assert_eq!(w.omega().omega(), w);
    }

    #[test]
    fn gamma_preserves_length(w in window_perm(), m in -3i64..4) {
        prop_assert_eq!(w.gamma(m).length(), w.length());
        prop_assert_eq!(w.gamma(m).gamma(-m), w);
    }

    #[test]
    fn grassmannian_round_trip(lam in partition()) {
        let w = Permutation::from_partition(&lam);
        prop_assert!(w.is_grassmannian());
        prop_assert_eq!(w.length(), lam.size());
        prop_assert_eq!(w.to_partition().unwrap(), lam);
    }

    #[test]
    fn affine_rank_is_periodic_and_counts(
        n in 2usize..4,
        word in prop::collection::vec(0usize..4, 0..7),
        p in -6i64..6,
        q in -6i64..6,
    ) {
        let mut w = AffinePermutation::identity(n);
        for k in word {
            w = w.mul_simple(k % n);
        }
        let r = w.rank_k(p, q);
        prop_assert_eq!(w.rank_k(p + n as i64, q + n as i64), r);
        let brute = (p - 200..=p).filter(|&a| w.apply(a) > q).count();
        prop_assert_eq!(r, brute);
    }
}

#[test]
fn bruhat_is_a_partial_order() {
    let ws = permutations_in_window(-1, 2, 6);
    for u in &ws {
        assert!(bruhat_leq(u, u));
        for v in &ws {
            if bruhat_leq(u, v) {
                assert!(u.length() <= v.length());
                if bruhat_leq(v, u) {
                    assert_eq!(u, v);
                }
                for w in &ws {
                    if bruhat_leq(v, w) {
                        assert!(bruhat_leq(u, w), "{u} {v} {w}");
                    }
                }
            }
        }
    }
}

/// Rank conditions at the essential set of `w` already force the conditions
/// at every cell: for each `v` in the window, `k_v ≥ k_w` on the essential
/// set holds exactly when it holds on the whole rectangle, which in turn is
/// Bruhat comparison `w ≤ v`.
#[test]
fn essential_set_determines_rank_conditions() {
    let (a, b) = (-1, 3);
    let ws = permutations_in_window(a, b, 10);
    for w in &ws {
        let ess = w.essential_set();
        for v in &ws {
            let on_ess = ess.iter().all(|&(k, p, q)| v.rank_k(p, q) >= k);
            let everywhere = (a - 1..=b).all(|p| (a - 1..=b).all(|q| v.rank_k(p, q) >= w.rank_k(p, q)));
            assert_eq!(on_ess, everywhere, "{w} vs {v}");
            assert_eq!(everywhere, bruhat_leq(w, v), "{w} vs {v}");
        }
    }
}

/// The rank function of `w` is recovered from its essential triples: the
/// smallest function that is at least `k` at each essential cell and obeys
/// the unit-step monotonicity of rank functions, taken pointwise over all
/// permutations satisfying the essential conditions, equals `k_w`.
#[test]
fn rank_function_from_essential_set() {
    let (a, b) = (-1, 2);
    let ws = permutations_in_window(a, b, 6);
    for w in &ws {
        let ess = w.essential_set();
        let above: Vec<&Permutation> =
            ws.iter().filter(|v| ess.iter().all(|&(k, p, q)| v.rank_k(p, q) >= k)).collect();
        for p in a - 1..=b {
            for q in a - 1..=b {
                let min = above.iter().map(|v| v.rank_k(p, q)).min().unwrap();
                assert_eq!(min, w.rank_k(p, q), "{w} at ({p},{q})");
            }
        }
    }
}
