use proptest::prelude::*;
use schubcalc::coproduct::{
    at_zero, dual_lr, expand_comodule, graham_certificate, squarefree_decomposition, GrahamOrder, SquarefreeSearch,
};
use schubcalc::permutations::permutations_in_window;
use schubcalc::schubert::{back_stabilize, kempf_laksov, specialize_c_to_one};
use schubcalc::symfunc::lr_coefficient;
use schubcalc::{Family, Partition, Permutation, Poly, VarId};

fn to_primed_c(p: &Poly) -> Poly {
    p.substitute(|v| (v.family == Family::C).then(|| Poly::var(VarId::cp(v.index))))
}

fn perm_up_to(len: usize) -> impl Strategy<Value = Permutation> {
    (-3i64..2, prop::collection::vec(0i64..6, 0..=len)).prop_map(|(lo, word)| {
        let word: Vec<i64> = word.into_iter().map(|i| i + lo).collect();
        Permutation::from_word(&word)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    /// Both counits: `c′ ↦ 1` recovers `∑_w`, and `c ↦ 1` leaves only
    /// `ĉ_{∅,w} = 1`; entries have the predicted degree.
    #[test]
    fn counit_and_homogeneity(w in perm_up_to(4)) {
        let t = expand_comodule(&w).unwrap();
        let mut rebuilt = Poly::zero();
        for e in &t.entries {
            let deg = w.length() - e.mu.size() - e.v.length();
            prop_assert!(e.coeff.is_homogeneous());
            prop_assert_eq!(e.coeff.degree(), Some(deg as u32));
            let right = specialize_c_to_one(&back_stabilize(&e.v).unwrap().poly);
            rebuilt.add_assign_ref(&e.coeff.mul(&kempf_laksov(&e.mu).poly).mul(&right));
            if e.mu.is_empty() {
                prop_assert_eq!(e.coeff.clone(), if e.v == w { Poly::one() } else { Poly::zero() });
            }
        }
        prop_assert_eq!(rebuilt, back_stabilize(&w).unwrap().poly);
        prop_assert_eq!(t.get(&Partition::empty(), &w), Poly::one());
        if let Ok(lam) = w.to_partition() {
            prop_assert_eq!(t.get(&lam, &Permutation::identity()), Poly::one());
        }
    }
}

#[test]
fn comodule_entries_expand_the_coproduct() {
    for w in permutations_in_window(-1, 2, 4) {
        let t = expand_comodule(&w).unwrap();
        let mut rhs = Poly::zero();
        for e in &t.entries {
            let right = to_primed_c(&back_stabilize(&e.v).unwrap().poly);
            rhs.add_assign_ref(&e.coeff.mul(&kempf_laksov(&e.mu).poly).mul(&right));
        }
        let lhs = schubcalc::coproduct::apply_coproduct(&back_stabilize(&w).unwrap().poly);
        assert_eq!(lhs, rhs, "{w}");
    }
}

#[test]
fn classical_symmetry_at_zero() {
    for n in 0..=6 {
        for lam in Partition::all_of_size(n) {
            let t = dual_lr(&lam);
            for mu in lam.subpartitions() {
                for nu in Partition::all_of_size(n - mu.size()) {
                    let c = Poly::constant(lr_coefficient(&lam, &mu, &nu));
                    assert_eq!(at_zero(&t.get_lr(&mu, &nu)), c, "{lam} {mu} {nu}");
                    assert_eq!(at_zero(&t.get_lr(&nu, &mu)), c, "{lam} {nu} {mu}");
                }
            }
        }
    }
}

/// Every root `y_i − y_j` with `i ≤ 0 < j` contains the one consecutive
/// difference that crosses from the positive to the nonpositive indices, so
/// its exponent counts mixed-sign factors. Entries with more than two such
/// factors (necessarily from distinct roots) and the outcome of the
/// squarefree search are reported.
#[test]
fn mixed_sign_degree_bound() {
    let mut found = 0;
    let mut other = Vec::new();
    let mut above_two = Vec::new();
    for w in permutations_in_window(-2, 2, 4) {
        for e in expand_comodule(&w).unwrap().entries {
            if e.coeff.degree().unwrap_or(0) == 0 {
                continue;
            }
            let order = GrahamOrder::for_poly(&e.coeff);
            let positives = order.vars.iter().filter(|v| v.index > 0).count() as i64;
            let cert = graham_certificate(&e.coeff, &order).unwrap();
            assert!(cert.passed, "{w} {} {}", e.mu, e.v);
            if positives > 0 && order.vars.len() as i64 > positives {
                let crossing = VarId::xi(positives);
                if cert.expansion.terms().any(|(m, _)| m.exponent(crossing) > 2) {
                    above_two.push(format!("{w} {} {}: {}", e.mu, e.v, e.coeff));
                }
            }
            match squarefree_decomposition(&e.coeff, &order, 200_000).unwrap() {
                SquarefreeSearch::Found(_) => found += 1,
                r => other.push(format!("{w} {} {}: {r:?}", e.mu, e.v)),
            }
        }
    }
    println!("entries with more than two mixed-sign factors: {}", above_two.len());
    for o in &above_two {
        println!("  {o}");
    }
    println!("squarefree decompositions found: {found}; not found: {}", other.len());
    for o in &other {
        println!("  {o}");
    }
}
