use proptest::prelude::*;
use schubcalc::linalg::{q, rank};
use schubcalc::permutations::permutations_in_window;
use schubcalc::schubert::{
    back_stabilize, double_schubert_pipe, gamma_translate, interpolation_solve, omega_dual, specialize_finite,
};
use schubcalc::{suites, Family, Monomial, Permutation, Poly};
use std::collections::BTreeMap;

fn sig(w: &Permutation) -> Poly {
    back_stabilize(w).unwrap().poly
}

/// Independence over `Z[y]` follows from independence after specializing `y`
/// to integers.
#[test]
fn schubert_classes_are_independent() {
    let ws = permutations_in_window(-2, 3, 5);
    for d in 0..=5 {
        let polys: Vec<Poly> = ws
            .iter()
            .filter(|w| w.length() == d)
            .map(|w| sig(w).substitute(|v| (v.family == Family::Y).then(|| Poly::constant(3 * v.index + 7))))
            .collect();
        let mut cols: BTreeMap<Monomial, usize> = BTreeMap::new();
        for p in &polys {
            for (m, _) in p.terms() {
                let n = cols.len();
                cols.entry(m.clone()).or_insert(n);
            }
        }
        let rows: Vec<Vec<_>> = polys
            .iter()
            .map(|p| {
                let mut r = vec![q(0); cols.len()];
                for (m, c) in p.terms() {
                    r[cols[m]] = q(c.clone());
                }
                r
            })
            .collect();
        assert_eq!(rank(&rows), polys.len(), "degree {d}");
    }
}

#[test]
fn defining_specialization() {
    for w in permutations_in_window(-2, 3, 5) {
        let (lo, hi) = match w.window() {
            Some(x) => x,
            None => continue,
        };
        let shift = (1 - lo).max(0);
        let m = w.length() as i64;
        let spec = specialize_finite(&gamma_translate(&sig(&w), shift), m as usize).unwrap();
        let g = w.gamma(shift);
        let big = Permutation::from_window(-m + 1, (-m + 1..=hi + shift).map(|i| g.apply(i)).collect()).unwrap();
        assert_eq!(spec, double_schubert_pipe(&big, -m + 1, hi + shift).unwrap(), "{w}");
    }
}

#[test]
fn oracle_agreement() {
    for w in permutations_in_window(-1, 3, 4) {
        assert_eq!(interpolation_solve(&w, None).unwrap().poly, sig(&w), "{w}");
    }
}

#[test]
fn equivariance_and_identities_exhaustive() {
    let ws = permutations_in_window(-2, 3, 4);
    for r in [
        suites::shift(&ws),
        suites::duality(&ws),
        suites::projection(&ws),
        suites::vanishing(&ws, -2, 3),
    ] {
        assert!(r.ok(), "{}", r.to_text());
    }
}

fn perm_up_to(len: usize) -> impl Strategy<Value = Permutation> {
    (-3i64..2, prop::collection::vec(0i64..6, 0..=len)).prop_map(|(lo, word)| {
        let word: Vec<i64> = word.into_iter().map(|i| i + lo).collect();
        Permutation::from_word(&word)
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn gamma_and_omega_equivariance(w in perm_up_to(4), m in -2i64..=2) {
        let p = sig(&w);
        prop_assert_eq!(gamma_translate(&p, m), sig(&w.gamma(m)));
        prop_assert_eq!(omega_dual(&p), sig(&w.omega()));
    }

    #[test]
    fn cauchy_and_inverse(w in perm_up_to(4)) {
        let ws = [w];
        prop_assert!(suites::cauchy(&ws).ok());
        prop_assert!(suites::inverse(&ws).ok());
    }
}
