use proptest::prelude::*;
use schubcalc::polyring::series_invert;
use schubcalc::{Monomial, Poly, Series, VarId};

fn vars() -> Vec<VarId> {
    vec![VarId::c(1), VarId::c(2), VarId::cp(1), VarId::x(1), VarId::x(-1), VarId::y(0), VarId::y(2), VarId::z()]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..3, 8).prop_map(|e| Monomial::from_pairs(vars().into_iter().zip(e).filter(|(_, e)| *e > 0)))
}

fn poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((monomial(), -6i64..7), 0..6)
        .prop_map(|ts| Poly::from_terms(ts.into_iter().map(|(m, c)| (m, c.into()))))
}

fn homogeneous(d: u32) -> impl Strategy<Value = Poly> {
    poly().prop_map(move |p| p.homogeneous_component(d))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
    }

    #[test]
    fn grading_is_additive(da in 0u32..4, db in 0u32..4, a in poly(), b in poly()) {
        let (a, b) = (a.homogeneous_component(da), b.homogeneous_component(db));
        let p = a.mul(&b);
        if !p.is_zero() {
            prop_assert!(p.is_homogeneous());
            prop_assert_eq!(p.degree(), Some(da + db));
        }
    }

    #[test]
    fn series_inverse(c1 in homogeneous(1), c2 in homogeneous(2), c3 in homogeneous(3), cap in 1usize..6) {
        let s = Series::from_components(vec![Poly::one(), c1, c2, c3]);
        let s = Series::from_poly(&s.to_poly(), cap);
        let inv = series_invert(&s).unwrap();
        prop_assert!(inv.mul(&s).is_one());
    }

    #[test]
    fn serialization_round_trip(a in poly()) {
        let j = a.to_json();
        let back = Poly::from_json(&j).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(back.to_json(), j);
        prop_assert_eq!(Poly::parse(&a.to_text()).unwrap(), a);
    }
}
