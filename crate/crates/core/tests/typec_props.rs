use proptest::prelude::*;
use schubcalc::typec::{c_bar, cpp_relation, gamma_reduce, type_a_to_c};
use schubcalc::{Family, Monomial, Poly, Series, VarId};

fn at_z_zero(f: &Poly) -> Poly {
    f.substitute(|v| (v.family == Family::Z).then(Poly::zero))
}

/// `c·c̄` has components in the ideal of the `C_pp`; at `z = 0` the odd
/// components vanish and the even ones are `(−1)^p C_pp`. With `z` the odd
/// components are `z`-multiples of lower relations.
#[test]
fn c_times_c_bar() {
    let cap = 10;
    let prod = Series::of_family(Family::C, cap).mul(&c_bar(cap));
    assert!(prod.component(0).is_one());
    assert!(prod.component(1).is_zero());
    for d in 2..=cap {
        let comp = prod.component(d);
        assert!(gamma_reduce(comp).unwrap().is_zero(), "degree {d}");
        let z0 = at_z_zero(comp);
        if d % 2 == 1 {
            assert!(z0.is_zero(), "degree {d}");
            assert!(comp.terms().all(|(m, _)| m.exponent(VarId::z()) > 0), "degree {d}");
        } else {
            let p = d / 2;
            let r = at_z_zero(&cpp_relation(p));
            assert_eq!(z0, if p % 2 == 1 { r.neg() } else { r }, "degree {d}");
        }
    }
}

fn vars() -> Vec<VarId> {
    vec![VarId::c(1), VarId::c(2), VarId::z(), VarId::x(1), VarId::x(-1), VarId::y(2), VarId::y(-2)]
}

fn poly(max_deg: u32) -> impl Strategy<Value = Poly> {
    let term = prop::collection::vec(0u32..3, 7).prop_map(|e| Monomial::from_pairs(vars().into_iter().zip(e).filter(|(_, e)| *e > 0)));
    prop::collection::vec((term, -3i64..4), 0..4).prop_map(move |ts| {
        Poly::from_terms(ts.into_iter().filter(|(m, _)| m.degree() <= max_deg).map(|(m, c)| (m, c.into())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 40, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn a_to_c_is_a_ring_map(f in poly(3), g in poly(2)) {
        let lhs = type_a_to_c(&f.mul(&g)).unwrap();
        let rhs = gamma_reduce(&type_a_to_c(&f).unwrap().mul(&type_a_to_c(&g).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
        let sum = type_a_to_c(&f.add(&g)).unwrap();
        prop_assert_eq!(sum, type_a_to_c(&f).unwrap().add(&type_a_to_c(&g).unwrap()));
    }
}
