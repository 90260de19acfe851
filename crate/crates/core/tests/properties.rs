use modstrat::groebner::{ideal_basis, is_syzygy, syzygies};
use modstrat::poly::{parse_in_ring, ring};
use modstrat::{Coefficient, Monomial, MonomialOrder, Polynomial, VectorPoly};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = Coefficient> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Coefficient::new(n.into(), d.into()))
}

fn mono(n: usize, max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, n).prop_map(Monomial::new)
}

fn poly_in(names: &'static [&'static str], max: u32, terms: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((mono(names.len(), max), coeff()), 0..=terms)
        .prop_map(move |ts| Polynomial::from_terms(ring(names), ts))
}

const XYZ: &[&str] = &["x", "y", "z"];
const XY: &[&str] = &["x", "y"];

fn poly() -> impl Strategy<Value = Polynomial> {
    poly_in(XYZ, 3, 5)
}

fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::DegRevLex),
        Just(MonomialOrder::NegDegRevLex),
        prop::collection::vec(1i64..=5, 3).prop_map(MonomialOrder::Weighted),
        prop::collection::vec(-5i64..=-1, 3).prop_map(MonomialOrder::Weighted),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Polynomial::one(ring(XYZ)), a.clone());
    }

    #[test]
    fn print_parse_round_trip(a in poly()) {
        let text = a.to_string();
        let back = parse_in_ring(&text, ring(XYZ)).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn order_is_total_and_multiplicative(
        ord in order(),
        a in mono(3, 4),
        b in mono(3, 4),
        c in mono(3, 4),
    ) {
        let ab = ord.compare(&a, &b).unwrap();
        prop_assert_eq!(ab, ord.compare(&b, &a).unwrap().reverse());
        prop_assert_eq!(ab.is_eq(), a == b);
        let bc = ord.compare(&b, &c).unwrap();
        if ab.is_lt() && bc.is_lt() {
            prop_assert!(ord.compare(&a, &c).unwrap().is_lt());
        }
        prop_assert_eq!(ord.compare(&a.mul(&c), &b.mul(&c)).unwrap(), ab);
        let one = Monomial::one(3);
        if !a.is_one() {
            // global orders put 1 at the bottom, local orders at the top
            let expected = if ord.is_global() { std::cmp::Ordering::Greater } else { std::cmp::Ordering::Less };
            prop_assert_eq!(ord.compare(&a, &one).unwrap(), expected);
        }
    }

    #[test]
    fn leibniz_rule(a in poly(), b in poly(), i in 0usize..3) {
        let lhs = (&a * &b).derivative(i);
        let rhs = &(&a.derivative(i) * &b) + &(&a * &b.derivative(i));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn scaling_a_variable_is_a_ring_map(a in poly(), b in poly(), i in 0usize..3, c in coeff()) {
        prop_assume!(c != Coefficient::from_integer(0.into()));
        prop_assert_eq!((&a * &b).scale_variable(i, &c), &a.scale_variable(i, &c) * &b.scale_variable(i, &c));
    }
}

fn small_ideal() -> impl Strategy<Value = Vec<Polynomial>> {
    prop::collection::vec(poly_in(XY, 3, 3), 1..=3)
        .prop_filter("nonzero generators", |gs| gs.iter().all(|g| !g.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn standard_bases_are_complete_and_sound(
        gens in small_ideal(),
        local in any::<bool>(),
        probe in poly_in(XY, 4, 4),
    ) {
        let ord = if local { MonomialOrder::NegDegRevLex } else { MonomialOrder::DegRevLex };
        let basis = ideal_basis(&gens, &ord).unwrap();
        prop_assert!(basis.is_complete());
        for g in &gens {
            prop_assert!(basis.contains(&VectorPoly::scalar(g.clone())).unwrap());
        }
        let once = basis.normal_form(&VectorPoly::scalar(probe)).unwrap();
        prop_assert_eq!(basis.normal_form(&once).unwrap(), once);
    }

    #[test]
    fn syzygies_are_exact(gens in small_ideal()) {
        let vs: Vec<VectorPoly> = gens.into_iter().map(VectorPoly::scalar).collect();
        for s in syzygies(&vs).unwrap() {
            prop_assert!(is_syzygy(&s, &vs));
        }
    }
}
