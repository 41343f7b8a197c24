mod common;

use coflag::groebner::buchberger;
use coflag::poly::{divide, MonomialOrder, Polynomial};
use coflag::spaces::{flag_presentation, Family};
use coflag::symfun::{elementary_sigma, monomial_sum, newton_step, VariableSubset};
use common::{homogeneous_ideal, nonzero_poly, p, poly};
use proptest::prelude::*;

fn orders() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![
        Just(MonomialOrder::lex(3)),
        Just(MonomialOrder::grlex(3)),
        Just(MonomialOrder::grevlex(3)),
        Just(MonomialOrder::with_precedence(coflag::poly::OrderKind::Lex, vec![2, 0, 1]).unwrap()),
    ]
}

fn permutations3() -> impl Strategy<Value = Vec<usize>> {
    Just(vec![0usize, 1, 2]).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(f in poly(3, 4, 3), g in poly(3, 4, 3), h in poly(3, 4, 3)) {
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert!((&f - &f).is_zero());
        prop_assert_eq!(&f * &Polynomial::one(3), f.clone());
        prop_assert_eq!(&f + &(-&g), &f - &g);
    }

    #[test]
    fn division_identity(f in poly(3, 5, 4), gs in prop::collection::vec(nonzero_poly(3, 3, 3), 1..4), order in orders()) {
        let f = f.reorder(&order).unwrap();
        let gs: Vec<Polynomial> = gs.iter().map(|g| g.reorder(&order).unwrap()).collect();
        let d = divide(&f, &gs, &order).unwrap();
        let mut sum = d.remainder.clone();
        for (q, g) in d.quotients.iter().zip(&gs) {
            sum = &sum + &(q * g);
        }
        prop_assert_eq!(sum, f);
        for t in d.remainder.terms() {
            for g in &gs {
                prop_assert!(!g.leading_monomial().unwrap().divides(&t.mono));
            }
        }
    }

    #[test]
    fn normalization_is_idempotent(f in poly(3, 6, 3), order in orders()) {
        let f = f.reorder(&order).unwrap();
        let again = Polynomial::from_terms(order.clone(), f.terms().iter().map(|t| (t.coeff.clone(), t.mono.clone()))).unwrap();
        prop_assert_eq!(&again, &f);
        let windows_descend = f.terms().windows(2).all(|w| order.cmp(&w[0].mono, &w[1].mono).is_gt());
        prop_assert!(windows_descend);
        if !f.is_zero() {
            let m = f.monic();
            prop_assert_eq!(m.monic(), m);
        }
    }

    #[test]
    fn text_round_trip(f in poly(3, 6, 4)) {
        let s = f.to_string();
        prop_assert_eq!(Polynomial::parse(&s, 3).unwrap(), f.clone());
        prop_assert_eq!(Polynomial::parse(&s, 3).unwrap().to_string(), s);
    }

    #[test]
    fn reorder_round_trip(f in poly(3, 6, 4), order in orders()) {
        let g = f.reorder(&order).unwrap();
        let back = g.reorder(&MonomialOrder::lex(3)).unwrap();
        prop_assert_eq!(back.terms(), f.terms());
    }

    #[test]
    fn normal_form_is_multiplicative(gens in homogeneous_ideal(3, 3), f in poly(3, 3, 3), g in poly(3, 3, 3)) {
        let gb = buchberger(&gens, &MonomialOrder::grevlex(3)).unwrap();
        let f = f.reorder(gb.order()).unwrap();
        let g = g.reorder(gb.order()).unwrap();
        let lhs = gb.normal_form(&(&f * &g)).unwrap();
        let rhs = gb.normal_form(&(&gb.normal_form(&f).unwrap() * &gb.normal_form(&g).unwrap())).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(gb.normal_form(&gb.normal_form(&f).unwrap()).unwrap(), gb.normal_form(&f).unwrap());
    }

    #[test]
    fn buchberger_ignores_generator_order(gens in homogeneous_ideal(3, 4), perm in any::<u64>(), order in orders()) {
        let gens: Vec<Polynomial> = gens.iter().map(|g| g.reorder(&order).unwrap()).collect();
        let mut shuffled = gens.clone();
        let k = shuffled.len();
        shuffled.rotate_left((perm as usize) % k);
        shuffled.reverse();
        let a = buchberger(&gens, &order).unwrap();
        let b = buchberger(&shuffled, &order).unwrap();
        prop_assert_eq!(a.generators(), b.generators());
        for g in &gens {
            prop_assert!(a.contains(g).unwrap());
        }
    }

    #[test]
    fn coset_multiplication(f in poly(3, 4, 4), g in poly(3, 4, 4), h in poly(3, 4, 4)) {
        let q = flag_presentation(Family::A, 3).unwrap().quotient().unwrap();
        let fg = q.coset_mul(&f, &g).unwrap();
        prop_assert_eq!(&fg, &q.coset_mul(&g, &f).unwrap());
        prop_assert_eq!(q.coset_mul(&fg, &h).unwrap(), q.coset_mul(&f, &q.coset_mul(&g, &h).unwrap()).unwrap());
        prop_assert_eq!(q.coset_mul(&f, &Polynomial::one(3)).unwrap(), q.normal_form(&f).unwrap());
    }

    #[test]
    fn symmetric_functions_are_symmetric(perm in permutations3(), k in 1usize..=3, m in 0usize..=5) {
        let all = VariableSubset::all(3);
        let e = elementary_sigma(k, &all).unwrap();
        prop_assert_eq!(e.embed(3, &perm).unwrap(), e);
        let s = monomial_sum(m, &all);
        prop_assert_eq!(s.embed(3, &perm).unwrap(), s);
    }

    #[test]
    fn newton_recursion(indices in prop::sample::subsequence(vec![0usize, 1, 2, 3], 1..=4), m in 0usize..=6) {
        let vars = VariableSubset::new(4, indices).unwrap();
        let (lhs, rhs) = newton_step(m, &vars);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn complete_sums_of_two_variables() {
    let v = VariableSubset::all(2);
    assert_eq!(monomial_sum(3, &v), p("x1^3 + x1^2*x2 + x1*x2^2 + x2^3", 2));
}
