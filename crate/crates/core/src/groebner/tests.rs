use super::*;

fn p(s: &str, n: usize) -> Polynomial {
    Polynomial::parse(s, n).unwrap()
}

fn a2_basis() -> GroebnerBasis {
    buchberger(&[p("x1^2 + x1*x2 + x2^2", 2), p("x2^3", 2)], &MonomialOrder::lex(2)).unwrap()
}

#[test]
fn elementary_symmetric_ideal_in_three_variables() {
    let gens = [p("x1 + x2 + x3", 3), p("x1*x2 + x1*x3 + x2*x3", 3), p("x1*x2*x3", 3)];
    let gb = buchberger(&gens, &MonomialOrder::lex(3)).unwrap();
    let expected = vec![p("x1 + x2 + x3", 3), p("x2^2 + x2*x3 + x3^2", 3), p("x3^3", 3)];
    assert_eq!(gb.generators(), expected.as_slice());
}

#[test]
fn already_reduced_basis_is_returned_unchanged() {
    let gens = [p("x1^2 + x2^2", 2), p("x2^4", 2)];
    let gb = buchberger(&gens, &MonomialOrder::lex(2)).unwrap();
    assert_eq!(gb.generators(), gens.as_slice());
}

#[test]
fn unit_ideal_short_circuits() {
    let gb = buchberger(&[Polynomial::one(2)], &MonomialOrder::lex(2)).unwrap();
    assert!(gb.is_unit_ideal());
    let gb = buchberger(&[p("x1", 2), p("x1 + 1", 2)], &MonomialOrder::lex(2)).unwrap();
    assert!(gb.is_unit_ideal());
    assert_eq!(gb.generators(), &[Polynomial::one(2)]);
}

#[test]
fn empty_and_mismatched_inputs() {
    assert_eq!(buchberger(&[], &MonomialOrder::lex(2)), Err(GroebnerError::Empty));
    assert!(buchberger(&[p("x1", 2), p("x1", 3)], &MonomialOrder::lex(2)).is_err());
    let zero = buchberger(&[Polynomial::zero(2)], &MonomialOrder::lex(2)).unwrap();
    assert!(zero.generators().is_empty());
    assert_eq!(zero.normal_form(&p("x1", 2)).unwrap(), p("x1", 2));
}

#[test]
fn normal_forms_modulo_a2() {
    let gb = a2_basis();
    assert!(gb.normal_form(&p("x2^3", 2)).unwrap().is_zero());
    assert_eq!(gb.normal_form(&p("x1*x2^2", 2)).unwrap(), p("x1*x2^2", 2));
    assert_eq!(gb.normal_form(&p("x1^2", 2)).unwrap(), p("-x1*x2 - x2^2", 2));
    assert!(gb.normal_form(&p("x1", 3)).is_err());
}

#[test]
fn g2_membership() {
    let gb = buchberger(&[p("x1^2 + 3*x1*x2 + 3*x2^2", 2), p("x1^6", 2)], &MonomialOrder::lex(2)).unwrap();
    assert_eq!(gb.generators(), &[p("x1^2 + 3*x1*x2 + 3*x2^2", 2), p("x2^6", 2)]);
    assert!(is_in_ideal(&p("x2^6", 2), &gb).unwrap());
    assert!(!is_in_ideal(&p("x1*x2^5", 2), &gb).unwrap());
    assert!(is_in_ideal(&Polynomial::zero(2), &gb).unwrap());
}

#[test]
fn groebner_property_checks() {
    let lex3 = MonomialOrder::lex(3);
    let a3 = [p("x3^4", 3), p("x2^3 + x2^2*x3 + x2*x3^2 + x3^3", 3), {
        p("x1^2 + x1*x2 + x1*x3 + x2^2 + x2*x3 + x3^2", 3)
    }];
    assert!(is_groebner_basis(&a3, &lex3).unwrap());
    let bad = [p("x1^2 + x2^2", 2), p("x1*x2", 2)];
    assert!(!is_groebner_basis(&bad, &MonomialOrder::lex(2)).unwrap());
    let (_, _, r) = first_nonreducing_pair(&bad, &MonomialOrder::lex(2)).unwrap().unwrap();
    assert_eq!(r, p("x2^3", 2));
    assert!(is_groebner_basis(&[p("x1", 2)], &MonomialOrder::lex(2)).unwrap());
    assert!(is_groebner_basis(&[p("x1", 2), Polynomial::zero(2)], &MonomialOrder::lex(2)).is_err());
}

#[test]
fn other_orders_give_valid_bases() {
    let gens = [p("x1^2 + x2^2 + x3", 3), p("x1*x2 - x3^2", 3), p("x2^3 - x1", 3)];
    for order in [
        MonomialOrder::grlex(3),
        MonomialOrder::grevlex(3),
        MonomialOrder::lex(3),
    ] {
        let gb = buchberger(&gens, &order).unwrap();
        assert!(is_groebner_basis(gb.generators(), &order).unwrap());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
        for g in gb.generators() {
            assert_eq!(g.leading_coeff().unwrap(), &poly::rat(1));
        }
    }
}
