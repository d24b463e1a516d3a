use proptest::prelude::*;
use wlpoly::polyalg::{rat, ratio, BigRational, MPoly, Var};
use wlpoly::sequences::{
    classical_laguerre_upto, hermite_upto, modified_jacobi_upto, modified_laguerre_upto,
};

fn coeff() -> impl Strategy<Value = BigRational> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn poly() -> impl Strategy<Value = MPoly> {
    proptest::collection::vec(((0u32..4, 0u32..3, 0u32..2), coeff()), 0..5).prop_map(|terms| {
        MPoly::from_terms(terms.into_iter().map(|((a, b, c), k)| ([a, b, c], k)))
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&p - &p, MPoly::zero());
    }

    #[test]
    fn multiplication_is_commutative_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &MPoly::one(), p.clone());
    }

    #[test]
    fn multiplication_distributes(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn derivative_is_linear(p in poly(), q in poly(), c in coeff()) {
        let combined = &p + &q.scale(&c);
        prop_assert_eq!(combined.derivative_x(), &p.derivative_x() + &q.derivative_x().scale(&c));
    }

    #[test]
    fn derivative_obeys_leibniz(p in poly(), q in poly()) {
        let lhs = (&p * &q).derivative_x();
        let rhs = &(&p.derivative_x() * &q) + &(&p * &q.derivative_x());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(p in poly(), q in poly(), s in poly()) {
        for v in [Var::X, Var::Alpha, Var::Beta] {
            prop_assert_eq!((&p * &q).substitute(v, &s), &p.substitute(v, &s) * &q.substitute(v, &s));
            prop_assert_eq!((&p + &q).substitute(v, &s), &p.substitute(v, &s) + &q.substitute(v, &s));
        }
    }

    #[test]
    fn evaluation_agrees_with_constant_substitution(p in poly(), c in coeff()) {
        prop_assert_eq!(p.eval(Var::Alpha, &c), p.substitute(Var::Alpha, &MPoly::constant(c.clone())));
    }
}

#[test]
fn appell_property_up_to_twelve() {
    let laguerre = modified_laguerre_upto(12);
    let hermite = hermite_upto(12);
    let jacobi = modified_jacobi_upto(12, &ratio(2, 7), &ratio(5, 3)).unwrap();
    for family in [&laguerre, &hermite, &jacobi] {
        for n in 1..=12 {
            assert_eq!(family[n].derivative_x(), family[n - 1].scale_int(n as i64), "n={n}");
            assert!(family[n].is_monic_x());
            assert_eq!(family[n].degree_x(), Some(n as u32));
        }
    }
}

/// `n L_n^{(α)} = (-x+α+1) L_{n-1}^{(α+1)} - x L_{n-2}^{(α+2)}`
#[test]
fn classical_mixed_parameter_identity() {
    let l = classical_laguerre_upto(10);
    let shift = |p: &MPoly, k: i64| p.substitute(Var::Alpha, &(&MPoly::alpha() + &MPoly::from_int(k)));
    let x = MPoly::x();
    for n in 2..=10 {
        let lhs = l[n].scale_int(n as i64);
        let first = &(&(&MPoly::alpha() - &x) + &MPoly::one()) * &shift(&l[n - 1], 1);
        let second = &x * &shift(&l[n - 2], 2);
        assert_eq!(lhs, &first - &second, "n={n}");
    }
}

#[test]
fn classical_low_degree_values() {
    let l = classical_laguerre_upto(2);
    // L_2^{(α)}(x) = x²/2 - (α+2) x + (α+1)(α+2)/2
    let expected: MPoly = "1/2*x^2 - a*x - 2*x + 1/2*a^2 + 3/2*a + 1".parse().unwrap();
    assert_eq!(l[2], expected);
    assert_eq!(l[0], MPoly::constant(rat(1)));
}
