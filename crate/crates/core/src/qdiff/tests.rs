use super::*;
use crate::exact::op_vars::{mono, one, poly, rf};

fn f(p: LaurentPoly) -> Operator {
    Operator::mul_by_poly(p)
}

#[test]
fn shift_moves_coefficients() {
    let x = f(mono(1, [0, 1, 0, 0, 0]));
    let lhs = &Operator::dx(1) * &x;
    let rhs = &f(mono(1, [4, 1, 0, 0, 0])) * &Operator::dx(1);
    assert_eq!(lhs, rhs);
    assert_eq!(&Operator::s() * &Operator::s(), Operator::identity());
    assert_eq!(&Operator::s() * &Operator::dx(1), &Operator::dx(-1) * &Operator::s());
}

#[test]
fn linear_combination_cancels() {
    let a = &make_g(0) + &Operator::s();
    let z = op_linear([(one(), &a), (rf(mono(-1, [0; 5])), &a)]);
    assert!(z.is_zero());
}

#[test]
fn actions_on_functions() {
    let x3 = rf(mono(1, [0, 3, 0, 0, 0]));
    assert_eq!(Operator::dx(1).apply(&x3), rf(mono(1, [12, 3, 0, 0, 0])));
    let chx = rf(poly(&[(1, [0, 1, 0, 0, 0]), (1, [0, -1, 0, 0, 0])]));
    assert_eq!(Operator::s().apply(&chx), chx);
    let x02 = rf(mono(1, [0, 0, 2, 0, 0]));
    assert_eq!(Operator::dx0(1).apply(&x02), rf(mono(1, [4, 0, 2, 0, 0])));
}

#[test]
fn g0_on_constant_is_sum_of_coefficients() {
    let g = make_g(0);
    let expect = &g.coeff(ShiftKey::new(0, 0, 1)) + &g.coeff(ShiftKey::new(0, 0, -1));
    assert_eq!(g.apply(&one()), expect);
}

#[test]
fn composition_matches_action() {
    let a = &(&make_g(1) * &Operator::s()) + &f(mono(2, [1, 1, 0, 0, 0]));
    let b = &(&Operator::dx(1) * &make_k(-1)) + &Operator::dx(-2);
    let ab = &a * &b;
    let test_fn =
        RationalFn::frac(poly(&[(1, [0, 2, 1, 0, 0]), (3, [0, 0, 0, 1, 0])]), &[poly(&[(1, [0; 5]), (1, [0, 1, 0, 0, 0])])]);
    assert_eq!(ab.apply(&test_fn), a.apply(&b.apply(&test_fn)));
}

#[test]
fn w_matches_hand_expansion() {
    // (b1 b2 + u^2 x)(b1 + b2 u^2 x)(u^2 x + x0^2) expanded by hand
    let num = poly(&[
        (1, [2, 1, 0, 2, 1]),
        (1, [0, 0, 2, 2, 1]),
        (1, [4, 2, 0, 1, 2]),
        (1, [2, 1, 2, 1, 2]),
        (1, [4, 2, 0, 1, 0]),
        (1, [2, 1, 2, 1, 0]),
        (1, [6, 3, 0, 0, 1]),
        (1, [4, 2, 2, 0, 1]),
    ]);
    let den = poly(&[(1, [2, 0, 1, 1, 1]), (-1, [2, 2, 1, 1, 1]), (-1, [4, 1, 1, 1, 1]), (1, [4, 3, 1, 1, 1])]);
    let expanded = RationalFn::new(-num, den).unwrap();
    assert!(make_w(Sign::Plus).eq_exact(&expanded));
    let inv = make_w(Sign::Plus).substitute(&[(X, crate::exact::Substitution::Invert)]).unwrap();
    assert!(make_w(Sign::Minus).eq_exact(&inv));
}

#[test]
fn json_round_trip() {
    let g = &make_k(2) * &Operator::s();
    let back = Operator::from_json(&g.to_json()).unwrap();
    assert_eq!(back.to_json(), g.to_json());
}

#[test]
fn gk_identities_hold() {
    for n in -3..=3 {
        assert!(identities::kg_commutator(n).is_zero(), "K G = G K at n={n}");
        assert!(identities::kk_minus_gg(n).is_zero(), "K K - G G at n={n}");
        assert!(identities::ch_x0_times_g(n).is_zero(), "ch(x0) G at n={n}");
        assert!(identities::g_times_ch_x0(n).is_zero(), "G ch(x0) at n={n}");
    }
    for n in -3..=2 {
        let (a, b) = identities::recursion_k_g(n);
        assert!(a.is_zero() && b.is_zero(), "recursion at n={n}");
    }
}

#[test]
fn perturbed_identity_fails() {
    let wrong = &identities::kk_minus_gg(1) + &Operator::identity();
    assert!(!wrong.is_zero());
}

#[test]
fn suite_report() {
    let r = identities::verify_qdiff(-2..=2);
    assert!(r.all_pass(), "{}", r.render_table());
    assert_eq!(r.total(), 5 * 6 + 1);
}
