use super::families::{compare, k1_2n, k2_1n};
use super::*;
use crate::daha::word_eval;
use crate::exact::op_vars::mono;
use crate::exact::{RationalFn, Scalar};
use crate::qdiff::{ch, make_g, Operator};
use crate::report::Level;

fn scaled_g(n: i32, c: Scalar, u: i32) -> Operator {
    make_g(n).scale_by(&RationalFn::from_poly(crate::exact::op_vars::cmono(c, [u, 0, 0, 0, 0])))
}

#[test]
fn full_suite_passes() {
    let r = verify_skein();
    assert!(r.all_pass(), "{}", r.render_table());
}

#[test]
fn first_presentation_holds_plain() {
    for id in RelationId::ALL.into_iter().filter(|r| r.designated() == Level::Plain) {
        let r = verify_relation(id);
        assert!(r.checks.iter().all(|c| c.level == Level::Plain), "{}", r.render_table());
    }
}

#[test]
fn perturbed_coefficient_breaks_relation() {
    let r = verify_negative_controls(RelationId::from_name("kk_11").unwrap());
    assert!(r.all_pass());
    assert!(r.checks.iter().all(|c| c.level == Level::Neither));
}

#[test]
fn dictionary_examples() {
    assert_eq!(curve_operator(&CurveSpec::plain(CurveName::K1)).unwrap(), ch([0, 0, 1, 0, 0]));
    assert_eq!(curve_operator(&CurveSpec::plain(CurveName::B2)).unwrap(), ch([0, 0, 0, 0, 1]));
    let twisted = curve_operator(&CurveSpec::parse("k2", "1^2").unwrap()).unwrap();
    assert_eq!(twisted, scaled_g(2, Scalar::i(), -3));
    let (route, e) = word_route(&CurveSpec::parse("k2", "1,1").unwrap()).unwrap();
    assert!(!e);
    assert_eq!(route, twisted);
}

#[test]
fn family_examples() {
    assert_eq!(k1_2n(1), make_g(-1).scale(&Scalar::i()));
    assert_eq!(k1_2n(0), ch([0, 0, 1, 0, 0]));
    assert!(compare(&k1_2n(1), &dictionary(CurveName::K12)).0 <= Level::ESided);
    assert_eq!(k2_1n(-1), scaled_g(-1, Scalar::i(), 0));
}

#[test]
fn twist_formula_signs() {
    let r = twist_formula_check(CurveName::K1, CurveName::K2).unwrap();
    assert!(r.all_pass(), "{}", r.render_table());
    assert_eq!(r.get("twist/k1/k2/twist+1/formula-1").unwrap().level, Level::Plain);
    assert_eq!(r.get("twist/k1/k2/twist+1/formula+1").unwrap().level, Level::Neither);
    let (minus, _) = word_route(&CurveSpec::new(CurveName::K2, &[-1])).unwrap();
    assert_eq!(minus, k2_1n(-1));
}

#[test]
fn twist_formula_rejects_disjoint_pair() {
    assert!(twist_formula_check(CurveName::K1, CurveName::K3).is_err());
    assert!(twist_formula_check(CurveName::K12, CurveName::K1).is_err());
}

#[test]
fn torus_type_word_forms() {
    let r = verify_family(Family::K1TorusType, [0]);
    let first = r.get("k_12^2_1^-n/n=0/word_form_1").unwrap();
    assert_eq!(first.level, Level::Neither);
    assert!(r.get("k_12^2_1^-n/n=0/corrected_form_1").unwrap().pass);
    let r = verify_family(Family::K3TorusType, [0]);
    assert!(r.all_pass(), "{}", r.render_table());
    assert!(r.get("k_32^2_1^-n/n=0/d0_part").unwrap().pass);
}

#[test]
fn word_route_matches_explicit_k12() {
    let (w, e) = base_word(CurveName::K12).unwrap();
    assert!(e);
    let d = &word_eval(&w) - &dictionary(CurveName::K12);
    assert!(crate::daha::e_sided(&d).is_zero());
    let off = &d + &Operator::mul_by_poly(mono(1, [0; 5]));
    assert!(!crate::daha::e_sided(&off).is_zero());
}
