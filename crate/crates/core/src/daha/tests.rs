use std::time::Instant;

use super::*;
use crate::exact::op_vars::mono;
use crate::exact::{RationalFn, Scalar};
use crate::qdiff::{ch, make_g, Operator};

fn gp(s: &str) -> GenPoly {
    GenPoly::parse(s).unwrap()
}

fn ev(s: &str) -> Operator {
    word_eval(&gp(s))
}

fn sh(s: &str) -> Operator {
    word_eval(&word_sh(&gp(s)).unwrap())
}

#[test]
fn inverses_multiply_to_identity() {
    for l in ["T0", "T1", "X", "U0"] {
        assert_eq!(ev(&format!("{l} {l}^-1")), Operator::identity(), "{l}");
        let a = &ev(l) * &ev(&format!("{l}^-1"));
        assert_eq!(a, Operator::identity(), "{l} explicit");
    }
}

#[test]
fn hecke_relations() {
    let t = Instant::now();
    let i = Scalar::i();
    let mi = Scalar::gaussian(0, -1);
    let ch_x0 = ch([0, 0, 1, 0, 0]).scale(&mi);
    assert_eq!(sh("T0"), ch_x0);
    assert_eq!(sh("[(1/1+0/1i)*u^-2] T0^-1 X"), ch_x0);
    assert_eq!(sh("[(1/1+0/1i)*u^-2] X T0^-1"), ch_x0);
    assert_eq!(sh("T1"), ch([-2, 0, 0, 1, 0]).scale(&mi));
    assert_eq!(sh("T1 X"), ch([0, 0, 0, 0, 1]).scale(&i));
    let g0 = make_g(0).scale_by(&RationalFn::from_poly(mono(1, [-1, 0, 0, 0, 0])));
    assert_eq!(sh("U0"), g0);
    assert_eq!(sh("[(1/1+0/1i)*u^-2] U0^-1 X"), g0);
    assert_eq!(sh("[(1/1+0/1i)*u^-2] X U0^-1"), g0);
    assert_eq!(ev("T0^-1 U0 T0 U0^-1 X"), Operator::mul_by_poly(mono(-1, [4, 0, 0, 0, 0])));
    eprintln!("hecke {:?}", t.elapsed());
}

#[test]
fn idempotent_relations() {
    let e = idempotent();
    assert_eq!(&e * &e, e);
    let c = RationalFn::from_poly(crate::exact::op_vars::cmono(Scalar::gaussian(0, -1), [2, 0, 0, -1, 0]));
    assert_eq!(&ev("T1") * &e, e.scale_by(&c));
    assert_eq!(&e * &ev("T1"), e.scale_by(&c));
    let cinv = c.inv().unwrap();
    assert_eq!(&ev("T1^-1") * &e, e.scale_by(&cinv));
    assert_eq!(&e * &ev("T1^-1"), e.scale_by(&cinv));
}

#[test]
fn phi_values() {
    use num_bigint::BigInt;
    let b = |v: &[i64]| PhiPoly(v.iter().map(|&c| BigInt::from(c)).collect());
    assert_eq!(phi(2), b(&[1, 0, 1]));
    assert_eq!(phi(-1), b(&[]));
    assert_eq!(phi(-2), b(&[1]));
    assert_eq!(phi(-3), b(&[0, -1]));
}

#[test]
fn u_n_forms_agree() {
    for n in -3..=3 {
        u_n(n).unwrap();
    }
}

#[test]
fn suites_pass() {
    let r = verify_daha();
    assert!(r.all_pass(), "{}", r.render_table());
}

#[test]
fn phi_matches_chebyshev() {
    use crate::exact::{Context, LaurentPoly, Monomial};
    // i^{-n} φ_n(i (t + t^{-1})) = (t^{n+1} - t^{-n-1}) / (t - t^{-1})
    let c = Context::Cluster;
    let t = |k: i32| LaurentPoly::monomial(c, Monomial::var(0, k));
    let arg = (&t(1) + &t(-1)).scale(&Scalar::i());
    for n in 0..=6 {
        let mut val = LaurentPoly::zero(c);
        let mut pw = LaurentPoly::one(c);
        for k in phi(n).coeffs() {
            let k = Scalar::new(
                num_rational::BigRational::from_integer(k.clone()),
                num_rational::BigRational::from_integer(0.into()),
            );
            val = &val + &pw.scale(&k);
            pw = &pw * &arg;
        }
        let lhs = RationalFn::from_poly(val.scale(&Scalar::i_pow(-(n as i64))));
        let rhs = RationalFn::from_poly(&t(n + 1) - &t(-n - 1)).try_div(&RationalFn::from_poly(&t(1) - &t(-1))).unwrap();
        assert_eq!(lhs, rhs, "n={n}");
    }
}
