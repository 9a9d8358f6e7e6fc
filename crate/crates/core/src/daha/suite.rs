//! Report-producing checks of the Hecke-type relations, the automorphisms
//! and the `U_n` family.

use rayon::prelude::*;

use super::{automorphism, idempotent, u_n_explicit, u_n_word, word_eval, word_sh, Automorphism, GenPoly, Letter, Word};
use crate::exact::op_vars::{cmono, mono};
use crate::exact::{RationalFn, Scalar};
use crate::qdiff::{ch, make_g, Operator};
use crate::report::{Check, Level, Report};

fn gp(s: &str) -> GenPoly {
    GenPoly::parse(s).expect("well-formed word")
}

fn ev(s: &str) -> Operator {
    word_eval(&gp(s))
}

fn sh(s: &str) -> Operator {
    word_eval(&word_sh(&gp(s)).expect("unit"))
}

fn u(k: i32) -> RationalFn {
    RationalFn::from_poly(mono(1, [k, 0, 0, 0, 0]))
}

/// Plain equality check.
pub fn eq_check(id: impl Into<String>, a: &Operator, b: &Operator) -> Check {
    let d = a - b;
    let zero = d.is_zero();
    Check::new(id, if zero { Level::Plain } else { Level::Neither }, zero, d.term_count())
}

/// Check that passes when `a` and `b` differ.
pub fn differ_check(id: impl Into<String>, a: &Operator, b: &Operator) -> Check {
    let d = a - b;
    let zero = d.is_zero();
    Check::new(id, if zero { Level::Plain } else { Level::Neither }, !zero, d.term_count()).with_detail("negative control")
}

/// Quadratic relations of the generators, the mixed relation with `X`, and
/// the idempotent.
pub fn verify_hecke() -> Report {
    let mi = Scalar::gaussian(0, -1);
    let i = Scalar::i();
    let jobs: Vec<Box<dyn Fn() -> Check + Send + Sync>> = vec![
        Box::new(move || eq_check("hecke/sh_T0", &sh("T0"), &ch([0, 0, 1, 0, 0]).scale(&Scalar::gaussian(0, -1)))),
        Box::new(move || {
            eq_check("hecke/sh_T0inv_X", &sh("[(1/1+0/1i)*u^-2] T0^-1 X"), &ch([0, 0, 1, 0, 0]).scale(&Scalar::gaussian(0, -1)))
        }),
        Box::new(move || {
            eq_check("hecke/sh_X_T0inv", &sh("[(1/1+0/1i)*u^-2] X T0^-1"), &ch([0, 0, 1, 0, 0]).scale(&Scalar::gaussian(0, -1)))
        }),
        Box::new(move || eq_check("hecke/sh_T1", &sh("T1"), &ch([-2, 0, 0, 1, 0]).scale(&mi))),
        Box::new(move || eq_check("hecke/sh_T1_X", &sh("T1 X"), &ch([0, 0, 0, 0, 1]).scale(&i))),
        Box::new(|| eq_check("hecke/sh_U0", &sh("U0"), &make_g(0).scale_by(&u(-1)))),
        Box::new(|| eq_check("hecke/sh_U0inv_X", &sh("[(1/1+0/1i)*u^-2] U0^-1 X"), &make_g(0).scale_by(&u(-1)))),
        Box::new(|| eq_check("hecke/sh_X_U0inv", &sh("[(1/1+0/1i)*u^-2] X U0^-1"), &make_g(0).scale_by(&u(-1)))),
        Box::new(|| {
            eq_check("hecke/T0inv_U0_T0_U0inv_X", &ev("T0^-1 U0 T0 U0^-1 X"), &Operator::mul_by_poly(mono(-1, [4, 0, 0, 0, 0])))
        }),
        Box::new(|| {
            let e = idempotent();
            eq_check("hecke/e_squared", &(&e * &e), &e)
        }),
        Box::new(|| {
            let e = idempotent();
            let c = RationalFn::from_poly(cmono(Scalar::gaussian(0, -1), [2, 0, 0, -1, 0]));
            eq_check("hecke/T1_e", &(&ev("T1") * &e), &e.scale_by(&c))
        }),
        Box::new(|| {
            let e = idempotent();
            eq_check("hecke/e_T1", &(&e * &ev("T1")), &(&ev("T1") * &e))
        }),
        Box::new(|| {
            let e = idempotent();
            eq_check("hecke/e_T1inv", &(&e * &ev("T1^-1")), &(&ev("T1^-1") * &e))
        }),
        Box::new(|| {
            let checks: Vec<bool> =
                Letter::ALL.iter().map(|l| ev(&format!("{} {}^-1", l.name(), l.name())) == Operator::identity()).collect();
            let ok = checks.iter().all(|&b| b);
            Check::new("hecke/inverses", if ok { Level::Plain } else { Level::Neither }, ok, 0)
        }),
        Box::new(|| differ_check("hecke/negative/sh_T0_sign", &sh("T0"), &ch([0, 0, 1, 0, 0]).scale(&Scalar::i()))),
    ];
    Report::new(jobs.par_iter().map(Check::timed).collect())
}

fn gen(l: Letter) -> GenPoly {
    GenPoly::from_word(Word::gen(l, 1))
}

fn compose_all(ids: &[u8]) -> Automorphism {
    ids.iter().fold(Automorphism::identity(), |acc, &i| acc.compose(&automorphism(i, 1).expect("valid index")))
}

/// Images of each generator under `a` and `b` agree in the representation.
fn auto_eq(id: &str, a: &Automorphism, b: &Automorphism) -> Vec<Check> {
    Letter::ALL
        .iter()
        .map(|&l| eq_check(format!("{id}/{}", l.name()), &word_eval(&a.apply(&gen(l))), &word_eval(&b.apply(&gen(l)))))
        .collect()
}

/// Braid relations, the order-four relation up to conjugation by `T1`, the
/// two-chain relation and inverses of the automorphisms.
pub fn verify_automorphisms() -> Report {
    let mut checks = Vec::new();
    checks.extend(auto_eq("auto/T13=T31", &compose_all(&[1, 3]), &compose_all(&[3, 1])));
    checks.extend(auto_eq("auto/T121=T212", &compose_all(&[1, 2, 1]), &compose_all(&[2, 1, 2])));
    checks.extend(auto_eq("auto/T232=T323", &compose_all(&[2, 3, 2]), &compose_all(&[3, 2, 3])));
    let p4 = compose_all(&[1, 2, 3]).pow(4);
    for l in Letter::ALL {
        let img = word_eval(&p4.apply(&gen(l)));
        checks.push(eq_check(format!("auto/T123^4/{}", l.name()), &img, &ev(&format!("T1^-1 {} T1", l.name()))));
    }
    let p6 = compose_all(&[1, 2]).pow(6);
    for l in Letter::ALL {
        let img = word_eval(&p6.apply(&gen(l)));
        let expected = match l {
            Letter::T0 | Letter::U0 => ev(&format!("X {} X^-1", l.name())),
            _ => ev(l.name()),
        };
        checks.push(eq_check(format!("auto/T12^6/{}", l.name()), &img, &expected));
    }
    for i in 1..=3u8 {
        let a = automorphism(i, 1).expect("valid").compose(&automorphism(i, -1).expect("valid"));
        let b = automorphism(i, -1).expect("valid").compose(&automorphism(i, 1).expect("valid"));
        checks.extend(auto_eq(&format!("auto/T{i}_inverse_left"), &a, &Automorphism::identity()));
        checks.extend(auto_eq(&format!("auto/T{i}_inverse_right"), &b, &Automorphism::identity()));
    }
    let t12 = compose_all(&[1, 2]);
    let t21 = compose_all(&[2, 1]);
    checks.push(differ_check(
        "auto/negative/T12!=T21",
        &word_eval(&t12.apply(&gen(Letter::U0))),
        &word_eval(&t21.apply(&gen(Letter::U0))),
    ));
    Report::new(checks)
}

/// For each `n`: word and explicit forms of `U_n`, `sh(U_n) = q^{-(n+1)/4} G_n`,
/// both products with `ch(x0)`, and `G_n T1 = T1 G_n`.
pub fn verify_u_n(ns: impl IntoIterator<Item = i32>) -> Report {
    let ns: Vec<i32> = ns.into_iter().collect();
    let chx0 = ch([0, 0, 1, 0, 0]);
    let t1 = ev("T1");
    let checks: Vec<Check> = ns
        .par_iter()
        .flat_map(|&n| {
            let un = u_n_explicit(n);
            let (um, up) = (u_n_explicit(n - 1), u_n_explicit(n + 1));
            let g = make_g(n);
            vec![
                eq_check(format!("u_n/n={n}/word_form"), &word_eval(&u_n_word(n)), &un),
                eq_check(format!("u_n/n={n}/sh"), &word_eval(&word_sh(&u_n_word(n)).expect("unit")), &g.scale_by(&u(-(n + 1)))),
                eq_check(format!("u_n/n={n}/U_ch_x0"), &(&un * &chx0), &(&um.scale_by(&u(1)) + &up.scale_by(&u(-1)))),
                eq_check(format!("u_n/n={n}/ch_x0_U"), &(&chx0 * &un), &(&um.scale_by(&u(-1)) + &up.scale_by(&u(1)))),
                eq_check(format!("u_n/n={n}/G_T1"), &(&g * &t1), &(&t1 * &g)),
            ]
        })
        .collect();
    let mut r = Report::new(checks);
    r.extend(Report::new(vec![differ_check(
        "u_n/negative/U_ch_x0_swapped",
        &(&u_n_explicit(1) * &chx0),
        &(&u_n_explicit(0).scale_by(&u(-1)) + &u_n_explicit(2).scale_by(&u(1))),
    )]));
    r
}

/// All checks of this module.
pub fn verify_daha() -> Report {
    let mut r = verify_hecke();
    r.extend(verify_automorphisms());
    r.extend(verify_u_n(-3..=3));
    r
}
