//! Operator images of the generators and of words in them.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use rayon::prelude::*;

use super::word::{Gen, GenPoly, Letter, Word};
use crate::error::{Error, Result};
use crate::exact::op_vars::{mono, poly};
use crate::exact::{LaurentPoly, RationalFn, Scalar};
use crate::qdiff::{ch, make_g, make_k, Operator};

fn f(p: LaurentPoly) -> Operator {
    Operator::mul_by_poly(p)
}

fn fr(r: RationalFn) -> Operator {
    Operator::mul_by(r)
}

/// `u^2 - x`.
fn sqrt_q_minus_x() -> LaurentPoly {
    poly(&[(1, [2, 0, 0, 0, 0]), (-1, [0, 1, 0, 0, 0])])
}

fn t0() -> Operator {
    let i = Scalar::i();
    // i x/(u^2 - x) · ( -(u^2 + x0^2 x)/(x0 x) s ð + x0 + x0^{-1} )
    let pre = RationalFn::frac(mono(1, [0, 1, 0, 0, 0]), &[sqrt_q_minus_x()]).scale(&i);
    let shift_coeff = RationalFn::frac(poly(&[(-1, [2, 0, 0, 0, 0]), (-1, [0, 1, 2, 0, 0])]), &[mono(1, [0, 1, 1, 0, 0])]);
    let inner = &(&fr(shift_coeff) * &(&Operator::s() * &Operator::dx(1))) + &ch([0, 0, 1, 0, 0]);
    &fr(pre) * &inner
}

fn t1() -> Operator {
    let i = Scalar::i();
    // (b1 b2 + u^2 x)(b1 + u^2 b2 x) / (u^2 b1 b2 (1 - x)(1 + x))
    let num = &poly(&[(1, [0, 0, 0, 1, 1]), (1, [2, 1, 0, 0, 0])]) * &poly(&[(1, [0, 0, 0, 1, 0]), (1, [2, 1, 0, 0, 1])]);
    let r = RationalFn::frac(
        num,
        &[mono(1, [2, 0, 0, 1, 1]), poly(&[(1, [0; 5]), (-1, [0, 1, 0, 0, 0])]), poly(&[(1, [0; 5]), (1, [0, 1, 0, 0, 0])])],
    );
    let s_minus_1 = &Operator::s() - &Operator::identity();
    let body = &f(mono(-1, [2, 0, 0, -1, 0])) + &(&fr(r) * &s_minus_1);
    body.scale(&i)
}

/// `U_n` from its explicit two-term form:
/// `u^{-(n+1)} x/(u^2 - x) (K_n(x0; x^{-1}) s ð - G_n(x0; x))`.
pub fn u_n_explicit(n: i32) -> Operator {
    let pre = RationalFn::frac(mono(1, [-(n + 1), 1, 0, 0, 0]), &[sqrt_q_minus_x()]);
    let k = &make_k(n).invert_x() * &(&Operator::s() * &Operator::dx(1));
    &fr(pre) * &(&k - &make_g(n))
}

fn build(letter: Letter, inverse: bool) -> Operator {
    let i = Scalar::i();
    match (letter, inverse) {
        (Letter::T0, false) => t0(),
        (Letter::T0, true) => &t0() + &ch([0, 0, 1, 0, 0]).scale(&i),
        (Letter::T1, false) => t1(),
        (Letter::T1, true) => &t1() + &ch([-2, 0, 0, 1, 0]).scale(&i),
        (Letter::X, false) => f(mono(1, [0, 1, 0, 0, 0])),
        (Letter::X, true) => f(mono(1, [0, -1, 0, 0, 0])),
        (Letter::U0, false) => u_n_explicit(0),
        (Letter::U0, true) => &u_n_explicit(0) - &make_g(0).scale_by(&RationalFn::from_poly(mono(1, [-1, 0, 0, 0, 0]))),
    }
}

fn base_images() -> &'static HashMap<(Letter, bool), Operator> {
    static IMAGES: OnceLock<HashMap<(Letter, bool), Operator>> = OnceLock::new();
    IMAGES.get_or_init(|| Letter::ALL.iter().flat_map(|&l| [(l, false), (l, true)]).map(|k| (k, build(k.0, k.1))).collect())
}

fn power_cache() -> &'static Mutex<HashMap<Gen, Operator>> {
    static CACHE: OnceLock<Mutex<HashMap<Gen, Operator>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Operator image of a generator power. Inverse letters come from the
/// quadratic relations rather than from generic inversion.
pub fn gen_operator(g: Gen) -> Operator {
    let base = &base_images()[&(g.letter, g.power < 0)];
    if g.power.abs() == 1 {
        return base.clone();
    }
    if let Some(op) = power_cache().lock().expect("cache lock").get(&g) {
        return op.clone();
    }
    let op = base.pow(g.power.unsigned_abs());
    power_cache().lock().expect("cache lock").insert(g, op.clone());
    op
}

fn eval_word(w: &Word) -> Operator {
    let mut acc = Operator::identity();
    for g in w.gens() {
        acc = &acc * &gen_operator(*g);
    }
    acc
}

/// Homomorphic image of a generator polynomial.
pub fn word_eval(p: &GenPoly) -> Operator {
    let parts: Vec<(RationalFn, Operator)> = p.terms().par_bridge().map(|(w, c)| (c.clone(), eval_word(w))).collect();
    crate::qdiff::op_linear(parts.iter().map(|(c, op)| (c.clone(), op)))
}

/// The idempotent `e = b1/(q - b1^2) · (-b1 + i q^{1/2} T1)`.
pub fn idempotent() -> Operator {
    static E: OnceLock<Operator> = OnceLock::new();
    E.get_or_init(|| {
        let pre = RationalFn::frac(
            mono(1, [0, 0, 0, 1, 0]),
            &[poly(&[(1, [2, 0, 0, 0, 0]), (-1, [0, 0, 0, 1, 0])]), poly(&[(1, [2, 0, 0, 0, 0]), (1, [0, 0, 0, 1, 0])])],
        );
        let body =
            &f(mono(-1, [0, 0, 0, 1, 0])) + &t1().scale_by(&RationalFn::from_poly(mono(1, [2, 0, 0, 0, 0])).scale(&Scalar::i()));
        body.scale_by(&pre)
    })
    .clone()
}

/// `op · e`.
pub fn e_sided(op: &Operator) -> Operator {
    op * &idempotent()
}

/// Equality after right multiplication by the idempotent.
pub fn spherical_eq(a: &Operator, b: &Operator) -> bool {
    e_sided(&(a - b)).is_zero()
}

/// Word form `i^{-n} q^{n/4} U0 T0^{-n}`.
pub fn u_n_word(n: i32) -> GenPoly {
    let unit = super::Unit::scaled(
        Scalar::i_pow(-n as i64),
        n,
        Word::from_gens([Gen::new(Letter::U0, 1)]).concat(&Word::gen(Letter::T0, -n)),
    );
    GenPoly::from_unit(unit)
}

/// `U_n`, checked against both of its descriptions.
pub fn u_n(n: i32) -> Result<Operator> {
    let explicit = u_n_explicit(n);
    if word_eval(&u_n_word(n)) != explicit {
        return Err(Error::Consistency(format!("word and explicit forms of U_{n} differ")));
    }
    Ok(explicit)
}
