//! Trace map into the `z` variables, the log-canonical Poisson bracket and
//! the classical twists on the ring generated by curves.

use crate::error::{Error, Result};
use crate::exact::{poly_substitute, ratfn_sqrt, Context, LaurentPoly, Monomial, RationalFn, Scalar, Substitution};

use super::seed::{ExchangeMatrix, N};

const Z: Context = Context::Cluster;
const K: Context = Context::KRing;

/// Indices of the curve ring variables.
pub mod kvars {
    pub const K1: usize = 0;
    pub const K2: usize = 1;
    pub const K3: usize = 2;
    pub const K12: usize = 3;
    pub const K23: usize = 4;
    pub const K123: usize = 5;
    pub const B1: usize = 6;
    pub const B2: usize = 7;
}

/// Curves with a trace expression.
pub const TRACE_CURVES: [&str; 8] = ["k1", "k2", "k3", "k12", "k23", "k123", "b1", "b2"];

fn zsum(terms: &[[i32; N]]) -> LaurentPoly {
    LaurentPoly::from_terms(Z, terms.iter().map(|a| (Monomial::from_slice(a), Scalar::one())))
}

/// Trace expression of a curve variable of the curve ring.
pub fn trace_var(v: usize) -> LaurentPoly {
    match v {
        kvars::K1 => zsum(&[[0, 1, 1, 0, 1, 0], [0, 1, -1, 0, 1, 0], [0, -1, -1, 0, 1, 0], [0, -1, -1, 0, -1, 0]]),
        kvars::K2 => zsum(&[[1, 0, 1, 0, 0, 1], [1, 0, 1, 0, 0, -1], [-1, 0, 1, 0, 0, -1], [-1, 0, -1, 0, 0, -1]]),
        kvars::K3 => zsum(&[[0, 1, 0, 1, 0, 1], [0, 1, 0, -1, 0, 1], [0, -1, 0, -1, 0, 1], [0, -1, 0, -1, 0, -1]]),
        kvars::K123 => zsum(&[[1, 0, 0, 1, 1, 0], [1, 0, 0, 1, -1, 0], [-1, 0, 0, 1, -1, 0], [-1, 0, 0, -1, -1, 0]]),
        kvars::K12 => zsum(&[
            [1, 1, 0, 0, 1, 1],
            [1, -1, 0, 0, 1, 1],
            [1, -1, 0, 0, 1, -1],
            [1, -1, 0, 0, -1, 1],
            [1, -1, 0, 0, -1, -1],
            [-1, -1, 0, 0, -1, -1],
        ]),
        kvars::K23 => zsum(&[
            [1, 1, 1, 1, 0, 0],
            [-1, 1, 1, 1, 0, 0],
            [-1, 1, 1, -1, 0, 0],
            [-1, 1, -1, 1, 0, 0],
            [-1, 1, -1, -1, 0, 0],
            [-1, -1, -1, -1, 0, 0],
        ]),
        kvars::B1 => zsum(&[[0, 0, 1, 1, 1, 1], [0, 0, -1, -1, -1, -1]]),
        kvars::B2 => zsum(&[[2, 2, 1, 1, 1, 1], [-2, -2, -1, -1, -1, -1]]),
        _ => panic!("curve ring has eight variables"),
    }
}

/// Trace expression of a named curve.
pub fn trace_expr(name: &str) -> Result<LaurentPoly> {
    TRACE_CURVES
        .iter()
        .position(|&c| c == name)
        .map(trace_var)
        .ok_or_else(|| Error::Unsupported(format!("no trace expression for '{name}'")))
}

/// Substitutes the trace expressions into a curve ring element.
pub fn trace_of(e: &LaurentPoly) -> RationalFn {
    let images: Vec<RationalFn> = (0..8).map(|v| RationalFn::from_poly(trace_var(v))).collect();
    let mut acc = RationalFn::zero(Z);
    for (m, c) in e.terms() {
        let mut t = RationalFn::constant(Z, c.clone());
        for (v, img) in images.iter().enumerate() {
            if m.0[v] != 0 {
                t = &t * &img.pow(m.0[v]).expect("trace images are nonzero");
            }
        }
        acc = &acc + &t;
    }
    acc
}

/// `z_j ∂f/∂z_j`.
pub fn euler(f: &RationalFn, j: usize) -> RationalFn {
    let d_poly = |p: &LaurentPoly| {
        LaurentPoly::from_terms(p.context(), p.terms().iter().map(|(m, c)| (*m, c * &Scalar::from_int(m.0[j] as i64))))
    };
    let dens: Vec<LaurentPoly> =
        f.den_factors().iter().flat_map(|(fac, k)| std::iter::repeat_n(fac.poly().clone(), *k as usize)).collect();
    let mut out = RationalFn::frac(d_poly(f.num()), &dens);
    for (fac, k) in f.den_factors() {
        let dlog = RationalFn::frac(d_poly(fac.poly()), std::slice::from_ref(fac.poly()));
        out = &out - &(&f.scale(&Scalar::from_int(*k as i64)) * &dlog);
    }
    out
}

/// Log-canonical bracket `{z_j, z_k} = b_jk z_j z_k / 4`, extended by
/// bilinearity and the Leibniz rule.
pub fn poisson_bracket_with(b: &ExchangeMatrix, f: &RationalFn, g: &RationalFn) -> RationalFn {
    let df: Vec<RationalFn> = (0..N).map(|j| euler(f, j)).collect();
    let dg: Vec<RationalFn> = (0..N).map(|j| euler(g, j)).collect();
    let mut acc = RationalFn::zero(Z);
    for (j, dfj) in df.iter().enumerate() {
        for (k, dgk) in dg.iter().enumerate() {
            let bjk = b.get(j, k);
            if bjk != 0 && !dfj.is_zero() && !dgk.is_zero() {
                acc = &acc + &(dfj * dgk).scale(&Scalar::from_int(bjk as i64));
            }
        }
    }
    acc.scale(&Scalar::from_ratio(1, 4))
}

/// Bracket over the initial exchange matrix.
pub fn poisson_bracket(f: &RationalFn, g: &RationalFn) -> RationalFn {
    poisson_bracket_with(&ExchangeMatrix::initial(), f, g)
}

fn kv(v: usize) -> LaurentPoly {
    LaurentPoly::var(K, v)
}

/// Images of the six curve generators under the classical twist `a`;
/// boundary curves are fixed.
pub fn classical_twist_images(a: u8) -> Result<[LaurentPoly; 6]> {
    use kvars::*;
    let prod = |i: usize, j: usize| &kv(i) * &kv(j);
    Ok(match a {
        1 => [kv(K1), &prod(K1, K2) - &kv(K12), kv(K3), kv(K2), &prod(K1, K23) - &kv(K123), kv(K23)],
        2 => [kv(K12), kv(K2), &prod(K2, K3) - &kv(K23), &prod(K2, K12) - &kv(K1), kv(K3), kv(K123)],
        3 => [kv(K1), kv(K23), kv(K3), kv(K123), &prod(K3, K23) - &kv(K2), &prod(K3, K123) - &kv(K12)],
        _ => return Err(Error::Unsupported(format!("no classical twist {a}"))),
    })
}

/// Applies the classical twist `a` to a curve ring element.
pub fn classical_twist(a: u8, e: &LaurentPoly) -> Result<LaurentPoly> {
    let rules: Vec<(usize, Substitution)> = classical_twist_images(a)?
        .into_iter()
        .enumerate()
        .map(|(v, img)| (v, Substitution::General(RationalFn::from_poly(img))))
        .collect();
    let r = poly_substitute(e, &rules)?;
    r.as_poly().cloned().ok_or_else(|| Error::Consistency("twist image is not a polynomial".into()))
}

/// Applies twists to `e`; `D_{a,b,…}(e) = D_a(D_b(…(e)))`.
pub fn classical_twist_word(word: &[u8], e: &LaurentPoly) -> Result<LaurentPoly> {
    word.iter().rev().try_fold(e.clone(), |acc, &a| classical_twist(a, &acc))
}

/// `trace(e)` with each `y_i` replaced by `images[i]`: every monomial
/// `z^a` becomes the square root of `∏ images[i]^{a_i}`.
pub fn trace_under_y_map(e: &RationalFn, images: &[RationalFn; N]) -> Result<RationalFn> {
    let map_poly = |p: &LaurentPoly| -> Result<RationalFn> {
        let mut acc = RationalFn::zero(Z);
        for (m, c) in p.terms() {
            let mut prod = RationalFn::one(Z);
            for (i, img) in images.iter().enumerate() {
                if m.0[i] != 0 {
                    prod = &prod * &img.pow(m.0[i])?;
                }
            }
            acc = &acc + &ratfn_sqrt(&prod)?.scale(c);
        }
        Ok(acc)
    };
    let num = map_poly(e.num())?;
    let mut den = RationalFn::one(Z);
    for (fac, k) in e.den_factors() {
        den = &den * &map_poly(fac.poly())?.pow(*k as i32)?;
    }
    num.try_div(&den)
}
