//! Residuals of the identities satisfied by `G_n` and `K_n`; each function
//! returns `lhs - rhs`, which must be the zero operator.

use super::{make_g, make_k, Operator};
use crate::exact::op_vars::{mono, poly};
use crate::exact::RationalFn;
use crate::report::{Check, Level, Report};
use rayon::prelude::*;

fn f(p: crate::exact::LaurentPoly) -> Operator {
    Operator::mul_by_poly(p)
}

/// `K_n(x0; x) G_n(x0; q x) - G_n(x0; x) K_n(x0; x)`.
pub fn kg_commutator(n: i32) -> Operator {
    let k = make_k(n);
    let g = make_g(n);
    &(&k * &g.shift_x(1)) - &(&g * &k)
}

/// `K_n(x0; x^{-1}) K_n(x0; q^{-1} x) - G_n^2 + q^{n/2} x^{-1} (q^{1/2} - x)^2`.
pub fn kk_minus_gg(n: i32) -> Operator {
    let k = make_k(n);
    let g = make_g(n);
    let lhs = &(&k.invert_x() * &k.shift_x(-1)) - &(&g * &g);
    // u^{2n} x^{-1} (u^4 - 2 u^2 x + x^2)
    let rhs = poly(&[(-1, [2 * n + 4, -1, 0, 0, 0]), (2, [2 * n + 2, 0, 0, 0, 0]), (-1, [2 * n, 1, 0, 0, 0])]);
    &lhs - &f(rhs)
}

/// Residuals of the row-vector recursion for `(K_{n+1}(x0; x^{-1}), G_{n+1}(x0; x))`;
/// the matrix entries act after the operators, i.e. multiply from the right.
pub fn recursion_k_g(n: i32) -> (Operator, Operator) {
    let c = RationalFn::frac(mono(1, [2, 0, 0, 0, 0]), &[poly(&[(1, [2, 0, 0, 0, 0]), (-1, [0, 1, 0, 0, 0])])]);
    let m11 = f(poly(&[(-1, [0, 1, 1, 0, 0]), (-1, [0, 1, -1, 0, 0])]));
    let m12 = f(poly(&[(-1, [0, 1, -1, 0, 0]), (-1, [2, 0, 1, 0, 0])]));
    let m21 = f(poly(&[(1, [2, 0, -1, 0, 0]), (1, [0, 1, 1, 0, 0])]));
    let m22 = f(poly(&[(1, [2, 0, 1, 0, 0]), (1, [2, 0, -1, 0, 0])]));
    let k = make_k(n).invert_x();
    let g = make_g(n);
    let next_k = (&(&k * &m11) + &(&g * &m21)).scale_by(&c);
    let next_g = (&(&k * &m12) + &(&g * &m22)).scale_by(&c);
    (&next_k - &make_k(n + 1).invert_x(), &next_g - &make_g(n + 1))
}

/// `ch(x0) G_n - G_{n-1} - G_{n+1}`.
pub fn ch_x0_times_g(n: i32) -> Operator {
    let lhs = &super::ch([0, 0, 1, 0, 0]) * &make_g(n);
    &(&lhs - &make_g(n - 1)) - &make_g(n + 1)
}

/// `G_n ch(x0) - q^{1/2} G_{n-1} - q^{-1/2} G_{n+1}`.
pub fn g_times_ch_x0(n: i32) -> Operator {
    let lhs = &make_g(n) * &super::ch([0, 0, 1, 0, 0]);
    let a = make_g(n - 1).scale_by(&RationalFn::from_poly(mono(1, [2, 0, 0, 0, 0])));
    let b = make_g(n + 1).scale_by(&RationalFn::from_poly(mono(1, [-2, 0, 0, 0, 0])));
    &(&lhs - &a) - &b
}

fn residual_check(id: String, r: &Operator) -> Check {
    let zero = r.is_zero();
    Check::new(id, if zero { Level::Plain } else { Level::Neither }, zero, r.term_count())
}

/// Every identity above for each `n`, plus a perturbed copy that must fail.
pub fn verify_qdiff(ns: impl IntoIterator<Item = i32>) -> Report {
    let ns: Vec<i32> = ns.into_iter().collect();
    let mut checks: Vec<Check> = ns
        .par_iter()
        .flat_map(|&n| {
            vec![
                Check::timed(|| residual_check(format!("qdiff/n={n}/KG=GK"), &kg_commutator(n))),
                Check::timed(|| residual_check(format!("qdiff/n={n}/KK-GG"), &kk_minus_gg(n))),
                Check::timed(|| residual_check(format!("qdiff/n={n}/recursion_1"), &recursion_k_g(n).0)),
                Check::timed(|| residual_check(format!("qdiff/n={n}/recursion_2"), &recursion_k_g(n).1)),
                Check::timed(|| residual_check(format!("qdiff/n={n}/ch_x0_G"), &ch_x0_times_g(n))),
                Check::timed(|| residual_check(format!("qdiff/n={n}/G_ch_x0"), &g_times_ch_x0(n))),
            ]
        })
        .collect();
    let wrong = &kk_minus_gg(1) + &Operator::identity();
    checks.push(
        Check::new(
            "qdiff/negative/KK-GG+1",
            if wrong.is_zero() { Level::Plain } else { Level::Neither },
            !wrong.is_zero(),
            wrong.term_count(),
        )
        .with_detail("negative control"),
    );
    Report::new(checks)
}
